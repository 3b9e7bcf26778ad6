//! Global supermultiplets: component fields plus N supercharges squaring to
//! the time derivative.
//!
//! A multiplet is described by its field content `(k_0, k_1, k_2, ...)`:
//! `k_i` component fields of scaling dimension `lambda + i/2`, bosonic for
//! even i and fermionic for odd i, with equal boson and fermion totals. The
//! root multiplets (N, N) for N = 1, 2, 4, 8 carry supercharges built from a
//! minimal Clifford family; every other content in scope is obtained by
//! dressing, i.e. conjugating by diagonal powers of the time derivative and
//! keeping the supercharges that stay local.

use crate::clifford::{CliffordError, CliffordFamily};
use crate::diffop::{
    ConstLaurentOperator, DiffEntry, DiffOpError, FieldSlot, GradedOperator, LambdaValue, OpLimits,
    Parity, SlotList,
};
use crate::exact::{rat, rat_int};
use std::fmt;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MultipletError {
    #[error("invalid field content `{0}`: {1}")]
    InvalidContent(String, String),
    #[error("unsupported supercharge count {0}: root multiplets exist for N = 1, 2, 4, 8")]
    UnsupportedN(usize),
    #[error("Clifford family has {got} generators of size {size}, need {need} of size {n}")]
    FamilyShape { got: usize, size: usize, need: usize, n: usize },
    #[error("supersymmetry relation {{Q_{i}, Q_{j}}} = 2 delta_ij H violated")]
    SusyRelation { i: usize, j: usize },
    #[error("supercharge entry ({row},{col}) breaks the dimension bookkeeping: d^{power} between offsets {from} and {to}")]
    OffsetRule { row: usize, col: usize, power: u32, from: String, to: String },
    #[error("N=7 construction violated: expected 7 local supercharges, found {0}")]
    N7Violation(usize),
    #[error(transparent)]
    Clifford(#[from] CliffordError),
    #[error(transparent)]
    DiffOp(#[from] DiffOpError),
}

/// Field content: entry i counts the components at dimension offset i/2.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldContent {
    counts: Vec<usize>,
}

impl FieldContent {
    pub fn new(counts: Vec<usize>) -> Result<Self, MultipletError> {
        let shown = format!(
            "({})",
            counts.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")
        );
        let mut counts = counts;
        while counts.last() == Some(&0) {
            counts.pop();
        }
        if counts.is_empty() {
            return Err(MultipletError::InvalidContent(shown, "no fields".into()));
        }
        let bosons: usize = counts.iter().step_by(2).sum();
        let fermions: usize = counts.iter().skip(1).step_by(2).sum();
        if bosons != fermions {
            return Err(MultipletError::InvalidContent(
                shown,
                format!("{bosons} bosons vs {fermions} fermions"),
            ));
        }
        Ok(FieldContent { counts })
    }

    /// Accepts `"d,n"` (shorthand for `(d, n, n-d)`) or a full count list
    /// `"k0,k1,..."`, optionally parenthesized.
    pub fn parse(s: &str) -> Result<Self, MultipletError> {
        let trimmed = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts: Result<Vec<usize>, _> = trimmed
            .split(',')
            .map(|p| p.trim().parse::<usize>())
            .collect();
        let parts = parts
            .map_err(|e| MultipletError::InvalidContent(s.to_string(), e.to_string()))?;
        match parts.as_slice() {
            [d, n] => {
                if d > n {
                    return Err(MultipletError::InvalidContent(
                        s.to_string(),
                        format!("{d} fields of dimension lambda with only {n} supercharges"),
                    ));
                }
                FieldContent::new(vec![*d, *n, *n - *d])
            }
            _ => FieldContent::new(parts),
        }
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    pub fn total_bosons(&self) -> usize {
        self.counts.iter().step_by(2).sum()
    }

    pub fn total_fermions(&self) -> usize {
        self.counts.iter().skip(1).step_by(2).sum()
    }

    /// Content of the (d, n, n-d) family.
    pub fn graded(d: usize, n: usize) -> Result<Self, MultipletError> {
        if d > n {
            return Err(MultipletError::InvalidContent(
                format!("({d},{n},?)"),
                "more dimension-lambda fields than supercharges".into(),
            ));
        }
        FieldContent::new(vec![d, n, n - d])
    }

    /// Slot list in canonical order: bosons by ascending offset, then
    /// fermions by ascending offset.
    pub fn slots(&self) -> SlotList {
        let mut bosons = Vec::new();
        let mut fermions = Vec::new();
        for (i, &count) in self.counts.iter().enumerate() {
            let offset = rat(i as i64, 2);
            for _ in 0..count {
                if i % 2 == 0 {
                    bosons.push(FieldSlot::new(
                        format!("x{}", bosons.len() + 1),
                        Parity::Even,
                        offset.clone(),
                    ));
                } else {
                    fermions.push(FieldSlot::new(
                        format!("psi{}", fermions.len() + 1),
                        Parity::Odd,
                        offset.clone(),
                    ));
                }
            }
        }
        bosons.extend(fermions);
        Arc::new(bosons)
    }
}

impl fmt::Display for FieldContent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({})",
            self.counts
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

/// A supermultiplet with verified global supersymmetry.
#[derive(Debug, Clone)]
pub struct GlobalMultiplet {
    slots: SlotList,
    supercharges: Vec<GradedOperator>,
    content: FieldContent,
}

/// `H = d` on every component.
pub fn hamiltonian(slots: &SlotList) -> GradedOperator {
    GradedOperator::diagonal(slots.clone(), LambdaValue::Symbolic, |_, _| {
        DiffEntry::from_scalar(1, rat_int(1))
    })
}

impl GlobalMultiplet {
    pub fn slots(&self) -> &SlotList {
        &self.slots
    }

    pub fn supercharges(&self) -> &[GradedOperator] {
        &self.supercharges
    }

    pub fn n_supercharges(&self) -> usize {
        self.supercharges.len()
    }

    pub fn content(&self) -> &FieldContent {
        &self.content
    }

    /// The root multiplet (N, N): N bosons at offset 0, N fermions at 1/2,
    /// supercharges from the minimal Clifford family of N-1 generators.
    pub fn root(n: usize) -> Result<Self, MultipletError> {
        if !matches!(n, 1 | 2 | 4 | 8) {
            return Err(MultipletError::UnsupportedN(n));
        }
        Self::root_with(n, &CliffordFamily::minimal(n - 1, n)?)
    }

    /// Root multiplet over an explicitly supplied Clifford family (any
    /// family equivalent to the minimal one gives an equivalent multiplet).
    pub fn root_with(n: usize, family: &CliffordFamily) -> Result<Self, MultipletError> {
        if !matches!(n, 1 | 2 | 4 | 8) {
            return Err(MultipletError::UnsupportedN(n));
        }
        if family.len() != n - 1 || family.size() != n {
            return Err(MultipletError::FamilyShape {
                got: family.len(),
                size: family.size(),
                need: n - 1,
                n,
            });
        }
        family.verify()?;
        let content = FieldContent::new(vec![n, n])?;
        let slots = content.slots();
        let mut supercharges = Vec::with_capacity(n);
        for i in 0..n {
            // sigma_i is the i-th Clifford generator; the last supercharge
            // uses the identity
            let sigma = |r: usize, c: usize| -> i64 {
                if i < n - 1 {
                    family.generator(i)[r][c]
                } else {
                    (r == c) as i64
                }
            };
            let mut q = GradedOperator::zero(Parity::Odd, slots.clone(), LambdaValue::Symbolic);
            for b in 0..n {
                for f in 0..n {
                    let v = sigma(b, f);
                    if v != 0 {
                        // boson <- fermion: multiplication only
                        q.set_entry(b, n + f, DiffEntry::from_scalar(0, rat_int(v)))?;
                    }
                    let vt = sigma(f, b);
                    if vt != 0 {
                        // fermion <- boson: transpose times d
                        q.set_entry(n + b, f, DiffEntry::from_scalar(1, rat_int(vt)))?;
                    }
                }
            }
            supercharges.push(q);
        }
        let multiplet = GlobalMultiplet { slots, supercharges, content };
        multiplet.verify()?;
        Ok(multiplet)
    }

    /// Checks `{Q_i, Q_j} = 2 delta_ij H` and the dimension bookkeeping of
    /// every supercharge entry: a `d^k` term between slots of offsets
    /// `delta_c -> delta_r` requires `k = 1/2 + delta_r - delta_c`.
    pub fn verify(&self) -> Result<(), MultipletError> {
        let limits = OpLimits::default();
        let h2 = hamiltonian(&self.slots).scale(&rat_int(2));
        for i in 0..self.supercharges.len() {
            for j in i..self.supercharges.len() {
                let br = self.supercharges[i].bracket(&self.supercharges[j], &limits)?;
                let expected = if i == j {
                    h2.clone()
                } else {
                    GradedOperator::zero(Parity::Even, self.slots.clone(), LambdaValue::Symbolic)
                };
                if br != expected {
                    return Err(MultipletError::SusyRelation { i, j });
                }
            }
        }
        for q in &self.supercharges {
            for ((r, c), e) in q.entries() {
                for (k, _) in e.terms() {
                    let expected =
                        rat(1, 2) + &self.slots[r].dim_offset - &self.slots[c].dim_offset;
                    if rat_int(k as i64) != expected {
                        return Err(MultipletError::OffsetRule {
                            row: r,
                            col: c,
                            power: k,
                            from: crate::exact::format_rational(&self.slots[c].dim_offset),
                            to: crate::exact::format_rational(&self.slots[r].dim_offset),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// Conjugates by `d` on the given slots (raising their dimension by
    /// one), keeps the supercharges that remain local, and returns the
    /// dressed multiplet with slots re-sorted to canonical order along with
    /// the indices of the kept supercharges.
    pub fn dress(&self, dressed: &[usize]) -> Result<(Self, Vec<usize>), MultipletError> {
        let mut shifts = vec![0i64; self.slots.len()];
        for &i in dressed {
            assert!(i < self.slots.len(), "dressed slot out of range");
            shifts[i] = 1;
        }
        // new offsets, then the canonical sort: bosons first, by offset,
        // ties in original order
        let mut new_slots: Vec<FieldSlot> = self
            .slots
            .iter()
            .zip(&shifts)
            .map(|(s, &sh)| {
                let mut s = s.clone();
                s.dim_offset += rat_int(sh);
                s
            })
            .collect();
        let mut order: Vec<usize> = (0..new_slots.len()).collect();
        order.sort_by(|&a, &b| {
            let sa = &new_slots[a];
            let sb = &new_slots[b];
            (sa.parity, &sa.dim_offset, a).cmp(&(sb.parity, &sb.dim_offset, b))
        });
        let mut position = vec![0usize; new_slots.len()];
        for (new, &old) in order.iter().enumerate() {
            position[old] = new;
        }
        new_slots = order.iter().map(|&i| new_slots[i].clone()).collect();
        let sorted: SlotList = Arc::new(new_slots);

        let mut kept = Vec::new();
        let mut supercharges = Vec::new();
        for (qi, q) in self.supercharges.iter().enumerate() {
            let laurent = ConstLaurentOperator::from_graded(q)?.conjugate_by_shifts(&shifts);
            if !laurent.is_local() {
                continue;
            }
            let local = laurent.localize(self.slots.clone())?;
            let mut permuted =
                GradedOperator::zero(Parity::Odd, sorted.clone(), LambdaValue::Symbolic);
            for ((r, c), e) in local.entries() {
                permuted.set_entry(position[r], position[c], e.clone())?;
            }
            kept.push(qi);
            supercharges.push(permuted);
        }

        let mut counts = Vec::new();
        for (i, slot) in sorted.iter().enumerate() {
            let twice = &slot.dim_offset * rat_int(2);
            let idx = if twice.is_integer() {
                num::ToPrimitive::to_usize(twice.numer())
            } else {
                None
            };
            let idx = idx.ok_or_else(|| {
                MultipletError::InvalidContent(
                    format!("slot {i}"),
                    "offset is not a non-negative half-integer".into(),
                )
            })?;
            if counts.len() <= idx {
                counts.resize(idx + 1, 0);
            }
            counts[idx] += 1;
        }
        let content = FieldContent::new(counts)?;
        let out = GlobalMultiplet { slots: sorted, supercharges, content };
        out.verify()?;
        Ok((out, kept))
    }

    /// Builds the (d, n, n-d) multiplet: the root with the last n-d bosons
    /// dressed. All n supercharges survive.
    pub fn graded(d: usize, n: usize) -> Result<Self, MultipletError> {
        Self::graded_with(d, n, &CliffordFamily::minimal(n.saturating_sub(1), n)?)
    }

    pub fn graded_with(d: usize, n: usize, family: &CliffordFamily) -> Result<Self, MultipletError> {
        if d > n {
            return Err(MultipletError::InvalidContent(
                format!("({d},{n},?)"),
                "more dimension-lambda fields than supercharges".into(),
            ));
        }
        let root = Self::root_with(n, family)?;
        if d == n {
            return Ok(root);
        }
        let dressed: Vec<usize> = (d..n).collect();
        let (out, kept) = root.dress(&dressed)?;
        debug_assert_eq!(kept.len(), n, "dressing bosons keeps every supercharge");
        Ok(out)
    }

    /// The (1, 7, 7, 1) multiplet: dress seven of the eight root bosons and
    /// the matching fermion. Exactly seven supercharges stay local; the one
    /// built on the identity block does not.
    pub fn n7() -> Result<Self, MultipletError> {
        Self::n7_with(&CliffordFamily::minimal(7, 8)?)
    }

    pub fn n7_with(family: &CliffordFamily) -> Result<Self, MultipletError> {
        let root = Self::root_with(8, family)?;
        // slots 1..8 are the bosons x2..x8, slot 8 is the fermion psi1
        let dressed: Vec<usize> = (1..8).chain([8]).collect();
        let (out, kept) = root.dress(&dressed)?;
        if kept.len() != 7 {
            return Err(MultipletError::N7Violation(kept.len()));
        }
        Ok(out)
    }

    /// Builds the multiplet for a content in scope: (d, n, n-d) for
    /// n in {1, 2, 4, 8}, or (1, 7, 7, 1).
    pub fn build(content: &FieldContent) -> Result<Self, MultipletError> {
        match content.counts() {
            [1, 7, 7, 1] => Self::n7(),
            [d, n] => Self::graded(*d, *n).and_then(|m| Self::check_content(m, content)),
            [d, n, rest] if d + rest == *n => {
                Self::graded(*d, *n).and_then(|m| Self::check_content(m, content))
            }
            _ => Err(MultipletError::InvalidContent(
                content.to_string(),
                "not a (d, n, n-d) content or (1,7,7,1)".into(),
            )),
        }
    }

    fn check_content(m: Self, content: &FieldContent) -> Result<Self, MultipletError> {
        debug_assert_eq!(m.content(), content);
        Ok(m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn content_validation() {
        assert!(FieldContent::new(vec![1, 8, 7]).is_ok());
        assert!(FieldContent::new(vec![1, 7, 7, 1]).is_ok());
        assert!(FieldContent::new(vec![4, 8, 4]).is_ok());
        // unbalanced
        assert!(FieldContent::new(vec![2, 8, 7]).is_err());
        assert!(FieldContent::new(vec![]).is_err());
        // trailing zeros normalize away
        assert_eq!(
            FieldContent::new(vec![8, 8, 0]).unwrap(),
            FieldContent::new(vec![8, 8]).unwrap()
        );
    }

    #[test]
    fn content_parsing() {
        assert_eq!(
            FieldContent::parse("1,8").unwrap(),
            FieldContent::new(vec![1, 8, 7]).unwrap()
        );
        assert_eq!(
            FieldContent::parse("(4,8,4)").unwrap(),
            FieldContent::new(vec![4, 8, 4]).unwrap()
        );
        assert_eq!(
            FieldContent::parse("1,7,7,1").unwrap(),
            FieldContent::new(vec![1, 7, 7, 1]).unwrap()
        );
        assert_eq!(FieldContent::parse("8,8").unwrap().to_string(), "(8,8)");
        assert!(FieldContent::parse("9,8").is_err());
        assert!(FieldContent::parse("x,y").is_err());
    }

    #[test]
    fn roots_verify_for_all_n() {
        for n in [1, 2, 4, 8] {
            let m = GlobalMultiplet::root(n).unwrap();
            assert_eq!(m.n_supercharges(), n);
            assert_eq!(m.content().counts(), &[n, n]);
        }
        assert!(matches!(
            GlobalMultiplet::root(3),
            Err(MultipletError::UnsupportedN(3))
        ));
    }

    #[test]
    fn n1_root_is_the_textbook_pair() {
        let m = GlobalMultiplet::root(1).unwrap();
        let q = &m.supercharges()[0];
        assert_eq!(q.entry(0, 1).unwrap(), &DiffEntry::from_scalar(0, rat_int(1)));
        assert_eq!(q.entry(1, 0).unwrap(), &DiffEntry::from_scalar(1, rat_int(1)));
    }

    #[test]
    fn graded_multiplets_keep_all_supercharges() {
        for (d, n) in [(0, 4), (1, 4), (2, 4), (3, 4), (0, 8), (1, 8), (4, 8), (8, 8)] {
            let m = GlobalMultiplet::graded(d, n).unwrap();
            assert_eq!(m.n_supercharges(), n, "(d,n) = ({d},{n})");
            assert_eq!(m.content(), &FieldContent::graded(d, n).unwrap());
        }
    }

    #[test]
    fn n7_has_exactly_seven_supercharges() {
        let m = GlobalMultiplet::n7().unwrap();
        assert_eq!(m.n_supercharges(), 7);
        assert_eq!(m.content().counts(), &[1, 7, 7, 1]);
    }

    #[test]
    fn n7_offsets_come_out_sorted() {
        let m = GlobalMultiplet::n7().unwrap();
        let offsets: Vec<String> = m
            .slots()
            .iter()
            .map(|s| crate::exact::format_rational(&s.dim_offset))
            .collect();
        assert_eq!(
            offsets,
            vec!["0", "1", "1", "1", "1", "1", "1", "1", "1/2", "1/2", "1/2", "1/2", "1/2", "1/2", "1/2", "3/2"]
        );
    }

    #[test]
    fn dressing_a_lone_fermion_kills_the_supercharge() {
        let root = GlobalMultiplet::root(1).unwrap();
        let (out, kept) = root.dress(&[1]).unwrap();
        assert!(kept.is_empty());
        assert_eq!(out.n_supercharges(), 0);
    }

    #[test]
    fn build_covers_the_scope() {
        for s in ["1,8,7", "4,8,4", "0,4,4", "1,7,7,1", "2,2,0", "1,1"] {
            let content = FieldContent::parse(s).unwrap();
            let m = GlobalMultiplet::build(&content).unwrap();
            assert_eq!(m.content(), &content, "{s}");
        }
        let bad = FieldContent::new(vec![2, 4, 0, 0, 2]).unwrap();
        assert!(GlobalMultiplet::build(&bad).is_err());
    }

    #[test]
    fn conjugated_family_builds_the_same_content() {
        let fam = CliffordFamily::minimal(7, 8).unwrap();
        let conj = fam.conjugate_by_signed_permutation(
            &[2, 0, 1, 5, 3, 4, 7, 6],
            &[1, 1, -1, 1, -1, 1, 1, -1],
        );
        let m = GlobalMultiplet::n7_with(&conj).unwrap();
        assert_eq!(m.content().counts(), &[1, 7, 7, 1]);
        let g = GlobalMultiplet::graded_with(1, 8, &conj).unwrap();
        assert_eq!(g.content().counts(), &[1, 8, 7]);
    }
}
