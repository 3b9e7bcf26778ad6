//! Matrix differential operators in one variable, graded by field parity.
//!
//! An operator acts on a column of component fields (the slots). Each matrix
//! entry is a polynomial differential operator `sum_k f_k(t) d^k` with exact
//! rational coefficients; `d` is the time derivative. Operators carry a
//! parity, and a nonzero entry may only couple slots whose parities differ by
//! exactly that parity. Composition uses the Leibniz rule to pull
//! derivatives through coefficient functions, so brackets of operators are
//! again operators of the same shape.
//!
//! The constant-coefficient Laurent variant [`ConstLaurentOperator`] admits
//! negative powers of `d`; it exists so that conjugation by diagonal powers
//! of `d` (the dressing that moves component fields to higher dimension
//! slots) can be performed formally and then checked for locality.

use crate::exact::{format_rational, rat_int, Rational};
use crate::poly::Poly;
use crate::span::{FlatKey, FlatVec};
use num::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn combine(self, other: Parity) -> Parity {
        if self == other {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

/// One component field: a name, a parity, and its scaling dimension measured
/// relative to the multiplet's base dimension λ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldSlot {
    pub label: String,
    pub parity: Parity,
    pub dim_offset: Rational,
}

impl FieldSlot {
    pub fn new(label: impl Into<String>, parity: Parity, dim_offset: Rational) -> Self {
        FieldSlot {
            label: label.into(),
            parity,
            dim_offset,
        }
    }
}

pub type SlotList = Arc<Vec<FieldSlot>>;

/// Scaling dimension attached to an operator: either a concrete rational or
/// symbolic, meaning the operator is λ-independent and valid at every value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LambdaValue {
    Symbolic,
    Fixed(Rational),
}

impl LambdaValue {
    fn unify(&self, other: &LambdaValue) -> Result<LambdaValue, DiffOpError> {
        match (self, other) {
            (LambdaValue::Symbolic, v) | (v, LambdaValue::Symbolic) => Ok(v.clone()),
            (LambdaValue::Fixed(a), LambdaValue::Fixed(b)) => {
                if a == b {
                    Ok(self.clone())
                } else {
                    Err(DiffOpError::LambdaMismatch(
                        format_rational(a),
                        format_rational(b),
                    ))
                }
            }
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DiffOpError {
    #[error("d-power cap exceeded: d^{power} with cap {cap}")]
    PartialCapExceeded { power: u32, cap: u32 },
    #[error("nonlocal operator: entry ({row},{col}) carries d^{power}")]
    NonlocalOperator { row: usize, col: usize, power: i64 },
    #[error("slot lists differ between operands")]
    SlotMismatch,
    #[error("operators built at different scaling dimensions: {0} vs {1}")]
    LambdaMismatch(String, String),
    #[error("entry ({row},{col}) is not constant in t")]
    NotConstant { row: usize, col: usize },
    #[error("entry ({row},{col}) couples slots of incompatible parity")]
    ParityViolation { row: usize, col: usize },
    #[error("slot index {index} out of range for {len} slots")]
    SlotIndex { index: usize, len: usize },
}

/// Composition caps. `max_partial` bounds the derivative order any single
/// entry may reach; exceeding it is reported as an error rather than silently
/// truncated.
#[derive(Debug, Clone, Copy)]
pub struct OpLimits {
    pub max_partial: u32,
}

impl Default for OpLimits {
    fn default() -> Self {
        OpLimits { max_partial: 3 }
    }
}

/// One matrix entry: `sum_k f_k(t) d^k`, keyed by the derivative order `k`.
/// Zero polynomials are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DiffEntry {
    terms: BTreeMap<u32, Poly>,
}

fn binomial(n: u32, k: u32) -> Rational {
    let mut acc = Rational::one();
    for j in 0..k {
        acc = acc * rat_int((n - j) as i64) / rat_int((j + 1) as i64);
    }
    acc
}

impl DiffEntry {
    pub fn zero() -> Self {
        DiffEntry::default()
    }

    /// `f(t) d^k`.
    pub fn from_poly(k: u32, f: Poly) -> Self {
        let mut terms = BTreeMap::new();
        if !f.is_zero() {
            terms.insert(k, f);
        }
        DiffEntry { terms }
    }

    /// `c d^k`.
    pub fn from_scalar(k: u32, c: Rational) -> Self {
        DiffEntry::from_poly(k, Poly::constant(c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &Poly)> {
        self.terms.iter().map(|(k, f)| (*k, f))
    }

    pub fn add(&self, other: &DiffEntry) -> DiffEntry {
        let mut out = self.terms.clone();
        for (&k, f) in &other.terms {
            let slot = out.entry(k).or_insert_with(Poly::zero);
            *slot = slot.add(f);
        }
        out.retain(|_, f| !f.is_zero());
        DiffEntry { terms: out }
    }

    pub fn scale(&self, c: &Rational) -> DiffEntry {
        if c.is_zero() {
            return DiffEntry::zero();
        }
        DiffEntry {
            terms: self.terms.iter().map(|(&k, f)| (k, f.scale(c))).collect(),
        }
    }

    pub fn neg(&self) -> DiffEntry {
        self.scale(&rat_int(-1))
    }

    /// Operator composition by the Leibniz rule:
    /// `f d^k . g d^m = sum_j C(k,j) f g^(j) d^(k+m-j)`.
    pub fn compose(&self, other: &DiffEntry, limits: &OpLimits) -> Result<DiffEntry, DiffOpError> {
        let mut out: BTreeMap<u32, Poly> = BTreeMap::new();
        for (&k, f) in &self.terms {
            for (&m, g) in &other.terms {
                let mut gderiv = g.clone();
                for j in 0..=k {
                    if gderiv.is_zero() {
                        break;
                    }
                    let coeff = binomial(k, j);
                    let term = f.mul(&gderiv).scale(&coeff);
                    if !term.is_zero() {
                        let power = k + m - j;
                        if power > limits.max_partial {
                            return Err(DiffOpError::PartialCapExceeded {
                                power,
                                cap: limits.max_partial,
                            });
                        }
                        let slot = out.entry(power).or_insert_with(Poly::zero);
                        *slot = slot.add(&term);
                    }
                    gderiv = gderiv.derivative();
                }
            }
        }
        out.retain(|_, f| !f.is_zero());
        Ok(DiffEntry { terms: out })
    }

    pub fn max_partial_order(&self) -> u32 {
        self.terms.keys().last().copied().unwrap_or(0)
    }

    pub fn max_t_degree(&self) -> u32 {
        self.terms
            .values()
            .filter_map(|f| f.degree())
            .max()
            .unwrap_or(0) as u32
    }

    /// Canonical text: terms `c * t^a * d^k` sorted by (k, a) descending.
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (&k, f) in self.terms.iter().rev() {
            for (a, c) in f.coeffs().iter().enumerate().rev() {
                if c.is_zero() {
                    continue;
                }
                parts.push(format!("{} * t^{} * d^{}", format_rational(c), a, k));
            }
        }
        parts.join(" + ")
    }
}

/// A parity-graded matrix differential operator over a fixed slot list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedOperator {
    parity: Parity,
    slots: SlotList,
    lambda: LambdaValue,
    entries: BTreeMap<(usize, usize), DiffEntry>,
}

impl GradedOperator {
    pub fn zero(parity: Parity, slots: SlotList, lambda: LambdaValue) -> Self {
        GradedOperator {
            parity,
            slots,
            lambda,
            entries: BTreeMap::new(),
        }
    }

    /// Builds a diagonal even operator entry by entry.
    pub fn diagonal(
        slots: SlotList,
        lambda: LambdaValue,
        mut f: impl FnMut(usize, &FieldSlot) -> DiffEntry,
    ) -> Self {
        let mut op = GradedOperator::zero(Parity::Even, slots.clone(), lambda);
        for (i, slot) in slots.iter().enumerate() {
            let e = f(i, slot);
            if !e.is_zero() {
                op.entries.insert((i, i), e);
            }
        }
        op
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn slots(&self) -> &SlotList {
        &self.slots
    }

    pub fn lambda(&self) -> &LambdaValue {
        &self.lambda
    }

    /// Retags the operator with a scaling dimension. Entries are unchanged:
    /// this is how λ-independent global operators are specialized before
    /// entering λ-dependent brackets.
    pub fn with_lambda(&self, lambda: LambdaValue) -> GradedOperator {
        let mut out = self.clone();
        out.lambda = lambda;
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entry(&self, row: usize, col: usize) -> Option<&DiffEntry> {
        self.entries.get(&(row, col))
    }

    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), &DiffEntry)> {
        self.entries.iter().map(|(&rc, e)| (rc, e))
    }

    pub fn set_entry(&mut self, row: usize, col: usize, e: DiffEntry) -> Result<(), DiffOpError> {
        let len = self.slots.len();
        for index in [row, col] {
            if index >= len {
                return Err(DiffOpError::SlotIndex { index, len });
            }
        }
        if e.is_zero() {
            self.entries.remove(&(row, col));
            return Ok(());
        }
        let coupling = self.slots[row].parity.combine(self.slots[col].parity);
        if coupling != self.parity {
            return Err(DiffOpError::ParityViolation { row, col });
        }
        self.entries.insert((row, col), e);
        Ok(())
    }

    fn check_slots(&self, other: &GradedOperator) -> Result<(), DiffOpError> {
        if !Arc::ptr_eq(&self.slots, &other.slots) && self.slots != other.slots {
            return Err(DiffOpError::SlotMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &GradedOperator) -> Result<GradedOperator, DiffOpError> {
        self.check_slots(other)?;
        assert_eq!(self.parity, other.parity, "cannot add operators of opposite parity");
        let lambda = self.lambda.unify(&other.lambda)?;
        let mut entries = self.entries.clone();
        for (&rc, e) in &other.entries {
            let slot = entries.entry(rc).or_insert_with(DiffEntry::zero);
            *slot = slot.add(e);
        }
        entries.retain(|_, e| !e.is_zero());
        Ok(GradedOperator {
            parity: self.parity,
            slots: self.slots.clone(),
            lambda,
            entries,
        })
    }

    pub fn scale(&self, c: &Rational) -> GradedOperator {
        let mut out = self.clone();
        if c.is_zero() {
            out.entries.clear();
        } else {
            for e in out.entries.values_mut() {
                *e = e.scale(c);
            }
        }
        out
    }

    pub fn sub(&self, other: &GradedOperator) -> Result<GradedOperator, DiffOpError> {
        self.add(&other.scale(&rat_int(-1)))
    }

    pub fn compose(
        &self,
        other: &GradedOperator,
        limits: &OpLimits,
    ) -> Result<GradedOperator, DiffOpError> {
        self.check_slots(other)?;
        let lambda = self.lambda.unify(&other.lambda)?;
        let mut entries: BTreeMap<(usize, usize), DiffEntry> = BTreeMap::new();
        for (&(r, s), ea) in &self.entries {
            for (&(_, c), eb) in other.entries.range((s, 0)..=(s, usize::MAX)) {
                let term = ea.compose(eb, limits)?;
                if !term.is_zero() {
                    let slot = entries.entry((r, c)).or_insert_with(DiffEntry::zero);
                    *slot = slot.add(&term);
                }
            }
        }
        entries.retain(|_, e| !e.is_zero());
        Ok(GradedOperator {
            parity: self.parity.combine(other.parity),
            slots: self.slots.clone(),
            lambda,
            entries,
        })
    }

    /// Graded bracket: the anticommutator when both operators are odd, the
    /// commutator otherwise.
    pub fn bracket(
        &self,
        other: &GradedOperator,
        limits: &OpLimits,
    ) -> Result<GradedOperator, DiffOpError> {
        let ab = self.compose(other, limits)?;
        let ba = other.compose(self, limits)?;
        if self.parity.is_odd() && other.parity.is_odd() {
            ab.add(&ba)
        } else {
            ab.sub(&ba)
        }
    }

    pub fn max_partial_order(&self) -> u32 {
        self.entries
            .values()
            .map(|e| e.max_partial_order())
            .max()
            .unwrap_or(0)
    }

    pub fn max_t_degree(&self) -> u32 {
        self.entries
            .values()
            .map(|e| e.max_t_degree())
            .max()
            .unwrap_or(0)
    }

    /// Flattens to a sparse coefficient vector keyed by
    /// (row, col, d-power, t-power), suitable for exact linear algebra.
    pub fn flatten(&self) -> FlatVec {
        let mut terms = Vec::new();
        for (&(r, c), e) in &self.entries {
            for (k, f) in e.terms() {
                for (a, coeff) in f.coeffs().iter().enumerate() {
                    if !coeff.is_zero() {
                        terms.push((
                            FlatKey {
                                row: r as u16,
                                col: c as u16,
                                dpow: k as u16,
                                tpow: a as u16,
                            },
                            coeff.clone(),
                        ));
                    }
                }
            }
        }
        terms.sort_by(|a, b| a.0.cmp(&b.0));
        FlatVec::from_sorted(terms)
    }

    /// Canonical text: one line per nonzero entry, row-major.
    pub fn to_text(&self) -> String {
        let mut lines = Vec::new();
        for (&(r, c), e) in &self.entries {
            lines.push(format!(
                "{} <- {}: {}",
                self.slots[r].label,
                self.slots[c].label,
                e.to_text()
            ));
        }
        lines.join("\n")
    }
}

/// A t-independent operator whose entries are Laurent polynomials in `d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstLaurentOperator {
    parity: Parity,
    slots: SlotList,
    lambda: LambdaValue,
    entries: BTreeMap<(usize, usize), BTreeMap<i64, Rational>>,
}

impl ConstLaurentOperator {
    /// Reinterprets a t-independent graded operator; errors on any entry
    /// with an actual t dependence.
    pub fn from_graded(op: &GradedOperator) -> Result<Self, DiffOpError> {
        let mut entries = BTreeMap::new();
        for ((r, c), e) in op.entries() {
            let mut powers = BTreeMap::new();
            for (k, f) in e.terms() {
                if f.degree() > Some(0) {
                    return Err(DiffOpError::NotConstant { row: r, col: c });
                }
                powers.insert(k as i64, f.coeff(0));
            }
            entries.insert((r, c), powers);
        }
        Ok(ConstLaurentOperator {
            parity: op.parity(),
            slots: op.slots().clone(),
            lambda: op.lambda().clone(),
            entries,
        })
    }

    /// Conjugation by `diag(d^shift_i)`: entry (r,c) picks up
    /// `d^(shift_r - shift_c)`.
    pub fn conjugate_by_shifts(&self, shifts: &[i64]) -> ConstLaurentOperator {
        assert_eq!(shifts.len(), self.slots.len());
        let entries = self
            .entries
            .iter()
            .map(|(&(r, c), powers)| {
                let delta = shifts[r] - shifts[c];
                let shifted = powers.iter().map(|(&k, v)| (k + delta, v.clone())).collect();
                ((r, c), shifted)
            })
            .collect();
        ConstLaurentOperator {
            parity: self.parity,
            slots: self.slots.clone(),
            lambda: self.lambda.clone(),
            entries,
        }
    }

    /// Returns the operator as a genuine differential operator, or an error
    /// naming the first entry that kept a negative power of `d`.
    pub fn localize(&self, slots: SlotList) -> Result<GradedOperator, DiffOpError> {
        let mut op = GradedOperator::zero(self.parity, slots, self.lambda.clone());
        for (&(r, c), powers) in &self.entries {
            let mut e = DiffEntry::zero();
            for (&k, v) in powers {
                if v.is_zero() {
                    continue;
                }
                if k < 0 {
                    return Err(DiffOpError::NonlocalOperator { row: r, col: c, power: k });
                }
                e = e.add(&DiffEntry::from_scalar(k as u32, v.clone()));
            }
            op.set_entry(r, c, e)?;
        }
        Ok(op)
    }

    pub fn is_local(&self) -> bool {
        self.entries
            .values()
            .all(|powers| powers.iter().all(|(&k, v)| k >= 0 || v.is_zero()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn slots_bf() -> SlotList {
        Arc::new(vec![
            FieldSlot::new("x", Parity::Even, rat_int(0)),
            FieldSlot::new("psi", Parity::Odd, rat(1, 2)),
        ])
    }

    fn t_poly() -> Poly {
        Poly::from_i64(&[0, 1])
    }

    #[test]
    fn leibniz_rule() {
        let limits = OpLimits::default();
        // d . t = t d + 1
        let d = DiffEntry::from_scalar(1, rat_int(1));
        let t = DiffEntry::from_poly(0, t_poly());
        let dt = d.compose(&t, &limits).unwrap();
        let expected = DiffEntry::from_poly(1, t_poly()).add(&DiffEntry::from_scalar(0, rat_int(1)));
        assert_eq!(dt, expected);

        // (t d) . (t d) = t^2 d^2 + t d
        let td = DiffEntry::from_poly(1, t_poly());
        let tdtd = td.compose(&td, &limits).unwrap();
        let expected = DiffEntry::from_poly(2, t_poly().mul(&t_poly()))
            .add(&DiffEntry::from_poly(1, t_poly()));
        assert_eq!(tdtd, expected);

        // d^2 . t^2 = t^2 d^2 + 4 t d + 2
        let d2 = DiffEntry::from_scalar(2, rat_int(2) / rat_int(2));
        let t2 = DiffEntry::from_poly(0, t_poly().mul(&t_poly()));
        let got = d2.compose(&t2, &limits).unwrap();
        let expected = DiffEntry::from_poly(2, t_poly().mul(&t_poly()))
            .add(&DiffEntry::from_poly(1, t_poly().scale(&rat_int(4))))
            .add(&DiffEntry::from_scalar(0, rat_int(2)));
        assert_eq!(got, expected);
    }

    #[test]
    fn partial_cap_enforced() {
        let limits = OpLimits { max_partial: 3 };
        let d2 = DiffEntry::from_scalar(2, rat_int(1));
        assert_eq!(
            d2.compose(&d2, &limits),
            Err(DiffOpError::PartialCapExceeded { power: 4, cap: 3 })
        );
    }

    #[test]
    fn parity_rules() {
        let slots = slots_bf();
        let mut q = GradedOperator::zero(Parity::Odd, slots.clone(), LambdaValue::Symbolic);
        q.set_entry(0, 1, DiffEntry::from_scalar(0, rat_int(1))).unwrap();
        q.set_entry(1, 0, DiffEntry::from_scalar(1, rat_int(1))).unwrap();
        // diagonal entries are even couplings: rejected on an odd operator
        assert_eq!(
            q.clone().set_entry(0, 0, DiffEntry::from_scalar(0, rat_int(1))),
            Err(DiffOpError::ParityViolation { row: 0, col: 0 })
        );

        // {Q, Q} = 2H for the free supercharge
        let limits = OpLimits::default();
        let qq = q.bracket(&q, &limits).unwrap();
        assert_eq!(qq.parity(), Parity::Even);
        let h = GradedOperator::diagonal(slots, LambdaValue::Symbolic, |_, _| {
            DiffEntry::from_scalar(1, rat_int(2))
        });
        assert_eq!(qq, h);
    }

    #[test]
    fn bracket_of_even_ops_is_commutator() {
        let slots = slots_bf();
        let limits = OpLimits::default();
        // H = d, Dil' = -t d  (offset part dropped): [Dil', H] = d = H
        let h = GradedOperator::diagonal(slots.clone(), LambdaValue::Symbolic, |_, _| {
            DiffEntry::from_scalar(1, rat_int(1))
        });
        let dil = GradedOperator::diagonal(slots, LambdaValue::Symbolic, |_, _| {
            DiffEntry::from_poly(1, Poly::from_i64(&[0, -1]))
        });
        let got = dil.bracket(&h, &limits).unwrap();
        assert_eq!(got, h);
    }

    #[test]
    fn lambda_unification() {
        let slots = slots_bf();
        let a = GradedOperator::diagonal(slots.clone(), LambdaValue::Fixed(rat(1, 3)), |_, _| {
            DiffEntry::from_scalar(0, rat_int(1))
        });
        let b = GradedOperator::diagonal(slots.clone(), LambdaValue::Symbolic, |_, _| {
            DiffEntry::from_scalar(0, rat_int(1))
        });
        let c = GradedOperator::diagonal(slots, LambdaValue::Fixed(rat(1, 2)), |_, _| {
            DiffEntry::from_scalar(0, rat_int(1))
        });
        assert_eq!(a.add(&b).unwrap().lambda(), &LambdaValue::Fixed(rat(1, 3)));
        assert!(matches!(a.add(&c), Err(DiffOpError::LambdaMismatch(_, _))));
    }

    #[test]
    fn flatten_is_row_major_sorted() {
        let slots = slots_bf();
        let mut q = GradedOperator::zero(Parity::Odd, slots, LambdaValue::Symbolic);
        q.set_entry(1, 0, DiffEntry::from_poly(1, Poly::from_i64(&[2, 3]))).unwrap();
        q.set_entry(0, 1, DiffEntry::from_scalar(0, rat_int(5))).unwrap();
        let flat = q.flatten();
        let keys: Vec<FlatKey> = flat.iter().map(|(k, _)| *k).collect();
        assert_eq!(
            keys,
            vec![
                FlatKey { row: 0, col: 1, dpow: 0, tpow: 0 },
                FlatKey { row: 1, col: 0, dpow: 1, tpow: 0 },
                FlatKey { row: 1, col: 0, dpow: 1, tpow: 1 },
            ]
        );
    }

    #[test]
    fn canonical_text() {
        let slots = slots_bf();
        let mut q = GradedOperator::zero(Parity::Odd, slots, LambdaValue::Symbolic);
        q.set_entry(1, 0, DiffEntry::from_poly(1, Poly::from_i64(&[2, 3]))).unwrap();
        assert_eq!(q.to_text(), "psi <- x: 3 * t^1 * d^1 + 2 * t^0 * d^1");
    }

    #[test]
    fn laurent_conjugation_and_locality() {
        let slots = slots_bf();
        let mut q = GradedOperator::zero(Parity::Odd, slots.clone(), LambdaValue::Symbolic);
        q.set_entry(0, 1, DiffEntry::from_scalar(0, rat_int(1))).unwrap();
        q.set_entry(1, 0, DiffEntry::from_scalar(1, rat_int(1))).unwrap();
        let lq = ConstLaurentOperator::from_graded(&q).unwrap();

        // dressing the boson slot: x entry gains d, psi entry loses one
        let dressed = lq.conjugate_by_shifts(&[1, 0]);
        assert!(dressed.is_local());
        let local = dressed.localize(slots.clone()).unwrap();
        assert_eq!(
            local.entry(0, 1).unwrap(),
            &DiffEntry::from_scalar(1, rat_int(1))
        );
        assert_eq!(
            local.entry(1, 0).unwrap(),
            &DiffEntry::from_scalar(0, rat_int(1))
        );

        // dressing the fermion slot instead drives the (0,1) entry nonlocal
        let bad = lq.conjugate_by_shifts(&[0, 1]);
        assert!(!bad.is_local());
        assert_eq!(
            bad.localize(slots),
            Err(DiffOpError::NonlocalOperator { row: 0, col: 1, power: -1 })
        );
    }

    #[test]
    fn t_dependence_rejected_by_laurent_form() {
        let slots = slots_bf();
        let dil = GradedOperator::diagonal(slots, LambdaValue::Symbolic, |_, _| {
            DiffEntry::from_poly(1, Poly::from_i64(&[0, -1]))
        });
        assert_eq!(
            ConstLaurentOperator::from_graded(&dil),
            Err(DiffOpError::NotConstant { row: 0, col: 0 })
        );
    }
}
