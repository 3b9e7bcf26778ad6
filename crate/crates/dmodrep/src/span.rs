//! Exact sparse linear algebra over the flattened operator coefficients.
//!
//! Operators flatten to sparse vectors keyed by (row, col, d-power,
//! t-power). [`SpanBasis`] maintains an echelonized span of such vectors and
//! answers membership queries; alongside each reduction it reports the
//! coordinates of the reduced part with respect to the raw insertion basis,
//! which is what turns "this bracket closed" into explicit structure
//! constants.

use crate::exact::Rational;
use num::Zero;

/// Coefficient position inside a flattened operator. The derived ordering is
/// row-major, then by derivative order, then by t-power.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FlatKey {
    pub row: u16,
    pub col: u16,
    pub dpow: u16,
    pub tpow: u16,
}

/// Sparse exact vector: sorted by key, no explicit zeros.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FlatVec {
    terms: Vec<(FlatKey, Rational)>,
}

impl FlatVec {
    pub fn zero() -> Self {
        FlatVec::default()
    }

    /// Takes a key-sorted list; zero coefficients are dropped.
    pub fn from_sorted(terms: Vec<(FlatKey, Rational)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 < w[1].0));
        FlatVec {
            terms: terms.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<&(FlatKey, Rational)> {
        self.terms.first()
    }

    pub fn get(&self, key: &FlatKey) -> Option<&Rational> {
        self.terms
            .binary_search_by(|(k, _)| k.cmp(key))
            .ok()
            .map(|i| &self.terms[i].1)
    }

    pub fn iter(&self) -> impl Iterator<Item = &(FlatKey, Rational)> {
        self.terms.iter()
    }

    pub fn scale(&self, c: &Rational) -> FlatVec {
        if c.is_zero() {
            return FlatVec::zero();
        }
        FlatVec {
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    /// `self + c * other`, merged in one pass.
    pub fn axpy(&self, c: &Rational, other: &FlatVec) -> FlatVec {
        if c.is_zero() || other.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (ka, va) = &self.terms[i];
            let (kb, vb) = &other.terms[j];
            match ka.cmp(kb) {
                std::cmp::Ordering::Less => {
                    out.push((*ka, va.clone()));
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push((*kb, vb * c));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let v = va + vb * c;
                    if !v.is_zero() {
                        out.push((*ka, v));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        out.extend(other.terms[j..].iter().map(|(k, v)| (*k, v * c)));
        FlatVec { terms: out }
    }
}

/// Result of reducing a vector against the span: the part outside the span
/// and the coordinates of the inside part over the raw insertion basis.
#[derive(Debug, Clone)]
pub struct Reduction {
    pub residual: FlatVec,
    pub coords: Vec<Rational>,
}

impl Reduction {
    pub fn in_span(&self) -> bool {
        self.residual.is_zero()
    }
}

struct Row {
    vec: FlatVec,       // pivot coefficient normalized to 1
    pivot: FlatKey,
    combo: Vec<Rational>, // this row as a combination of raw vectors
}

/// Incrementally echelonized span with raw-coordinate tracking.
///
/// Vectors enter through [`SpanBasis::push_raw`]; each independent one
/// becomes a raw basis element and an echelon row that is reduced against
/// everything before it. Coordinates reported by [`SpanBasis::reduce`] refer
/// to raw indices in insertion order.
#[derive(Default)]
pub struct SpanBasis {
    rows: Vec<Row>,
    n_raw: usize,
}

impl SpanBasis {
    pub fn new() -> Self {
        SpanBasis::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Number of raw vectors accepted so far (equals the rank, since
    /// dependent vectors are not accepted).
    pub fn raw_len(&self) -> usize {
        self.n_raw
    }

    pub fn reduce(&self, v: &FlatVec) -> Reduction {
        let mut residual = v.clone();
        let mut coords = vec![Rational::zero(); self.n_raw];
        for row in &self.rows {
            let Some(c) = residual.get(&row.pivot).cloned() else {
                continue;
            };
            residual = residual.axpy(&-&c, &row.vec);
            for (k, w) in row.combo.iter().enumerate() {
                if !w.is_zero() {
                    coords[k] += &c * w;
                }
            }
        }
        Reduction { residual, coords }
    }

    pub fn contains(&self, v: &FlatVec) -> bool {
        self.reduce(v).in_span()
    }

    /// Inserts a vector as the next raw basis element if it is independent
    /// of the current span. Returns whether it was accepted.
    pub fn push_raw(&mut self, v: &FlatVec) -> bool {
        let red = self.reduce(v);
        if red.in_span() {
            return false;
        }
        let (pivot, lead) = red.residual.leading().map(|(k, c)| (*k, c.clone())).unwrap();
        let inv = Rational::new(num::BigInt::from(1), num::BigInt::from(1)) / &lead;
        let vec = red.residual.scale(&inv);
        // v = sum coords * raw + residual, so as a raw combination the new
        // row is (e_new - coords) / lead
        let mut combo: Vec<Rational> = red.coords.iter().map(|c| -c * &inv).collect();
        combo.push(inv);
        self.rows.push(Row { vec, pivot, combo });
        self.n_raw += 1;
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, rat_int};

    fn k(row: u16, col: u16, dpow: u16, tpow: u16) -> FlatKey {
        FlatKey { row, col, dpow, tpow }
    }

    fn v(entries: &[(FlatKey, i64)]) -> FlatVec {
        let mut terms: Vec<_> = entries.iter().map(|(key, c)| (*key, rat_int(*c))).collect();
        terms.sort_by(|a, b| a.0.cmp(&b.0));
        FlatVec::from_sorted(terms)
    }

    #[test]
    fn key_ordering_is_row_major() {
        assert!(k(0, 5, 9, 9) < k(1, 0, 0, 0));
        assert!(k(1, 2, 0, 9) < k(1, 2, 1, 0));
        assert!(k(1, 2, 1, 0) < k(1, 2, 1, 1));
    }

    #[test]
    fn axpy_merges_and_cancels() {
        let a = v(&[(k(0, 0, 0, 0), 2), (k(0, 1, 0, 0), 3)]);
        let b = v(&[(k(0, 0, 0, 0), 1), (k(1, 0, 0, 0), 5)]);
        let got = a.axpy(&rat_int(-2), &b);
        assert_eq!(got, v(&[(k(0, 1, 0, 0), 3), (k(1, 0, 0, 0), -10)]));
    }

    #[test]
    fn span_membership() {
        let mut span = SpanBasis::new();
        let a = v(&[(k(0, 0, 0, 0), 1), (k(0, 1, 0, 0), 1)]);
        let b = v(&[(k(0, 1, 0, 0), 2)]);
        assert!(span.push_raw(&a));
        assert!(span.push_raw(&b));
        assert_eq!(span.rank(), 2);

        // a - b/2 has coords (1, -1/2)
        let probe = v(&[(k(0, 0, 0, 0), 1)]);
        let red = span.reduce(&probe);
        assert!(red.in_span());
        assert_eq!(red.coords, vec![rat_int(1), rat(-1, 2)]);

        // dependent vector is rejected, raw count unchanged
        assert!(!span.push_raw(&probe));
        assert_eq!(span.raw_len(), 2);

        let outside = v(&[(k(1, 0, 0, 0), 1)]);
        let red = span.reduce(&outside);
        assert!(!red.in_span());
        assert_eq!(red.residual, outside);
    }

    #[test]
    fn reduction_coordinates_reconstruct_vector() {
        let mut span = SpanBasis::new();
        let raws = vec![
            v(&[(k(0, 0, 0, 0), 2), (k(0, 0, 1, 0), 1)]),
            v(&[(k(0, 0, 1, 0), 3), (k(0, 0, 2, 0), 1)]),
            v(&[(k(0, 0, 0, 0), 1), (k(0, 0, 2, 0), 4)]),
        ];
        for r in &raws {
            assert!(span.push_raw(r));
        }
        let probe = v(&[(k(0, 0, 0, 0), 7), (k(0, 0, 1, 0), 9), (k(0, 0, 2, 0), -3), (k(0, 1, 0, 0), 11)]);
        let red = span.reduce(&probe);
        // probe = sum coords[i] raws[i] + residual, exactly
        let mut recon = red.residual.clone();
        for (c, raw) in red.coords.iter().zip(&raws) {
            recon = recon.axpy(c, raw);
        }
        assert_eq!(recon, probe);
        assert_eq!(red.residual, v(&[(k(0, 1, 0, 0), 11)]));
    }
}
