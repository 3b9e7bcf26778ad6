//! Dense univariate polynomials over exact rationals.
//!
//! Coefficients are stored lowest power first and normalized so the leading
//! coefficient is nonzero; the zero polynomial has an empty coefficient list.
//! The same type serves polynomials in the scaling dimension λ and in the
//! time variable t.

use crate::exact::{rat_int, ExactError, Rational};
use num::{BigInt, Integer, One, Signed, Zero};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(rat_int(1))
    }

    pub fn constant(c: Rational) -> Self {
        Poly::new(vec![c])
    }

    /// `c * x^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Poly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| rat_int(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) + other.coeff(k));
        }
        Poly::new(out)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        Poly::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(k, c)| c * rat_int(k as i64 + 1))
                .collect(),
        )
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn divrem(&self, divisor: &Poly) -> (Poly, Poly) {
        assert!(!divisor.is_zero(), "polynomial division by zero");
        let dlead = divisor.leading().unwrap().clone();
        let ddeg = divisor.degree().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); self.coeffs.len().saturating_sub(ddeg)];
        while rem.len() > ddeg && !rem.is_empty() {
            let k = rem.len() - 1 - ddeg;
            let factor = rem.last().unwrap() / &dlead;
            if !factor.is_zero() {
                for (j, d) in divisor.coeffs.iter().enumerate() {
                    rem[k + j] -= &factor * d;
                }
                quot[k] = factor;
            }
            // the leading term cancels exactly
            debug_assert!(rem.last().unwrap().is_zero());
            rem.pop();
        }
        (Poly::new(quot), Poly::new(rem))
    }

    /// Scales so the leading coefficient is one. Zero stays zero.
    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => Poly::zero(),
            Some(l) => {
                let inv = Rational::one() / l;
                self.scale(&inv)
            }
        }
    }

    /// Monic greatest common divisor via the Euclidean algorithm.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Clears denominators and divides out the integer content, preserving
    /// the sign of the leading coefficient. Zero stays zero.
    pub fn primitive(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut lcm = BigInt::one();
        for c in &self.coeffs {
            lcm = lcm.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        let mut content = BigInt::zero();
        for v in &ints {
            content = content.gcd(v);
        }
        if ints.last().unwrap().is_negative() {
            content = -content;
        }
        Poly::new(
            ints.iter()
                .map(|v| Rational::from_integer(v / &content))
                .collect(),
        )
    }

    /// All rational roots, sorted ascending, each listed once. Errors on the
    /// zero polynomial, whose root set is not finite.
    pub fn rational_roots(&self) -> Result<Vec<Rational>, ExactError> {
        if self.is_zero() {
            return Err(ExactError::IdenticallyZeroResidual);
        }
        let prim = self.primitive();
        let deg = prim.degree().unwrap();
        let mut roots = match deg {
            0 => Vec::new(),
            1 => vec![-prim.coeff(0) / prim.coeff(1)],
            2 => {
                // exact quadratic formula: rational roots need a perfect
                // square discriminant
                let (a, b, c) = (prim.coeff(2), prim.coeff(1), prim.coeff(0));
                let disc = &b * &b - rat_int(4) * &a * &c;
                if disc.is_negative() {
                    Vec::new()
                } else {
                    let s = disc.numer().sqrt();
                    if &s * &s == *disc.numer() {
                        let sq = Rational::from_integer(s);
                        let two_a = rat_int(2) * &a;
                        let mut r = vec![(-&b + &sq) / &two_a];
                        if !sq.is_zero() {
                            r.push((-&b - &sq) / &two_a);
                        }
                        r
                    } else {
                        Vec::new()
                    }
                }
            }
            _ => prim.roots_by_trial_division()?,
        };
        roots.sort();
        roots.dedup();
        Ok(roots)
    }

    /// Candidate roots p/q with p | constant term and q | leading term,
    /// confirmed by exact evaluation. Factors out x^k first so the constant
    /// term is nonzero.
    fn roots_by_trial_division(&self) -> Result<Vec<Rational>, ExactError> {
        let mut coeffs = self.coeffs.clone();
        let mut roots = Vec::new();
        let low = coeffs.iter().position(|c| !c.is_zero()).unwrap();
        if low > 0 {
            roots.push(Rational::zero());
            coeffs.drain(..low);
        }
        let p = Poly::new(coeffs).primitive();
        if p.degree() == Some(0) {
            return Ok(roots);
        }
        let c0 = p.coeff(0).numer().magnitude().clone();
        let cl = p.leading().unwrap().numer().magnitude().clone();
        let ps = divisors(&c0)?;
        let qs = divisors(&cl)?;
        for num in &ps {
            for den in &qs {
                for sign in [1i64, -1] {
                    let cand = Rational::new(BigInt::from(sign) * BigInt::from(num.clone()), BigInt::from(den.clone()));
                    if p.eval(&cand).is_zero() {
                        roots.push(cand);
                    }
                }
            }
        }
        Ok(roots)
    }

    /// Renders with the given variable name, highest power first.
    pub fn display(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let body = match k {
                0 => crate::exact::format_rational(&mag),
                _ => {
                    let pow = if k == 1 {
                        var.to_string()
                    } else {
                        format!("{var}^{k}")
                    };
                    if mag.is_one() {
                        pow
                    } else {
                        format!("{}*{}", crate::exact::format_rational(&mag), pow)
                    }
                }
            };
            if parts.is_empty() {
                parts.push(if c.is_negative() { format!("-{body}") } else { body });
            } else {
                parts.push(format!("{} {}", if c.is_negative() { "-" } else { "+" }, body));
            }
        }
        parts.join(" ")
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display("x"))
    }
}

fn divisors(n: &num::BigUint) -> Result<Vec<num::BigUint>, ExactError> {
    use num::BigUint;
    // trial division is fine for the coefficient sizes that arise here; the
    // guard turns a pathological input into an error instead of a hang
    let limit = BigUint::from(u64::MAX);
    if *n > &limit * &limit {
        return Err(ExactError::RootExtractionOverflow);
    }
    let mut n = n.clone();
    let mut factors: Vec<(BigUint, u32)> = Vec::new();
    let mut p = BigUint::from(2u32);
    while &p * &p <= n {
        let mut mult = 0;
        while (&n % &p).is_zero() {
            n /= &p;
            mult += 1;
        }
        if mult > 0 {
            factors.push((p.clone(), mult));
        }
        p += 1u32;
        if factors.iter().map(|(_, m)| *m as u64 + 1).product::<u64>() > 100_000 {
            return Err(ExactError::RootExtractionOverflow);
        }
    }
    if !n.is_one() {
        factors.push((n, 1));
    }
    let mut divs = vec![BigUint::one()];
    for (p, mult) in factors {
        let prev = divs.clone();
        let mut power = BigUint::one();
        for _ in 0..mult {
            power *= &p;
            divs.extend(prev.iter().map(|d| d * &power));
        }
    }
    Ok(divs)
}

/// Lagrange interpolation through the first `bound + 1` samples, with every
/// remaining sample verified against the result. A mismatch means no
/// polynomial of the requested degree passes through the data.
pub fn interpolate(samples: &[(Rational, Rational)], bound: usize) -> Result<Poly, ExactError> {
    if samples.is_empty() {
        return Err(ExactError::EmptySamples);
    }
    for (i, (xi, _)) in samples.iter().enumerate() {
        if samples[..i].iter().any(|(xj, _)| xj == xi) {
            return Err(ExactError::DuplicateAbscissa);
        }
    }
    let take = (bound + 1).min(samples.len());
    let mut result = Poly::zero();
    for (i, (xi, yi)) in samples[..take].iter().enumerate() {
        if yi.is_zero() {
            continue;
        }
        let mut basis = Poly::one();
        let mut denom = Rational::one();
        for (j, (xj, _)) in samples[..take].iter().enumerate() {
            if i == j {
                continue;
            }
            basis = basis.mul(&Poly::new(vec![-xj.clone(), Rational::one()]));
            denom *= xi - xj;
        }
        result = result.add(&basis.scale(&(yi / denom)));
    }
    for (x, y) in samples {
        if &result.eval(x) != y {
            return Err(ExactError::DegreeBoundExceeded);
        }
    }
    Ok(result)
}

/// Reconstructs `(numerator, denominator)` with the given degree bounds from
/// point evaluations: Cauchy interpolation via the extended Euclidean
/// algorithm on the modulus `prod (x - x_i)` and the full interpolant.
/// Every sample must satisfy `den(x_i) != 0` and `num(x_i) = y_i * den(x_i)`,
/// otherwise the bounds are reported as exceeded.
pub fn reconstruct_rational_fn(
    samples: &[(Rational, Rational)],
    num_bound: usize,
    den_bound: usize,
) -> Result<(Poly, Poly), ExactError> {
    if samples.is_empty() {
        return Err(ExactError::EmptySamples);
    }
    if samples.len() < num_bound + den_bound + 2 {
        // not enough data to pin down this many coefficients and still
        // leave verification headroom
        return Err(ExactError::DegreeBoundExceeded);
    }
    let full = interpolate(samples, samples.len() - 1)?;
    let mut modulus = Poly::one();
    for (x, _) in samples {
        modulus = modulus.mul(&Poly::new(vec![-x.clone(), Rational::one()]));
    }
    let (mut r0, mut r1) = (modulus, full);
    let (mut v0, mut v1) = (Poly::zero(), Poly::one());
    while r1.degree().is_some_and(|d| d > num_bound) {
        let (q, r) = r0.divrem(&r1);
        (r0, r1) = (r1, r);
        let next = v0.sub(&q.mul(&v1));
        (v0, v1) = (v1, next);
    }
    let (num, den) = (r1, v1);
    if den.is_zero() || den.degree().unwrap() > den_bound {
        return Err(ExactError::DegreeBoundExceeded);
    }
    for (x, y) in samples {
        let d = den.eval(x);
        if d.is_zero() || num.eval(x) != y * d {
            return Err(ExactError::DegreeBoundExceeded);
        }
    }
    // normalize so the denominator is monic
    let lead = den.leading().unwrap().clone();
    let inv = Rational::one() / lead;
    Ok((num.scale(&inv), den.scale(&inv)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn p(coeffs: &[i64]) -> Poly {
        Poly::from_i64(coeffs)
    }

    #[test]
    fn normalization_strips_trailing_zeros() {
        assert_eq!(p(&[1, 2, 0, 0]).degree(), Some(1));
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(Poly::zero().degree(), None);
    }

    #[test]
    fn arithmetic() {
        let a = p(&[1, 2]); // 1 + 2x
        let b = p(&[-1, 2]); // -1 + 2x
        assert_eq!(a.mul(&b), p(&[-1, 0, 4]));
        assert_eq!(a.add(&b), p(&[0, 4]));
        assert_eq!(a.sub(&a), Poly::zero());
        assert_eq!(a.eval(&rat(1, 2)), rat_int(2));
    }

    #[test]
    fn division_with_remainder() {
        let num = p(&[-1, 0, 0, 1]); // x^3 - 1
        let den = p(&[-1, 1]); // x - 1
        let (q, r) = num.divrem(&den);
        assert_eq!(q, p(&[1, 1, 1]));
        assert!(r.is_zero());

        let (q2, r2) = p(&[1, 0, 1]).divrem(&p(&[1, 1]));
        assert_eq!(q2, p(&[-1, 1]));
        assert_eq!(r2, p(&[2]));
    }

    #[test]
    fn roots_of_linear() {
        // 3x - 1 has the single root 1/3
        assert_eq!(p(&[-1, 3]).rational_roots().unwrap(), vec![rat(1, 3)]);
        assert_eq!(p(&[0, 1]).rational_roots().unwrap(), vec![rat_int(0)]);
    }

    #[test]
    fn roots_of_quadratics() {
        // x^2 + x - 1: golden ratio roots, none rational
        assert!(p(&[-1, 1, 1]).rational_roots().unwrap().is_empty());
        // x^2 - 1
        assert_eq!(
            p(&[-1, 0, 1]).rational_roots().unwrap(),
            vec![rat_int(-1), rat_int(1)]
        );
        // 4x^2 - 1
        assert_eq!(
            p(&[-1, 0, 4]).rational_roots().unwrap(),
            vec![rat(-1, 2), rat(1, 2)]
        );
        // x^2 + 1
        assert!(p(&[1, 0, 1]).rational_roots().unwrap().is_empty());
        // repeated root listed once
        assert_eq!(p(&[1, 2, 1]).rational_roots().unwrap(), vec![rat_int(-1)]);
    }

    #[test]
    fn roots_of_higher_degree() {
        // (x - 1/2)(x + 3)(x^2 + 1), cleared: (2x - 1)(x + 3)(x^2 + 1)
        let f = p(&[-1, 2]).mul(&p(&[3, 1])).mul(&p(&[1, 0, 1]));
        assert_eq!(f.rational_roots().unwrap(), vec![rat_int(-3), rat(1, 2)]);
        // x^2 (x - 5)
        let g = p(&[0, 0, -5, 1]);
        assert_eq!(g.rational_roots().unwrap(), vec![rat_int(0), rat_int(5)]);
    }

    #[test]
    fn zero_polynomial_has_no_finite_root_set() {
        assert_eq!(
            Poly::zero().rational_roots(),
            Err(ExactError::IdenticallyZeroResidual)
        );
    }

    #[test]
    fn gcd_examples() {
        // gcd(3x - 1, 6x - 2) = x - 1/3 (monic)
        assert_eq!(p(&[-1, 3]).gcd(&p(&[-2, 6])), p(&[-1, 3]).monic());
        assert_eq!(p(&[-1, 3]).gcd(&p(&[-2, 6])).coeff(0), rat(-1, 3));
        // coprime
        assert_eq!(p(&[-1, 1]).gcd(&p(&[1, 1])), Poly::one());
        // shared quadratic factor
        let common = p(&[-1, 1, 1]);
        let a = common.mul(&p(&[2, 1]));
        let b = common.mul(&p(&[0, 0, 7]));
        assert_eq!(a.gcd(&b), common.monic());
    }

    #[test]
    fn primitive_clears_denominators_and_content() {
        let f = Poly::new(vec![rat(2, 3), rat(4, 3)]);
        assert_eq!(f.primitive(), p(&[1, 2]));
        // sign follows the leading coefficient
        assert_eq!(p(&[2, -4]).primitive(), p(&[-1, 2]));
        assert!(Poly::zero().primitive().is_zero());
    }

    #[test]
    fn interpolation_recovers_line() {
        let samples = vec![
            (rat_int(0), rat_int(-1)),
            (rat_int(1), rat_int(2)),
            (rat_int(2), rat_int(5)),
        ];
        assert_eq!(interpolate(&samples, 2).unwrap(), p(&[-1, 3]));
        // a tighter bound still fits because the data is linear
        assert_eq!(interpolate(&samples, 1).unwrap(), p(&[-1, 3]));
    }

    #[test]
    fn interpolation_detects_degree_overflow() {
        // x^2 data cannot fit a line
        let samples = vec![
            (rat_int(0), rat_int(0)),
            (rat_int(1), rat_int(1)),
            (rat_int(2), rat_int(4)),
            (rat_int(3), rat_int(9)),
        ];
        assert_eq!(
            interpolate(&samples, 1),
            Err(ExactError::DegreeBoundExceeded)
        );
        assert_eq!(interpolate(&samples, 2).unwrap(), p(&[0, 0, 1]));
    }

    #[test]
    fn interpolation_rejects_duplicate_abscissae() {
        let samples = vec![(rat_int(1), rat_int(1)), (rat_int(1), rat_int(2))];
        assert_eq!(
            interpolate(&samples, 1),
            Err(ExactError::DuplicateAbscissa)
        );
    }

    #[test]
    fn rational_reconstruction_recovers_ratio() {
        // f = (x^2 + x - 1) / (x - 5)
        let num = p(&[-1, 1, 1]);
        let den = p(&[-5, 1]);
        let samples: Vec<_> = (0..9)
            .filter(|&k| k != 5) // skip the pole
            .map(|k| {
                let x = rat_int(k);
                let y = num.eval(&x) / den.eval(&x);
                (x, y)
            })
            .collect();
        let (n, d) = reconstruct_rational_fn(&samples, 3, 3).unwrap();
        // result is the same ratio; compare after clearing scale
        assert_eq!(n.mul(&den), num.mul(&d));
        assert_eq!(d.leading().unwrap(), &Rational::one());
    }

    #[test]
    fn rational_reconstruction_of_polynomial_data() {
        let f = p(&[2, 0, 1]); // x^2 + 2
        let samples: Vec<_> = (0..7)
            .map(|k| (rat_int(k), f.eval(&rat_int(k))))
            .collect();
        let (n, d) = reconstruct_rational_fn(&samples, 2, 2).unwrap();
        assert_eq!(d, Poly::one());
        assert_eq!(n, f);
    }

    #[test]
    fn rational_reconstruction_respects_bounds() {
        // degree 3 over degree 1 cannot fit in bounds (1, 1)
        let num = p(&[1, 0, 0, 1]);
        let den = p(&[7, 1]);
        let samples: Vec<_> = (0..10)
            .map(|k| {
                let x = rat_int(k);
                (x.clone(), num.eval(&x) / den.eval(&x))
            })
            .collect();
        assert_eq!(
            reconstruct_rational_fn(&samples, 1, 1),
            Err(ExactError::DegreeBoundExceeded)
        );
    }
}
