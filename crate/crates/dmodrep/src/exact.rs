//! Exact rational scalars.
//!
//! All algebra in this crate runs over arbitrary-precision rationals; no
//! floating point is used anywhere outside the numerical curvature oracle in
//! [`crate::geometry`]. `Rational` is kept in lowest terms with a positive
//! denominator. The text form is `p/q`, shortened to `p` when the denominator
//! is one.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Zero};
use std::str::FromStr;
use thiserror::Error;

pub type Rational = BigRational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExactError {
    #[error("invalid rational literal `{0}`")]
    InvalidRational(String),
    #[error("zero denominator in rational literal `{0}`")]
    ZeroDenominator(String),
    #[error("identically zero residual")]
    IdenticallyZeroResidual,
    #[error("degree bound exceeded")]
    DegreeBoundExceeded,
    #[error("interpolation abscissae must be distinct")]
    DuplicateAbscissa,
    #[error("empty sample list")]
    EmptySamples,
    #[error("coefficient too large for rational root extraction")]
    RootExtractionOverflow,
}

/// `p/q` as an exact rational. Panics on `q == 0`; use [`parse_rational`]
/// for fallible input.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn rat_int(p: i64) -> Rational {
    Rational::from_integer(BigInt::from(p))
}

/// Canonical text form: `p/q`, or `p` when the denominator is one.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `p` or `p/q` (optional leading sign on `p`).
pub fn parse_rational(s: &str) -> Result<Rational, ExactError> {
    let s = s.trim();
    match s.split_once('/') {
        None => BigInt::from_str(s)
            .map(Rational::from_integer)
            .map_err(|_| ExactError::InvalidRational(s.to_string())),
        Some((num, den)) => {
            let n =
                BigInt::from_str(num.trim()).map_err(|_| ExactError::InvalidRational(s.to_string()))?;
            let d =
                BigInt::from_str(den.trim()).map_err(|_| ExactError::InvalidRational(s.to_string()))?;
            if d.is_zero() {
                return Err(ExactError::ZeroDenominator(s.to_string()));
            }
            Ok(Rational::new(n, d))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lowest_terms_and_positive_denominator() {
        let r = rat(6, -4);
        assert_eq!(r.numer(), &BigInt::from(-3));
        assert_eq!(r.denom(), &BigInt::from(2));
    }

    #[test]
    fn format_round_trips() {
        for s in ["0", "7", "-7", "1/3", "-22/7", "24"] {
            let r = parse_rational(s).unwrap();
            assert_eq!(format_rational(&r), s);
        }
        // non-canonical input normalizes
        assert_eq!(format_rational(&parse_rational("4/2").unwrap()), "2");
        assert_eq!(format_rational(&parse_rational("-6/-4").unwrap()), "3/2");
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(
            parse_rational("1/0"),
            Err(ExactError::ZeroDenominator("1/0".to_string()))
        );
    }

    #[test]
    fn garbage_rejected() {
        assert!(matches!(parse_rational("a/b"), Err(ExactError::InvalidRational(_))));
        assert!(matches!(parse_rational(""), Err(ExactError::InvalidRational(_))));
        assert!(matches!(parse_rational("1.5"), Err(ExactError::InvalidRational(_))));
    }
}
