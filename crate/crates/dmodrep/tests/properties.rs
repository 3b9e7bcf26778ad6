//! Randomized structural invariants over the exact-arithmetic layers.

use dmodrep::algebra::alpha_orbit_of;
use dmodrep::exact::{format_rational, parse_rational, rat, rat_int, Rational};
use dmodrep::geometry::{
    laplacian_coefficient, measure_dimension, scale_invariance_lambda, ConformalTarget,
};
use dmodrep::multiplet::FieldContent;
use dmodrep::poly::{interpolate, Poly};
use num::Zero;
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-1000i64..=1000, 1i64..=60).prop_map(|(p, q)| rat(p, q))
}

fn poly(max_deg: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec(-30i64..=30, 1..=max_deg + 1)
        .prop_map(|coeffs| Poly::from_i64(&coeffs))
}

proptest! {
    #[test]
    fn rational_text_round_trips(r in rational()) {
        prop_assert_eq!(parse_rational(&format_rational(&r)).unwrap(), r);
    }

    #[test]
    fn divrem_reconstructs_the_dividend(p in poly(6), d in poly(3)) {
        prop_assume!(!d.is_zero());
        let (q, r) = p.divrem(&d);
        prop_assert_eq!(q.mul(&d).add(&r), p);
        if !r.is_zero() {
            prop_assert!(r.degree() < d.degree());
        }
    }

    #[test]
    fn gcd_divides_both_operands(a in poly(4), b in poly(4)) {
        prop_assume!(!a.is_zero() && !b.is_zero());
        let g = a.gcd(&b);
        prop_assert!(a.divrem(&g).1.is_zero());
        prop_assert!(b.divrem(&g).1.is_zero());
    }

    #[test]
    fn interpolation_recovers_the_polynomial(p in poly(5)) {
        let deg = p.degree().unwrap_or(0);
        let samples: Vec<(Rational, Rational)> = (0..=deg as i64)
            .map(|x| (rat_int(x), p.eval(&rat_int(x))))
            .collect();
        prop_assert_eq!(interpolate(&samples, deg).unwrap(), p);
    }

    #[test]
    fn constructed_roots_are_found(roots in prop::collection::vec(-12i64..=12, 1..4)) {
        let mut p = Poly::from_i64(&[1]);
        for &r in &roots {
            p = p.mul(&Poly::from_i64(&[-r, 1]));
        }
        let found = p.rational_roots().unwrap();
        for &r in &roots {
            prop_assert!(found.contains(&rat_int(r)), "missing root {}", r);
        }
    }

    #[test]
    fn content_text_round_trips(counts in prop::collection::vec(0usize..=9, 1..5)) {
        let content = match FieldContent::new(counts) {
            Ok(c) => c,
            Err(_) => return Ok(()),
        };
        prop_assert_eq!(FieldContent::parse(&content.to_string()).unwrap(), content);
    }

    #[test]
    fn harmonic_exponent_is_scale_critical(d in 1i64..=8) {
        let target = ConformalTarget::new(d, rat_int(2 - d)).unwrap();
        prop_assert!(laplacian_coefficient(&target).is_zero());
        if d != 4 {
            prop_assert_eq!(scale_invariance_lambda(&rat_int(2 - d)).unwrap(), rat(1, d - 4));
        }
    }

    #[test]
    fn measure_dimension_is_topological(d in 0i64..=8, lambda in rational()) {
        prop_assert_eq!(measure_dimension(d, &lambda), rat_int(4 - d));
    }

    #[test]
    fn alpha_orbits_partition_the_parameters(r in rational()) {
        prop_assume!(!r.is_zero() && r != rat_int(-1));
        let orbit = alpha_orbit_of(&r);
        prop_assert!(orbit.contains(&r));
        for value in &orbit {
            prop_assert_eq!(alpha_orbit_of(value), orbit.clone());
        }
    }
}
