//! The verification suite as a callable registry.
//!
//! Every guarantee the package makes is a named check here, so the test
//! harness and the command-line `verify` subcommand walk the same list and
//! there is a single source of truth for what "passing" means. Each check
//! returns a one-line summary on success and a diagnostic on failure.

use crate::algebra::{identify, ClosedSuperalgebra};
use crate::clifford::CliffordFamily;
use crate::conformal::{
    find_critical, find_critical_with, ClosureKind, ConformalGenerators, CriticalConfig,
};
use crate::exact::{format_rational, rat, rat_int, Rational};
use crate::geometry::{
    build_table, curvature_oracle, golden_ratio_constraint, measure_dimension,
    render_table_text, scalar_curvature,
};
use crate::multiplet::{FieldContent, GlobalMultiplet};
use crate::poly::Poly;
use num::{ToPrimitive, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Knobs for the randomized checks. The verdict must not depend on them;
/// they only select which sample points get exercised.
#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub seed: u64,
    pub degree_bound: usize,
    /// Test hook: corrupt one Clifford generator entry before verifying,
    /// to prove the relation check actually bites.
    pub corrupt_clifford: bool,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { seed: 0, degree_bound: 16, corrupt_clifford: false }
    }
}

type CheckFn = fn(&VerifyConfig) -> Result<String, String>;

/// The registry, in the order the checks build on each other.
pub const CHECKS: &[(&str, CheckFn)] = &[
    ("n8-criticality", check_n8_criticality),
    ("n8-middle-never", check_n8_middle_never),
    ("n7-closure", check_n7_closure),
    ("n4-alpha-orbit", check_n4_alpha_orbit),
    ("conformal-relations", check_conformal_relations),
    ("graded-jacobi", check_graded_jacobi),
    ("table-golden", check_table_golden),
    ("curvature-oracle", check_curvature_oracle),
    ("duality", check_duality),
    ("measure-dimension", check_measure_dimension),
    ("golden-ratio", check_golden_ratio),
    ("basis-independence", check_basis_independence),
    ("clifford-relations", check_clifford_relations),
];

pub struct CheckOutcome {
    pub name: &'static str,
    pub result: Result<String, String>,
}

/// Runs one named check; `None` if the name is not in the registry.
pub fn run_check(name: &str, cfg: &VerifyConfig) -> Option<Result<String, String>> {
    CHECKS.iter().find(|(n, _)| *n == name).map(|(_, f)| f(cfg))
}

/// Runs the whole registry in order.
pub fn run_all(cfg: &VerifyConfig) -> Vec<CheckOutcome> {
    CHECKS
        .iter()
        .map(|(name, f)| CheckOutcome { name, result: f(cfg) })
        .collect()
}

const GOLDEN_TABLE: &str = include_str!("../tests/golden/table.txt");

fn config_of(cfg: &VerifyConfig) -> CriticalConfig {
    CriticalConfig { degree_bound: cfg.degree_bound, ..CriticalConfig::default() }
}

fn n8_content(d: i64) -> FieldContent {
    FieldContent::new(vec![d as usize, 8, (8 - d) as usize]).expect("valid content")
}

fn n4_content(d: i64) -> FieldContent {
    FieldContent::new(vec![d as usize, 4, (4 - d) as usize]).expect("valid content")
}

fn expected_n8_name(d: i64) -> &'static str {
    match d {
        0 | 8 => "D(4,1)",
        1 | 7 => "F(4)",
        2 | 6 => "A(3,1)",
        3 | 5 => "D(2,2)",
        _ => unreachable!("no closure at D = 4"),
    }
}

/// Every (D, 8, 8-D) with D ≠ 4 closes exactly at λ = 1/(D-4), onto the
/// algebra the signature table names.
fn check_n8_criticality(cfg: &VerifyConfig) -> Result<String, String> {
    let config = config_of(cfg);
    for d in [0i64, 1, 2, 3, 5, 6, 7, 8] {
        let content = n8_content(d);
        let result = find_critical(&content, &config).map_err(|e| format!("{content}: {e}"))?;
        let expected = vec![rat(1, d - 4)];
        match &result.kind {
            ClosureKind::Critical(values) if *values == expected => {}
            other => {
                return Err(format!(
                    "{content}: expected critical set {{1/({d}-4)}}, got {other:?}"
                ))
            }
        }
        let w = &result.witnesses[0];
        let name = identify(8, w.even_dim, w.odd_dim).name();
        if name != Some(expected_n8_name(d)) {
            return Err(format!(
                "{content}: dims ({}|{}) identified as {name:?}, expected {}",
                w.even_dim,
                w.odd_dim,
                expected_n8_name(d)
            ));
        }
    }
    Ok("eight contents close exactly at lambda = 1/(D-4) with the expected algebras".into())
}

/// The self-dual (4,8,4) multiplet never closes.
fn check_n8_middle_never(cfg: &VerifyConfig) -> Result<String, String> {
    let content = n8_content(4);
    let result = find_critical(&content, &config_of(cfg)).map_err(|e| e.to_string())?;
    match &result.kind {
        ClosureKind::Never => Ok("(4,8,4) has no critical scaling dimension".into()),
        other => Err(format!("(4,8,4): expected Never, got {other:?}")),
    }
}

/// The (1,7,7,1) multiplet closes exactly at λ = -1/4 onto G(3), dims 17|14.
fn check_n7_closure(cfg: &VerifyConfig) -> Result<String, String> {
    let content = FieldContent::parse("1,7,7,1").map_err(|e| e.to_string())?;
    let result = find_critical(&content, &config_of(cfg)).map_err(|e| e.to_string())?;
    match &result.kind {
        ClosureKind::Critical(values) if *values == vec![rat(-1, 4)] => {}
        other => return Err(format!("expected critical set {{-1/4}}, got {other:?}")),
    }
    let w = &result.witnesses[0];
    if (w.even_dim, w.odd_dim) != (17, 14) {
        return Err(format!("expected dims 17|14, got {}|{}", w.even_dim, w.odd_dim));
    }
    match identify(7, w.even_dim, w.odd_dim).name() {
        Some("G(3)") => Ok("(1,7,7,1) closes at -1/4 onto G(3) with dims 17|14".into()),
        name => Err(format!("identified as {name:?}, expected G(3)")),
    }
}

/// λ = k + p/q with q odd: never a half-integer, so no slot dimension
/// degenerates and no small-denominator critical value is hit.
fn sample_lambda(rng: &mut ChaCha8Rng) -> Rational {
    let k = rng.gen_range(-3i64..=3);
    let q = *[3i64, 5, 7].choose(rng).unwrap();
    let p = rng.gen_range(1..q);
    rat_int(k) + rat(p, q)
}

/// N = 4 contents close at every λ, and the family parameter read off the
/// closed algebra is α = (2-D)λ up to the parameter symmetry; the middle
/// grading contracts and its orbit degenerates.
fn check_n4_alpha_orbit(cfg: &VerifyConfig) -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let config = config_of(cfg);
    let mut sampled = 0;
    for d in 0i64..=4 {
        let content = n4_content(d);
        let result = find_critical(&content, &config).map_err(|e| format!("{content}: {e}"))?;
        if result.kind != ClosureKind::AnyLambda {
            return Err(format!("{content}: expected AnyLambda, got {:?}", result.kind));
        }
        for _ in 0..3 {
            let lambda = sample_lambda(&mut rng);
            let alpha = rat_int(2 - d) * &lambda;
            let algebra = ClosedSuperalgebra::at_lambda(&content, &lambda)
                .map_err(|e| format!("{content} at {}: {e}", format_rational(&lambda)))?;
            let orbit = algebra
                .extract_alpha()
                .map_err(|e| format!("{content} at {}: {e}", format_rational(&lambda)))?;
            if !orbit.values.contains(&alpha) {
                return Err(format!(
                    "{content} at {}: orbit misses (2-D)lambda = {}",
                    format_rational(&lambda),
                    format_rational(&alpha)
                ));
            }
            if orbit.degenerate != (d == 2) {
                return Err(format!(
                    "{content} at {}: degenerate flag {} unexpected",
                    format_rational(&lambda),
                    orbit.degenerate
                ));
            }
            sampled += 1;
        }
    }
    Ok(format!(
        "five contents close at all lambda; {sampled} samples match alpha = (2-D)lambda"
    ))
}

/// Building a generator set verifies the conformal relations [Dil,H] = H,
/// [Dil,K] = -K, [H,K] = 2 Dil and the gradings [Dil,Q] = Q/2,
/// [Dil,S] = -S/2 exactly; here every content in scope is built at a
/// spread of scaling dimensions.
fn check_conformal_relations(_cfg: &VerifyConfig) -> Result<String, String> {
    let mut contents: Vec<FieldContent> = (0..=8).map(n8_content).collect();
    contents.extend((0..=4).map(n4_content));
    contents.push(FieldContent::parse("1,7,7,1").map_err(|e| e.to_string())?);
    contents.push(FieldContent::parse("1,1").map_err(|e| e.to_string())?);
    contents.push(FieldContent::parse("2,2").map_err(|e| e.to_string())?);
    let lambdas = [rat(5, 7), rat(-4, 3), rat(9, 2)];
    let mut built = 0;
    for content in &contents {
        let multiplet = GlobalMultiplet::build(content).map_err(|e| format!("{content}: {e}"))?;
        for lambda in &lambdas {
            ConformalGenerators::build(&multiplet, lambda).map_err(|e| {
                format!("{content} at {}: {e}", format_rational(lambda))
            })?;
            built += 1;
        }
    }
    Ok(format!("{built} generator sets satisfy the conformal relations exactly"))
}

fn closure_witnesses() -> Vec<(&'static str, Rational)> {
    vec![
        ("0,8,8", rat(-1, 4)),
        ("1,8,7", rat(-1, 3)),
        ("2,8,6", rat(-1, 2)),
        ("3,8,5", rat_int(-1)),
        ("5,8,3", rat_int(1)),
        ("6,8,2", rat(1, 2)),
        ("7,8,1", rat(1, 3)),
        ("8,8", rat(1, 4)),
        ("1,7,7,1", rat(-1, 4)),
        ("0,4,4", rat(5, 7)),
        ("1,4,3", rat(5, 7)),
        ("2,4,2", rat(5, 7)),
        ("3,4,1", rat(5, 7)),
        ("4,4", rat(5, 7)),
        ("1,1", rat(5, 7)),
        ("2,2", rat(5, 7)),
    ]
}

/// The graded Jacobi identity holds on the full basis of every closed
/// algebra in scope.
fn check_graded_jacobi(_cfg: &VerifyConfig) -> Result<String, String> {
    let mut checked = 0;
    for (text, lambda) in closure_witnesses() {
        let content = FieldContent::parse(text).map_err(|e| e.to_string())?;
        let algebra = ClosedSuperalgebra::at_lambda(&content, &lambda)
            .map_err(|e| format!("{content}: {e}"))?;
        algebra.super_jacobi().map_err(|e| format!("{content}: {e}"))?;
        checked += 1;
    }
    Ok(format!("graded Jacobi holds on all triples of {checked} closed algebras"))
}

/// The assembled table matches the checked-in golden rendering byte for
/// byte.
fn check_table_golden(_cfg: &VerifyConfig) -> Result<String, String> {
    let rows = build_table().map_err(|e| e.to_string())?;
    let text = render_table_text(&rows);
    if text == GOLDEN_TABLE {
        Ok("9-row table matches the golden file byte-exactly".into())
    } else {
        Err(format!("table drifted from the golden file:\n{text}"))
    }
}

/// The finite-difference curvature oracle confirms the closed-form scalar
/// curvature at two radii for every target dimension.
fn check_curvature_oracle(_cfg: &VerifyConfig) -> Result<String, String> {
    for d in [1i64, 2, 3, 5, 6, 7, 8] {
        let (coeff, power) = scalar_curvature(d);
        for r0 in [1.3f64, 2.0] {
            let oracle = curvature_oracle(d, r0, None).map_err(|e| format!("D = {d}: {e}"))?;
            let exact = coeff.to_f64().unwrap() * r0.powi(power as i32);
            let ok = if coeff.is_zero() {
                oracle.abs() < 1e-6
            } else {
                (oracle - exact).abs() < 1e-6 * exact.abs()
            };
            if !ok {
                return Err(format!(
                    "D = {d}, r0 = {r0}: oracle {oracle}, closed form {exact}"
                ));
            }
        }
    }
    Ok("oracle agrees with the closed form at 14 sample points".into())
}

/// Critical scaling dimensions of dual contents are opposite and the
/// identified algebras coincide.
fn check_duality(cfg: &VerifyConfig) -> Result<String, String> {
    let config = config_of(cfg);
    for d in 0i64..=3 {
        let low = find_critical(&n8_content(d), &config).map_err(|e| e.to_string())?;
        let high = find_critical(&n8_content(8 - d), &config).map_err(|e| e.to_string())?;
        let (lv, lw) = match &low.kind {
            ClosureKind::Critical(v) if v.len() == 1 => (v[0].clone(), &low.witnesses[0]),
            other => return Err(format!("D = {d}: unexpected kind {other:?}")),
        };
        let (hv, hw) = match &high.kind {
            ClosureKind::Critical(v) if v.len() == 1 => (v[0].clone(), &high.witnesses[0]),
            other => return Err(format!("D = {}: unexpected kind {other:?}", 8 - d)),
        };
        if lv != -hv.clone() {
            return Err(format!(
                "lambda_{d} = {} but lambda_{} = {}",
                format_rational(&lv),
                8 - d,
                format_rational(&hv)
            ));
        }
        let ln = identify(8, lw.even_dim, lw.odd_dim).name();
        let hn = identify(8, hw.even_dim, hw.odd_dim).name();
        if ln != hn || ln.is_none() {
            return Err(format!("D = {d}: algebras {ln:?} vs {hn:?} differ"));
        }
    }
    Ok("lambda_D = -lambda_(8-D) and the four dual pairs share their algebras".into())
}

/// The superspace measure dimension is identically 4 - D, and dual pairs
/// sum to zero.
fn check_measure_dimension(cfg: &VerifyConfig) -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_add(1));
    for _ in 0..100 {
        let d = rng.gen_range(0i64..=8);
        let lambda = rat(rng.gen_range(-60i64..=60), rng.gen_range(1i64..=12));
        if measure_dimension(d, &lambda) != rat_int(4 - d) {
            return Err(format!(
                "D = {d}, lambda = {}: measure is not 4 - D",
                format_rational(&lambda)
            ));
        }
        let dual_lambda = rat(rng.gen_range(-60i64..=60), rng.gen_range(1i64..=12));
        let sum = measure_dimension(d, &lambda) + measure_dimension(8 - d, &dual_lambda);
        if !sum.is_zero() {
            return Err(format!("D = {d}: dual measure dimensions sum to {sum}"));
        }
    }
    Ok("measure dimension is 4 - D on 100 random samples, dual sums vanish".into())
}

/// The matching condition for a shared (1,4,3)/(3,4,1) parameter is
/// λ² + λ - 1 = 0, whose positive root has the golden ratio as inverse.
fn check_golden_ratio(_cfg: &VerifyConfig) -> Result<String, String> {
    let (poly, contains_phi) = golden_ratio_constraint();
    if poly != Poly::from_i64(&[-1, 1, 1]) {
        return Err(format!("minimal polynomial is {}", poly.display("x")));
    }
    if !contains_phi {
        return Err("orbit does not contain the golden ratio".into());
    }
    Ok("constraint is lambda^2 + lambda - 1 with the golden ratio in the orbit".into())
}

/// Conjugating the Clifford family by random signed permutations changes
/// neither the closure results nor the identifications.
fn check_basis_independence(cfg: &VerifyConfig) -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_add(2));
    let config = config_of(cfg);
    let base8 = CliffordFamily::minimal(7, 8).map_err(|e| e.to_string())?;
    let base4 = CliffordFamily::minimal(3, 4).map_err(|e| e.to_string())?;
    for trial in 0..5 {
        let conj8 = base8.conjugate_by_signed_permutation(
            &random_permutation(&mut rng, 8),
            &random_signs(&mut rng, 8),
        );
        let conj4 = base4.conjugate_by_signed_permutation(
            &random_permutation(&mut rng, 4),
            &random_signs(&mut rng, 4),
        );
        let cases: Vec<(FieldContent, GlobalMultiplet)> = vec![
            (n8_content(1), GlobalMultiplet::graded_with(1, 8, &conj8).map_err(|e| e.to_string())?),
            (n8_content(4), GlobalMultiplet::graded_with(4, 8, &conj8).map_err(|e| e.to_string())?),
            (
                FieldContent::parse("1,7,7,1").map_err(|e| e.to_string())?,
                GlobalMultiplet::n7_with(&conj8).map_err(|e| e.to_string())?,
            ),
            (n4_content(1), GlobalMultiplet::graded_with(1, 4, &conj4).map_err(|e| e.to_string())?),
        ];
        for (content, multiplet) in cases {
            let custom =
                find_critical_with(&multiplet, &config).map_err(|e| format!("{content}: {e}"))?;
            let canonical =
                find_critical(&content, &config).map_err(|e| format!("{content}: {e}"))?;
            if custom.kind != canonical.kind || custom.witnesses != canonical.witnesses {
                return Err(format!(
                    "trial {trial}, {content}: conjugated closure differs from canonical"
                ));
            }
            for (cw, kw) in custom.witnesses.iter().zip(&canonical.witnesses) {
                let n = multiplet.supercharges().len();
                if identify(n, cw.even_dim, cw.odd_dim).name()
                    != identify(n, kw.even_dim, kw.odd_dim).name()
                {
                    return Err(format!("trial {trial}, {content}: identification differs"));
                }
            }
        }
    }
    Ok("5 signed-permutation conjugations preserve every closure and identification".into())
}

fn random_permutation(rng: &mut ChaCha8Rng, n: usize) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    perm
}

fn random_signs(rng: &mut ChaCha8Rng, n: usize) -> Vec<i64> {
    (0..n).map(|_| if rng.gen_bool(0.5) { 1 } else { -1 }).collect()
}

/// Every generated Clifford family satisfies antisymmetry, the
/// anticommutation relations, and γ² = -1 exactly; the corruption hook
/// flips one entry to prove the check bites.
fn check_clifford_relations(cfg: &VerifyConfig) -> Result<String, String> {
    for (m, n) in [(0usize, 1usize), (1, 2), (3, 4), (7, 8)] {
        let family = CliffordFamily::minimal(m, n).map_err(|e| format!("({m},{n}): {e}"))?;
        family.verify().map_err(|e| format!("({m},{n}): {e}"))?;
        if cfg.corrupt_clifford && (m, n) == (7, 8) {
            let mut gens = Vec::new();
            for i in 0..family.len() {
                gens.push(family.generator(i).clone());
            }
            gens[0][0][1] += 2;
            match CliffordFamily::from_generators(n, gens) {
                Err(e) => return Err(format!("corrupted (7,8) family rejected: {e}")),
                Ok(_) => return Err("corrupted family passed verification".into()),
            }
        }
    }
    Ok("families (0,1), (1,2), (3,4), (7,8) satisfy the Clifford relations".into())
}
