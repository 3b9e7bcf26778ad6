//! Conformal extension and bracket saturation.
//!
//! At a scaling dimension λ the multiplet gains the sl(2) generators
//!
//! ```text
//! H = d,   Dil = -t d - L,   K = -t^2 d - 2 t L,   L = diag(λ + offset_i)
//! ```
//!
//! and the superconformal partners `S_i = [K, Q_i]`. Saturation closes the
//! generated algebra under graded brackets: every new even element joins the
//! basis, while an independent odd element means the representation does not
//! close at this λ. The critical scaling dimensions of a multiplet are found
//! by sampling λ, reconstructing the closure residuals as rational functions
//! of λ, and verifying each rational root by an exact saturation at that
//! value.

use crate::diffop::{DiffEntry, DiffOpError, GradedOperator, LambdaValue, OpLimits, SlotList};
use crate::exact::{format_rational, rat, rat_int, ExactError, Rational};
use crate::multiplet::{FieldContent, GlobalMultiplet, MultipletError};
use crate::poly::{self, Poly};
use crate::span::{FlatKey, FlatVec, SpanBasis};
use num::Zero;
use std::collections::{HashMap, VecDeque};
use std::sync::{Arc, LazyLock, Mutex, OnceLock};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ScfError {
    #[error("conformal relation {relation} violated at lambda = {lambda}")]
    RelationViolated { relation: String, lambda: String },
    #[error("degree bound exhausted: no rational function of degree <= {bound} fits the closure residuals")]
    DegreeBoundExhausted { bound: usize },
    #[error("saturation hit resource caps at generic scaling dimensions: {0}")]
    CapAtGeneric(String),
    #[error(transparent)]
    Multiplet(#[from] MultipletError),
    #[error(transparent)]
    DiffOp(#[from] DiffOpError),
    #[error(transparent)]
    Exact(#[from] ExactError),
}

/// The conformal generators of one multiplet at a fixed scaling dimension,
/// with all defining relations verified exactly at construction.
#[derive(Debug, Clone)]
pub struct ConformalGenerators {
    slots: SlotList,
    content: FieldContent,
    lambda: Rational,
    h: GradedOperator,
    dil: GradedOperator,
    k: GradedOperator,
    supercharges: Vec<GradedOperator>,
    superconformal: Vec<GradedOperator>,
}

impl ConformalGenerators {
    pub fn build(multiplet: &GlobalMultiplet, lambda: &Rational) -> Result<Self, ScfError> {
        let slots = multiplet.slots().clone();
        let fixed = LambdaValue::Fixed(lambda.clone());
        let limits = OpLimits::default();

        let h = GradedOperator::diagonal(slots.clone(), fixed.clone(), |_, _| {
            DiffEntry::from_scalar(1, rat_int(1))
        });
        let dil = GradedOperator::diagonal(slots.clone(), fixed.clone(), |_, slot| {
            let weight = lambda + &slot.dim_offset;
            DiffEntry::from_poly(1, Poly::from_i64(&[0, -1]))
                .add(&DiffEntry::from_scalar(0, -weight))
        });
        let k = GradedOperator::diagonal(slots.clone(), fixed.clone(), |_, slot| {
            let weight = lambda + &slot.dim_offset;
            DiffEntry::from_poly(1, Poly::from_i64(&[0, 0, -1]))
                .add(&DiffEntry::from_poly(0, Poly::new(vec![Rational::zero(), rat_int(-2) * weight])))
        });

        let supercharges: Vec<GradedOperator> = multiplet
            .supercharges()
            .iter()
            .map(|q| q.with_lambda(fixed.clone()))
            .collect();
        let superconformal: Vec<GradedOperator> = supercharges
            .iter()
            .map(|q| k.bracket(q, &limits))
            .collect::<Result<_, _>>()?;

        let gens = ConformalGenerators {
            slots,
            content: multiplet.content().clone(),
            lambda: lambda.clone(),
            h,
            dil,
            k,
            supercharges,
            superconformal,
        };
        gens.verify_relations()?;
        Ok(gens)
    }

    /// Checks the sl(2) relations, the conformal weights of Q and S, and the
    /// closure of the supersymmetric square on `H`, `K`, `Dil`.
    fn verify_relations(&self) -> Result<(), ScfError> {
        let limits = OpLimits::default();
        let fail = |relation: &str| {
            Err(ScfError::RelationViolated {
                relation: relation.to_string(),
                lambda: format_rational(&self.lambda),
            })
        };
        let check = |name: &str, got: GradedOperator, want: &GradedOperator| {
            if &got == want {
                Ok(())
            } else {
                fail(name)
            }
        };

        check("[Dil, H] = H", self.dil.bracket(&self.h, &limits)?, &self.h)?;
        check(
            "[Dil, K] = -K",
            self.dil.bracket(&self.k, &limits)?,
            &self.k.scale(&rat_int(-1)),
        )?;
        check(
            "[H, K] = 2 Dil",
            self.h.bracket(&self.k, &limits)?,
            &self.dil.scale(&rat_int(2)),
        )?;

        let check_zero = |name: &str, got: GradedOperator| {
            if got.is_zero() {
                Ok(())
            } else {
                fail(name)
            }
        };
        let h2 = self.h.scale(&rat_int(2));
        let k2 = self.k.scale(&rat_int(-2));
        for (i, q) in self.supercharges.iter().enumerate() {
            let s = &self.superconformal[i];
            check(
                &format!("[Dil, Q_{}] = Q_{}/2", i + 1, i + 1),
                self.dil.bracket(q, &limits)?,
                &q.scale(&rat(1, 2)),
            )?;
            check(
                &format!("[Dil, S_{}] = -S_{}/2", i + 1, i + 1),
                self.dil.bracket(s, &limits)?,
                &s.scale(&rat(-1, 2)),
            )?;
            check(
                &format!("[H, S_{}] = Q_{}", i + 1, i + 1),
                self.h.bracket(s, &limits)?,
                q,
            )?;
            check_zero(
                &format!("[K, S_{}] = 0", i + 1),
                self.k.bracket(s, &limits)?,
            )?;
            for (j, qj) in self.supercharges.iter().enumerate().skip(i) {
                let sj = &self.superconformal[j];
                if i == j {
                    check(
                        &format!("{{Q_{i1}, Q_{i1}}} = 2 H", i1 = i + 1),
                        q.bracket(qj, &limits)?,
                        &h2,
                    )?;
                    check(
                        &format!("{{S_{i1}, S_{i1}}} = -2 K", i1 = i + 1),
                        s.bracket(sj, &limits)?,
                        &k2,
                    )?;
                } else {
                    check_zero(
                        &format!("{{Q_{}, Q_{}}} = 0", i + 1, j + 1),
                        q.bracket(qj, &limits)?,
                    )?;
                    check_zero(
                        &format!("{{S_{}, S_{}}} = 0", i + 1, j + 1),
                        s.bracket(sj, &limits)?,
                    )?;
                }
            }
        }
        Ok(())
    }

    pub fn lambda(&self) -> &Rational {
        &self.lambda
    }

    pub fn content(&self) -> &FieldContent {
        &self.content
    }

    pub fn slots(&self) -> &SlotList {
        &self.slots
    }

    pub fn n_supercharges(&self) -> usize {
        self.supercharges.len()
    }

    /// Seed basis in canonical order: `H, Dil, K, Q_1.., S_1..`.
    pub fn seeds(&self) -> Vec<GradedOperator> {
        let mut out = vec![self.h.clone(), self.dil.clone(), self.k.clone()];
        out.extend(self.supercharges.iter().cloned());
        out.extend(self.superconformal.iter().cloned());
        out
    }
}

/// Resource caps for saturation. Hitting one is a reported failure, not a
/// panic: it means the bracket closure is growing past anything a closed
/// superalgebra in scope would produce.
#[derive(Debug, Clone, Copy)]
pub struct SaturationCaps {
    pub dim_cap: usize,
    pub t_cap: u32,
    pub limits: OpLimits,
}

impl Default for SaturationCaps {
    fn default() -> Self {
        SaturationCaps {
            dim_cap: 64,
            t_cap: 4,
            limits: OpLimits::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SaturationFailure {
    /// An odd bracket escaped the span: the defining obstruction to closure.
    OddResidual { pair: (usize, usize) },
    DimensionCap { cap: usize },
    TDegreeCap { cap: u32, got: u32 },
    PartialCap { message: String },
}

/// Signature of how a saturation run failed, used to group sample points
/// that follow the same generic path.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub(crate) enum FailSignature {
    Odd {
        appended: Vec<(usize, usize)>,
        pair: (usize, usize),
    },
    Cap {
        appended: Vec<(usize, usize)>,
        kind: String,
    },
}

#[derive(Debug)]
pub struct SaturationOutcome {
    pub closed: bool,
    /// Seeds followed by every independent even bracket result, in append
    /// order. This is the closed algebra basis when `closed` holds.
    pub basis: Vec<GradedOperator>,
    pub even_dim: usize,
    pub odd_dim: usize,
    pub failure: Option<SaturationFailure>,
    /// The first odd residual outside the span, when that is what failed.
    pub residual: Option<FlatVec>,
    pub(crate) appended_pairs: Vec<(usize, usize)>,
}

impl SaturationOutcome {
    pub(crate) fn signature(&self) -> Option<FailSignature> {
        match &self.failure {
            None => None,
            Some(SaturationFailure::OddResidual { pair }) => Some(FailSignature::Odd {
                appended: self.appended_pairs.clone(),
                pair: *pair,
            }),
            Some(other) => Some(FailSignature::Cap {
                appended: self.appended_pairs.clone(),
                kind: format!("{other:?}"),
            }),
        }
    }
}

/// Closes the seed set under graded brackets. Even results join the basis;
/// the first independent odd result stops the run as a closure failure.
pub fn saturate(gens: &ConformalGenerators, caps: &SaturationCaps) -> SaturationOutcome {
    let mut basis = gens.seeds();
    let mut span = SpanBasis::new();
    for op in &basis {
        let accepted = span.push_raw(&op.flatten());
        debug_assert!(accepted, "seed operators are independent");
    }

    let mut queue: VecDeque<(usize, usize)> = VecDeque::new();
    for i in 0..basis.len() {
        for j in i..basis.len() {
            queue.push_back((i, j));
        }
    }

    let mut appended_pairs = Vec::new();
    let mut failure = None;
    let mut residual = None;

    while let Some((i, j)) = queue.pop_front() {
        let br = match basis[i].bracket(&basis[j], &caps.limits) {
            Ok(op) => op,
            Err(e @ DiffOpError::PartialCapExceeded { .. }) => {
                failure = Some(SaturationFailure::PartialCap { message: e.to_string() });
                break;
            }
            Err(e) => {
                // slot or lambda mismatches cannot happen between basis
                // elements of one run
                unreachable!("bracket failed inside saturation: {e}");
            }
        };
        if br.is_zero() {
            continue;
        }
        let t_deg = br.max_t_degree();
        if t_deg > caps.t_cap {
            failure = Some(SaturationFailure::TDegreeCap { cap: caps.t_cap, got: t_deg });
            break;
        }
        let red = span.reduce(&br.flatten());
        if red.in_span() {
            continue;
        }
        if br.parity().is_odd() {
            failure = Some(SaturationFailure::OddResidual { pair: (i, j) });
            residual = Some(red.residual);
            break;
        }
        if basis.len() == caps.dim_cap {
            failure = Some(SaturationFailure::DimensionCap { cap: caps.dim_cap });
            break;
        }
        let accepted = span.push_raw(&br.flatten());
        debug_assert!(accepted);
        basis.push(br);
        appended_pairs.push((i, j));
        let new = basis.len() - 1;
        for k in 0..=new {
            queue.push_back((k, new));
        }
    }

    let closed = failure.is_none();
    let even_dim = basis.iter().filter(|op| !op.parity().is_odd()).count();
    let odd_dim = basis.len() - even_dim;
    SaturationOutcome {
        closed,
        basis,
        even_dim,
        odd_dim,
        failure,
        residual,
        appended_pairs,
    }
}

/// How a multiplet's conformal closure depends on the scaling dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClosureKind {
    /// Closes at every sampled λ (and the residual functions vanish
    /// identically).
    AnyLambda,
    /// Closes exactly at these values, sorted ascending.
    Critical(Vec<Rational>),
    /// No rational λ closes the representation.
    Never,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosureWitness {
    pub lambda: Rational,
    pub even_dim: usize,
    pub odd_dim: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosureResult {
    pub content: FieldContent,
    pub kind: ClosureKind,
    /// Dimensions of the closed algebra at each critical value (empty for
    /// `AnyLambda` and `Never`).
    pub witnesses: Vec<ClosureWitness>,
}

#[derive(Debug, Clone, Copy)]
pub struct CriticalConfig {
    /// Degree bound for the rational functions of λ reconstructed from the
    /// closure residuals; doubled once before giving up.
    pub degree_bound: usize,
    pub caps: SaturationCaps,
}

impl Default for CriticalConfig {
    fn default() -> Self {
        CriticalConfig {
            degree_bound: 16,
            caps: SaturationCaps::default(),
        }
    }
}

/// Sample points j + 5/7: never a half-integer (where a slot dimension
/// could degenerate) and never one of the small-denominator values where
/// closures in scope become critical.
fn sample_lambda(j: usize) -> Rational {
    rat_int(j as i64) + rat(5, 7)
}

type ClosureKey = (FieldContent, Rational);
type CachedOutcome = Result<Arc<SaturationOutcome>, ScfError>;
static CLOSURE_CACHE: LazyLock<Mutex<HashMap<ClosureKey, Arc<OnceLock<CachedOutcome>>>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));

type CriticalKey = (FieldContent, usize);
type CachedResult = Result<Arc<ClosureResult>, ScfError>;
static CRITICAL_CACHE: LazyLock<Mutex<HashMap<CriticalKey, Arc<OnceLock<CachedResult>>>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));

/// Saturates the canonical multiplet of `content` at one λ. Results are
/// cached per (content, λ) for the lifetime of the process.
pub fn closure_at(
    content: &FieldContent,
    lambda: &Rational,
    caps: &SaturationCaps,
) -> Result<Arc<SaturationOutcome>, ScfError> {
    let key = (content.clone(), lambda.clone());
    let cell = {
        let mut cache = CLOSURE_CACHE.lock().unwrap();
        cache.entry(key).or_insert_with(|| Arc::new(OnceLock::new())).clone()
    };
    let caps = *caps;
    cell.get_or_init(move || {
        let multiplet = GlobalMultiplet::build(content)?;
        let gens = ConformalGenerators::build(&multiplet, lambda)?;
        Ok(Arc::new(saturate(&gens, &caps)))
    })
    .clone()
}

/// Finds every scaling dimension at which the canonical multiplet of
/// `content` closes. Cached per (content, degree bound).
pub fn find_critical(
    content: &FieldContent,
    config: &CriticalConfig,
) -> Result<Arc<ClosureResult>, ScfError> {
    let key = (content.clone(), config.degree_bound);
    let cell = {
        let mut cache = CRITICAL_CACHE.lock().unwrap();
        cache.entry(key).or_insert_with(|| Arc::new(OnceLock::new())).clone()
    };
    let config = *config;
    cell.get_or_init(move || {
        let multiplet = GlobalMultiplet::build(content)?;
        find_critical_with(&multiplet, &config).map(Arc::new)
    })
    .clone()
}

/// Uncached core of [`find_critical`], usable with a non-canonical
/// multiplet (e.g. one built over a conjugated Clifford family).
pub fn find_critical_with(
    multiplet: &GlobalMultiplet,
    config: &CriticalConfig,
) -> Result<ClosureResult, ScfError> {
    let mut bound = config.degree_bound;
    for attempt in 0..2 {
        match critical_attempt(multiplet, bound, &config.caps) {
            Ok(result) => return Ok(result),
            Err(ScfError::DegreeBoundExhausted { .. }) if attempt == 0 => {
                bound *= 2;
            }
            Err(e) => return Err(e),
        }
    }
    Err(ScfError::DegreeBoundExhausted { bound })
}

fn saturate_content_or_multiplet(
    multiplet: &GlobalMultiplet,
    lambda: &Rational,
    caps: &SaturationCaps,
) -> Result<Arc<SaturationOutcome>, ScfError> {
    // canonical multiplets go through the cache; custom ones are computed
    // directly
    let canonical = GlobalMultiplet::build(multiplet.content())
        .map(|m| m.supercharges() == multiplet.supercharges())
        .unwrap_or(false);
    if canonical {
        closure_at(multiplet.content(), lambda, caps)
    } else {
        let gens = ConformalGenerators::build(multiplet, lambda)?;
        Ok(Arc::new(saturate(&gens, caps)))
    }
}

fn critical_attempt(
    multiplet: &GlobalMultiplet,
    bound: usize,
    caps: &SaturationCaps,
) -> Result<ClosureResult, ScfError> {
    let n_samples = 2 * bound + 4;
    let mut closed_samples: Vec<(Rational, Arc<SaturationOutcome>)> = Vec::new();
    let mut failed_samples: Vec<(Rational, Arc<SaturationOutcome>)> = Vec::new();
    for j in 0..n_samples {
        let lambda = sample_lambda(j);
        let outcome = saturate_content_or_multiplet(multiplet, &lambda, caps)?;
        if outcome.closed {
            closed_samples.push((lambda, outcome));
        } else {
            failed_samples.push((lambda, outcome));
        }
    }

    if failed_samples.is_empty() {
        return Ok(ClosureResult {
            content: multiplet.content().clone(),
            kind: ClosureKind::AnyLambda,
            witnesses: Vec::new(),
        });
    }

    // group the failures by their saturation path and take the generic one
    let mut groups: HashMap<FailSignature, Vec<usize>> = HashMap::new();
    for (idx, (_, outcome)) in failed_samples.iter().enumerate() {
        groups.entry(outcome.signature().unwrap()).or_default().push(idx);
    }
    let (generic_sig, generic_idx) = groups
        .into_iter()
        .max_by_key(|(_, v)| (v.len(), std::cmp::Reverse(v[0])))
        .map(|(sig, v)| (sig, v))
        .unwrap();

    if let FailSignature::Cap { kind, .. } = &generic_sig {
        return Err(ScfError::CapAtGeneric(kind.clone()));
    }
    if generic_idx.len() < 2 * bound + 2 {
        return Err(ScfError::DegreeBoundExhausted { bound });
    }

    // reconstruct the residual coefficients at up to three canonical keys
    // as rational functions of λ over the generic group
    let reference = &failed_samples[generic_idx[0]].1;
    let columns: Vec<FlatKey> = reference
        .residual
        .as_ref()
        .expect("odd failure carries a residual")
        .iter()
        .map(|(k, _)| *k)
        .take(3)
        .collect();

    let mut candidates: Vec<Rational> = Vec::new();
    let mut numerators: Vec<Poly> = Vec::new();
    for column in &columns {
        let samples: Vec<(Rational, Rational)> = generic_idx
            .iter()
            .map(|&idx| {
                let (lambda, outcome) = &failed_samples[idx];
                let value = outcome
                    .residual
                    .as_ref()
                    .and_then(|r| r.get(column).cloned())
                    .unwrap_or_else(Rational::zero);
                (lambda.clone(), value)
            })
            .collect();
        let (num, den) = poly::reconstruct_rational_fn(&samples, bound, bound)
            .map_err(|_| ScfError::DegreeBoundExhausted { bound })?;
        numerators.push(num.primitive());
        // a critical λ can also hide where the generic reduction itself
        // degenerates, i.e. at roots of the denominator
        if den.degree() > Some(0) {
            candidates.extend(den.primitive().rational_roots()?);
        }
    }

    // common roots of the residual numerators
    let gcd = numerators
        .iter()
        .fold(Poly::zero(), |acc, n| acc.gcd(n))
        .primitive();
    if gcd.is_zero() {
        // every chosen residual coefficient vanishes identically on the
        // group, which contradicts these samples having failed
        return Err(ScfError::DegreeBoundExhausted { bound });
    }
    if gcd.degree() > Some(0) {
        candidates.extend(gcd.rational_roots()?);
    }

    candidates.sort();
    candidates.dedup();

    // verify every candidate by exact saturation at that λ
    let mut criticals: Vec<(Rational, Arc<SaturationOutcome>)> = closed_samples;
    for lambda in candidates {
        let outcome = saturate_content_or_multiplet(multiplet, &lambda, caps)?;
        if outcome.closed {
            criticals.push((lambda, outcome));
        }
    }
    criticals.sort_by(|a, b| a.0.cmp(&b.0));
    criticals.dedup_by(|a, b| a.0 == b.0);

    if criticals.is_empty() {
        return Ok(ClosureResult {
            content: multiplet.content().clone(),
            kind: ClosureKind::Never,
            witnesses: Vec::new(),
        });
    }
    let witnesses = criticals
        .iter()
        .map(|(lambda, outcome)| ClosureWitness {
            lambda: lambda.clone(),
            even_dim: outcome.even_dim,
            odd_dim: outcome.odd_dim,
        })
        .collect();
    Ok(ClosureResult {
        content: multiplet.content().clone(),
        kind: ClosureKind::Critical(criticals.into_iter().map(|(l, _)| l).collect()),
        witnesses,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn content(s: &str) -> FieldContent {
        FieldContent::parse(s).unwrap()
    }

    #[test]
    fn n1_conformal_relations_hold() {
        let m = GlobalMultiplet::root(1).unwrap();
        for lam in [rat_int(0), rat(5, 7), rat(-3, 2), rat_int(4)] {
            assert!(ConformalGenerators::build(&m, &lam).is_ok(), "lambda = {lam}");
        }
    }

    #[test]
    fn n1_closes_to_the_smallest_superalgebra() {
        let m = GlobalMultiplet::root(1).unwrap();
        let gens = ConformalGenerators::build(&m, &rat(5, 7)).unwrap();
        let out = saturate(&gens, &SaturationCaps::default());
        assert!(out.closed);
        assert_eq!((out.even_dim, out.odd_dim), (3, 2));
    }

    #[test]
    fn n2_closes_everywhere_with_r_charge() {
        let m = GlobalMultiplet::root(2).unwrap();
        let gens = ConformalGenerators::build(&m, &rat(12, 7)).unwrap();
        let out = saturate(&gens, &SaturationCaps::default());
        assert!(out.closed);
        // sl(2) + one R generator, four odd directions
        assert_eq!((out.even_dim, out.odd_dim), (4, 4));
    }

    #[test]
    fn n4_generic_closure_is_nine_by_eight() {
        let m = GlobalMultiplet::graded(0, 4).unwrap();
        let gens = ConformalGenerators::build(&m, &rat(5, 7)).unwrap();
        let out = saturate(&gens, &SaturationCaps::default());
        assert!(out.closed);
        assert_eq!((out.even_dim, out.odd_dim), (9, 8));
    }

    #[test]
    fn find_critical_reports_any_lambda_for_small_n() {
        let cfg = CriticalConfig { degree_bound: 4, ..Default::default() };
        for c in ["1,1", "2,2", "1,2,1", "0,4,4", "2,4,2", "4,4"] {
            let result = find_critical(&content(c), &cfg).unwrap();
            assert_eq!(result.kind, ClosureKind::AnyLambda, "{c}");
        }
    }

    #[test]
    fn sample_points_avoid_degenerate_dimensions() {
        for j in 0..40 {
            let l = sample_lambda(j);
            for off in 0..4 {
                assert!(!(l.clone() + rat(off, 2)).is_zero());
            }
            assert_eq!(l.denom(), &num::BigInt::from(7));
        }
    }
}
