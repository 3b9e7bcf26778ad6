//! Record types emitted by the command-line front end.
//!
//! Every machine-readable output is a single self-describing document with
//! a `schema_version` field, assembled here from the engine's types so the
//! integration tests can deserialize and round-trip them.

use dmodrep::algebra::{identify, ClosedSuperalgebra};
use dmodrep::conformal::{ClosureKind, ClosureResult};
use dmodrep::diffop::Parity;
use dmodrep::exact::format_rational;
use dmodrep::geometry::TableRow;
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

/// One closure point: the scaling dimension, the closed dimensions, and
/// the algebra those dimensions identify.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WitnessRecord {
    pub lambda: String,
    pub even_dim: usize,
    pub odd_dim: usize,
    pub algebra: Option<String>,
}

/// Output of the `critical` command.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CriticalRecord {
    pub schema_version: u32,
    pub content: String,
    /// "critical", "any-lambda", or "never".
    pub kind: String,
    pub critical_lambdas: Vec<String>,
    pub witnesses: Vec<WitnessRecord>,
}

pub fn critical_record(result: &ClosureResult) -> CriticalRecord {
    let (kind, lambdas) = match &result.kind {
        ClosureKind::AnyLambda => ("any-lambda", Vec::new()),
        ClosureKind::Never => ("never", Vec::new()),
        ClosureKind::Critical(values) => {
            ("critical", values.iter().map(format_rational).collect())
        }
    };
    let witnesses = result
        .witnesses
        .iter()
        .map(|w| WitnessRecord {
            lambda: format_rational(&w.lambda),
            even_dim: w.even_dim,
            odd_dim: w.odd_dim,
            // the odd part is span{Q, S}, so half of it counts supercharges
            algebra: identify(w.odd_dim / 2, w.even_dim, w.odd_dim)
                .name()
                .map(String::from),
        })
        .collect();
    CriticalRecord {
        schema_version: SCHEMA_VERSION,
        content: result.content.to_string(),
        kind: kind.into(),
        critical_lambdas: lambdas,
        witnesses,
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CurvatureRecord {
    pub coefficient: String,
    pub power: i64,
}

/// One row of the `table` command's machine-readable output.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TableRecord {
    pub d: i64,
    pub phi_power: Option<i64>,
    pub curvature: Option<CurvatureRecord>,
    pub lambda_cr: Option<String>,
    pub action_exists: bool,
    pub algebra: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TableDoc {
    pub schema_version: u32,
    pub rows: Vec<TableRecord>,
}

pub fn table_doc(rows: &[TableRow]) -> TableDoc {
    let rows = rows
        .iter()
        .map(|row| TableRecord {
            d: row.d,
            phi_power: row.phi_power,
            curvature: row.curvature.as_ref().map(|(c, p)| CurvatureRecord {
                coefficient: format_rational(c),
                power: *p,
            }),
            lambda_cr: row.lambda_cr.as_ref().map(format_rational),
            action_exists: row.action_exists,
            algebra: row.algebra.map(String::from),
        })
        .collect();
    TableDoc { schema_version: SCHEMA_VERSION, rows }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BasisRecord {
    pub label: String,
    pub parity: String,
    /// Grading weight: the eigenvalue under the bracket with Dil.
    pub weight: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AlphaRecord {
    pub values: Vec<String>,
    pub degenerate: bool,
}

/// Output of the `export` command: the full closed superalgebra.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AlgebraRecord {
    pub schema_version: u32,
    pub content: String,
    pub lambda: String,
    pub n_supercharges: usize,
    pub even_dim: usize,
    pub odd_dim: usize,
    pub algebra: Option<String>,
    /// Family parameter orbit, for the shapes that carry one.
    pub alpha_orbit: Option<AlphaRecord>,
    pub basis: Vec<BasisRecord>,
    /// Sparse brackets [e_a, e_b] = sum_c coeff e_c as (a, b, c, coeff)
    /// quadruples, sorted lexicographically.
    pub structure_constants: Vec<(usize, usize, usize, String)>,
}

pub fn algebra_record(algebra: &ClosedSuperalgebra) -> AlgebraRecord {
    let basis = (0..algebra.dim())
        .map(|a| BasisRecord {
            label: algebra.labels()[a].clone(),
            parity: match algebra.parity(a) {
                Parity::Even => "even".into(),
                Parity::Odd => "odd".into(),
            },
            weight: format_rational(algebra.weight(a)),
        })
        .collect();
    let mut constants = Vec::new();
    for a in 0..algebra.dim() {
        for b in 0..algebra.dim() {
            for (c, coeff) in algebra.bracket_coords(a, b) {
                constants.push((a, b, *c, format_rational(coeff)));
            }
        }
    }
    constants.sort();
    AlgebraRecord {
        schema_version: SCHEMA_VERSION,
        content: algebra.content().to_string(),
        lambda: format_rational(algebra.lambda()),
        n_supercharges: algebra.n_supercharges(),
        even_dim: algebra.even_dim(),
        odd_dim: algebra.odd_dim(),
        algebra: identify(algebra.n_supercharges(), algebra.even_dim(), algebra.odd_dim())
            .name()
            .map(String::from),
        alpha_orbit: algebra.extract_alpha().ok().map(|orbit| AlphaRecord {
            values: orbit.values.iter().map(format_rational).collect(),
            degenerate: orbit.degenerate,
        }),
        basis,
        structure_constants: constants,
    }
}

/// Pretty JSON with a trailing newline; all commands emit through this so
/// outputs are byte-stable.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("serializable record");
    text.push('\n');
    text
}
