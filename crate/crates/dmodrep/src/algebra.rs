//! Abstract structure of the closed superalgebras.
//!
//! Saturation delivers a basis of concrete differential operators. Here that
//! basis becomes an abstract superalgebra: exact structure constants over a
//! cleaned basis (R generators are the appended even brackets with their
//! sl(2) components removed), grading weights, the graded Jacobi check,
//! Killing and invariant bilinear forms, and a catalogue lookup that names
//! the algebra from its dimension signature. For the one-parameter family
//! with nine even and eight odd directions, [`ClosedSuperalgebra::extract_alpha`]
//! recovers the parameter from the ratios of the three ideal weights in the
//! odd-odd anticommutator.

use crate::conformal::{closure_at, SaturationCaps, SaturationOutcome, ScfError};
use crate::diffop::{DiffOpError, GradedOperator, OpLimits, Parity};
use crate::exact::{format_rational, Rational};
use crate::linalg;
use crate::multiplet::FieldContent;
use crate::poly::Poly;
use crate::span::SpanBasis;
use num::{One, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("cannot extract structure constants: the representation does not close")]
    NotClosed,
    #[error("bracket [{a}, {b}] escapes the closed span")]
    EscapedSpan { a: String, b: String },
    #[error("the dilatation does not act diagonally on basis element {label}")]
    NonDiagonalGrading { label: String },
    #[error("graded Jacobi identity fails on ({a}, {b}, {c})")]
    JacobiViolated { a: String, b: String, c: String },
    #[error("invariant form solution space has dimension {dim}, expected 1")]
    InvariantFormDimension { dim: usize },
    #[error("algebra shape ({even}|{odd}) does not admit the three-ideal decomposition")]
    NotThreeIdealShape { even: usize, odd: usize },
    #[error("centroid of the R-symmetry part has dimension {dim}, expected 2")]
    CentroidDimension { dim: usize },
    #[error("ideal split failed: {0}")]
    IdealSplitFailed(String),
    #[error("odd-odd block of the invariant form is singular")]
    SingularOddForm,
    #[error("ideal weights do not sum to zero: {0}")]
    WeightSumNonzero(String),
    #[error(transparent)]
    Scf(#[from] ScfError),
    #[error(transparent)]
    DiffOp(#[from] DiffOpError),
}

/// A finite-dimensional superalgebra with exact structure constants,
/// extracted from a closed saturation basis.
///
/// Basis order is `H, Dil, K, Q_1.., S_1.., R_1..`; `constants[a][b]` holds
/// the sparse coordinates of the graded bracket of elements `a` and `b`.
pub struct ClosedSuperalgebra {
    content: FieldContent,
    lambda: Rational,
    labels: Vec<String>,
    parities: Vec<Parity>,
    n_supercharges: usize,
    constants: Vec<Vec<Vec<(usize, Rational)>>>,
    weights: Vec<Rational>,
}

impl ClosedSuperalgebra {
    /// Saturates the canonical multiplet of `content` at `lambda` and
    /// extracts the structure constants.
    pub fn at_lambda(content: &FieldContent, lambda: &Rational) -> Result<Self, AlgebraError> {
        let outcome = closure_at(content, lambda, &SaturationCaps::default())?;
        Self::from_outcome(content, lambda, &outcome)
    }

    pub fn from_outcome(
        content: &FieldContent,
        lambda: &Rational,
        outcome: &SaturationOutcome,
    ) -> Result<Self, AlgebraError> {
        if !outcome.closed {
            return Err(AlgebraError::NotClosed);
        }
        let limits = OpLimits::default();
        let n_odd = outcome.basis.iter().filter(|op| op.parity().is_odd()).count();
        let n = n_odd / 2;
        let seeds = 3 + 2 * n;

        // appended even brackets carry sl(2) components (e.g. the Dil part
        // of {Q_i, S_i}); the R generators are what remains after removing
        // them
        let mut sl2 = SpanBasis::new();
        for op in &outcome.basis[0..3] {
            let ok = sl2.push_raw(&op.flatten());
            debug_assert!(ok);
        }
        let mut ops: Vec<GradedOperator> = outcome.basis[..seeds].to_vec();
        for op in &outcome.basis[seeds..] {
            let red = sl2.reduce(&op.flatten());
            let mut cleaned = op.clone();
            for (k, c) in red.coords.iter().enumerate() {
                if !c.is_zero() {
                    cleaned = cleaned.sub(&outcome.basis[k].scale(c))?;
                }
            }
            ops.push(cleaned);
        }

        let dim = ops.len();
        let mut labels: Vec<String> = vec!["H".into(), "Dil".into(), "K".into()];
        labels.extend((1..=n).map(|i| format!("Q{i}")));
        labels.extend((1..=n).map(|i| format!("S{i}")));
        labels.extend((1..=dim - seeds).map(|i| format!("R{i}")));
        let parities: Vec<Parity> = ops.iter().map(|op| op.parity()).collect();

        let mut span = SpanBasis::new();
        for op in &ops {
            let ok = span.push_raw(&op.flatten());
            debug_assert!(ok, "basis stays independent after sl(2) cleanup");
        }

        let mut constants = vec![vec![Vec::new(); dim]; dim];
        for a in 0..dim {
            for b in a..dim {
                let br = ops[a].bracket(&ops[b], &limits)?;
                if br.is_zero() {
                    continue;
                }
                let red = span.reduce(&br.flatten());
                if !red.in_span() {
                    return Err(AlgebraError::EscapedSpan {
                        a: labels[a].clone(),
                        b: labels[b].clone(),
                    });
                }
                let sparse: Vec<(usize, Rational)> = red
                    .coords
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(k, c)| (k, c.clone()))
                    .collect();
                if a != b {
                    let both_odd = parities[a].is_odd() && parities[b].is_odd();
                    constants[b][a] = if both_odd {
                        sparse.clone()
                    } else {
                        sparse.iter().map(|(k, c)| (*k, -c)).collect()
                    };
                }
                constants[a][b] = sparse;
            }
        }

        // [Dil, e_a] = w_a e_a defines the conformal weight of each element
        let mut weights = Vec::with_capacity(dim);
        for a in 0..dim {
            let list = &constants[1][a];
            let w = match list.as_slice() {
                [] => Rational::zero(),
                [(c, w)] if *c == a => w.clone(),
                _ => {
                    return Err(AlgebraError::NonDiagonalGrading {
                        label: labels[a].clone(),
                    })
                }
            };
            weights.push(w);
        }

        Ok(ClosedSuperalgebra {
            content: content.clone(),
            lambda: lambda.clone(),
            labels,
            parities,
            n_supercharges: n,
            constants,
            weights,
        })
    }

    pub fn dim(&self) -> usize {
        self.parities.len()
    }

    pub fn even_dim(&self) -> usize {
        self.parities.iter().filter(|p| !p.is_odd()).count()
    }

    pub fn odd_dim(&self) -> usize {
        self.dim() - self.even_dim()
    }

    pub fn n_supercharges(&self) -> usize {
        self.n_supercharges
    }

    pub fn lambda(&self) -> &Rational {
        &self.lambda
    }

    pub fn content(&self) -> &FieldContent {
        &self.content
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn parity(&self, a: usize) -> Parity {
        self.parities[a]
    }

    pub fn weight(&self, a: usize) -> &Rational {
        &self.weights[a]
    }

    /// Sparse coordinates of the graded bracket of basis elements `a`, `b`.
    pub fn bracket_coords(&self, a: usize, b: usize) -> &[(usize, Rational)] {
        &self.constants[a][b]
    }

    /// Bilinear extension of the bracket to coordinate vectors.
    pub fn bracket_vectors(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim()];
        for (a, xa) in x.iter().enumerate() {
            if xa.is_zero() {
                continue;
            }
            for (b, yb) in y.iter().enumerate() {
                if yb.is_zero() {
                    continue;
                }
                let f = xa * yb;
                for (c, coef) in &self.constants[a][b] {
                    out[*c] += &f * coef;
                }
            }
        }
        out
    }

    fn sign_neg(&self, i: usize, j: usize) -> bool {
        self.parities[i].is_odd() && self.parities[j].is_odd()
    }

    fn ad_term(&self, acc: &mut [Rational], negate: bool, x: usize, y: usize, z: usize) {
        for (e, c1) in &self.constants[y][z] {
            for (d, c2) in &self.constants[x][*e] {
                let t = c1 * c2;
                if negate {
                    acc[*d] -= t;
                } else {
                    acc[*d] += t;
                }
            }
        }
    }

    /// Checks the graded Jacobi identity on every ordered triple.
    pub fn super_jacobi(&self) -> Result<(), AlgebraError> {
        let dim = self.dim();
        let mut acc = vec![Rational::zero(); dim];
        for a in 0..dim {
            for b in 0..dim {
                for c in 0..dim {
                    if self.constants[b][c].is_empty()
                        && self.constants[c][a].is_empty()
                        && self.constants[a][b].is_empty()
                    {
                        continue;
                    }
                    for x in acc.iter_mut() {
                        x.set_zero();
                    }
                    self.ad_term(&mut acc, self.sign_neg(a, c), a, b, c);
                    self.ad_term(&mut acc, self.sign_neg(b, a), b, c, a);
                    self.ad_term(&mut acc, self.sign_neg(c, b), c, a, b);
                    if acc.iter().any(|x| !x.is_zero()) {
                        return Err(AlgebraError::JacobiViolated {
                            a: self.labels[a].clone(),
                            b: self.labels[b].clone(),
                            c: self.labels[c].clone(),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// Killing form B(a, b) = str(ad a . ad b).
    pub fn killing_form(&self) -> Vec<Vec<Rational>> {
        let dim = self.dim();
        let mut form = linalg::zeros(dim, dim);
        for i in 0..dim {
            for j in 0..dim {
                let mut acc = Rational::zero();
                for c in 0..dim {
                    for (e, c1) in &self.constants[j][c] {
                        for (d, c2) in &self.constants[i][*e] {
                            if *d == c {
                                let t = c1 * c2;
                                if self.parities[c].is_odd() {
                                    acc -= t;
                                } else {
                                    acc += t;
                                }
                            }
                        }
                    }
                }
                form[i][j] = acc;
            }
        }
        form
    }

    fn even_positions(&self) -> Vec<usize> {
        (0..self.dim()).filter(|&i| !self.parities[i].is_odd()).collect()
    }

    fn odd_positions(&self) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.parities[i].is_odd()).collect()
    }

    /// Solves for a graded-symmetric invariant bilinear form: symmetric on
    /// the even part, antisymmetric on the odd part, zero between them, and
    /// B([a,b],c) = B(a,[b,c]) throughout. Requires the solution space to be
    /// one-dimensional; normalization is arbitrary.
    pub fn invariant_form(&self) -> Result<Vec<Vec<Rational>>, AlgebraError> {
        let dim = self.dim();
        let even_pos = self.even_positions();
        let odd_pos = self.odd_positions();
        let (ne, no) = (even_pos.len(), odd_pos.len());
        let mut rank = vec![0usize; dim];
        for (r, &p) in even_pos.iter().enumerate() {
            rank[p] = r;
        }
        for (r, &p) in odd_pos.iter().enumerate() {
            rank[p] = r;
        }
        let ne_pairs = ne * (ne + 1) / 2;
        let n_unknowns = ne_pairs + no * (no - 1) / 2;

        // unknown slot and sign of B(i, j), if it can be nonzero
        let slot = |i: usize, j: usize| -> Option<(usize, bool)> {
            let (oi, oj) = (self.parities[i].is_odd(), self.parities[j].is_odd());
            if oi != oj {
                return None;
            }
            let (p, q) = (rank[i], rank[j]);
            if !oi {
                let (p, q) = if p <= q { (p, q) } else { (q, p) };
                Some((p * ne - p * (p.max(1) - 1) / 2 + (q - p), true))
            } else if p == q {
                None
            } else {
                let flip = p > q;
                let (p, q) = if flip { (q, p) } else { (p, q) };
                let idx = ne_pairs + p * (no - 1) - p * (p.max(1) - 1) / 2 + (q - p - 1);
                Some((idx, !flip))
            }
        };

        let mut rows: Vec<(usize, Vec<Rational>)> = Vec::new();
        for a in 0..dim {
            for b in 0..dim {
                for c in 0..dim {
                    if self.constants[a][b].is_empty() && self.constants[b][c].is_empty() {
                        continue;
                    }
                    let mut row = vec![Rational::zero(); n_unknowns];
                    for (e, coef) in &self.constants[a][b] {
                        if let Some((idx, pos)) = slot(*e, c) {
                            if pos {
                                row[idx] += coef;
                            } else {
                                row[idx] -= coef;
                            }
                        }
                    }
                    for (f, coef) in &self.constants[b][c] {
                        if let Some((idx, pos)) = slot(a, *f) {
                            if pos {
                                row[idx] -= coef;
                            } else {
                                row[idx] += coef;
                            }
                        }
                    }
                    linalg::insert_echelon_row(&mut rows, row);
                }
            }
        }

        let mat: Vec<Vec<Rational>> = rows.into_iter().map(|(_, r)| r).collect();
        let ns = linalg::nullspace(mat, n_unknowns);
        if ns.len() != 1 {
            return Err(AlgebraError::InvariantFormDimension { dim: ns.len() });
        }
        let u = &ns[0];
        let mut form = linalg::zeros(dim, dim);
        for i in 0..dim {
            for j in 0..dim {
                if let Some((idx, pos)) = slot(i, j) {
                    form[i][j] = if pos { u[idx].clone() } else { -&u[idx] };
                }
            }
        }
        Ok(form)
    }

    /// Basis of the centralizer of `{H, Dil, K}` inside the even part, as
    /// full coordinate vectors. For the algebras in scope the even part is
    /// the direct sum of sl(2) and this centralizer, so its dimension is
    /// `even_dim - 3`.
    pub fn sl2_centralizer(&self) -> Vec<Vec<Rational>> {
        let dim = self.dim();
        let even_pos = self.even_positions();
        let mut mat = Vec::new();
        for g in 0..3 {
            let mut block = linalg::zeros(dim, even_pos.len());
            for (col, &a) in even_pos.iter().enumerate() {
                for (d, c) in &self.constants[a][g] {
                    block[*d][col] = c.clone();
                }
            }
            mat.extend(block);
        }
        linalg::nullspace(mat, even_pos.len())
            .into_iter()
            .map(|v| {
                let mut full = vec![Rational::zero(); dim];
                for (col, &a) in even_pos.iter().enumerate() {
                    full[a] = v[col].clone();
                }
                full
            })
            .collect()
    }

    pub fn r_symmetry_dimension(&self) -> usize {
        self.sl2_centralizer().len()
    }

    pub fn identification(&self) -> Identification {
        identify(self.n_supercharges, self.even_dim(), self.odd_dim())
    }

    /// Splits the even part into the conformal sl(2) and the two minimal
    /// ideals of the R-symmetry, solves for the invariant form, and reads
    /// off the parameter of the one-parameter family as the ratios of the
    /// three ideal weights in the odd-odd anticommutator. The ratios form
    /// one orbit of the parameter under its symmetry group.
    ///
    /// Shape (9|8) is the generic family member with R = sl(2) + sl(2);
    /// shape (7|8) is its contraction with R = sl(2) + u(1), where the
    /// central ideal carries weight zero and the orbit degenerates.
    pub fn extract_alpha(&self) -> Result<AlphaOrbit, AlgebraError> {
        let dim = self.dim();
        let even_pos = self.even_positions();
        let odd_pos = self.odd_positions();
        let (ne, no) = (even_pos.len(), odd_pos.len());
        if no != 8 || ne < 7 {
            return Err(AlgebraError::NotThreeIdealShape { even: ne, odd: no });
        }
        let mut rank = vec![usize::MAX; dim];
        for (r, &p) in even_pos.iter().enumerate() {
            rank[p] = r;
        }
        let restrict = |v: &[Rational]| -> Vec<Rational> {
            even_pos.iter().map(|&p| v[p].clone()).collect()
        };

        let cent = self.sl2_centralizer();
        let m = cent.len();
        if m != ne - 3 {
            return Err(AlgebraError::NotThreeIdealShape { even: ne, odd: no });
        }
        let cent_e: Vec<Vec<Rational>> = cent.iter().map(|v| restrict(v)).collect();

        // structure constants of the centralizer in its own basis
        let mut gamma = vec![vec![Vec::new(); m]; m];
        for i in 0..m {
            for j in 0..m {
                let br = restrict(&self.bracket_vectors(&cent[i], &cent[j]));
                gamma[i][j] = linalg::coords_in_basis(&cent_e, &br).ok_or_else(|| {
                    AlgebraError::IdealSplitFailed("centralizer is not bracket-closed".into())
                })?;
            }
        }

        // the centroid (maps commuting with the bracket) of a direct sum of
        // two minimal ideals is two-dimensional, and its idempotents project
        // onto the ideals
        let mut rows = Vec::new();
        for i in 0..m {
            for j in 0..m {
                for d in 0..m {
                    let mut row = vec![Rational::zero(); m * m];
                    for k in 0..m {
                        if !gamma[i][j][k].is_zero() {
                            row[d * m + k] += &gamma[i][j][k];
                        }
                    }
                    for e in 0..m {
                        if !gamma[e][j][d].is_zero() {
                            row[e * m + i] -= &gamma[e][j][d];
                        }
                    }
                    rows.push(row);
                }
            }
        }
        let centroid = linalg::nullspace(rows, m * m);
        if centroid.len() != 2 {
            return Err(AlgebraError::CentroidDimension { dim: centroid.len() });
        }

        let ident: Vec<Rational> = {
            let mut v = vec![Rational::zero(); m * m];
            for r in 0..m {
                v[r * m + r] = Rational::one();
            }
            v
        };
        // pick a centroid element with nonzero trace-free part
        let psi = centroid
            .iter()
            .map(|v| {
                let tr: Rational = (0..m).map(|r| v[r * m + r].clone()).sum();
                let scale = tr / crate::exact::rat_int(m as i64);
                let dev: Vec<Rational> = v
                    .iter()
                    .zip(&ident)
                    .map(|(x, id)| x - &(id * &scale))
                    .collect();
                (v.clone(), dev)
            })
            .find(|(_, dev)| dev.iter().any(|x| !x.is_zero()))
            .map(|(v, _)| v)
            .ok_or(AlgebraError::CentroidDimension { dim: 1 })?;

        // psi satisfies a quadratic over the centroid; rational distinct
        // roots give the two projectors
        let psi_sq: Vec<Rational> = {
            let mut sq = vec![Rational::zero(); m * m];
            for r in 0..m {
                for c in 0..m {
                    let mut acc = Rational::zero();
                    for k in 0..m {
                        acc += &psi[r * m + k] * &psi[k * m + c];
                    }
                    sq[r * m + c] = acc;
                }
            }
            sq
        };
        let coords = linalg::coords_in_basis(&[ident.clone(), psi.clone()], &psi_sq)
            .ok_or_else(|| AlgebraError::IdealSplitFailed("centroid is not closed".into()))?;
        let min_poly = Poly::new(vec![-coords[0].clone(), -coords[1].clone(), Rational::one()]);
        let roots = min_poly.rational_roots().map_err(|e| {
            AlgebraError::IdealSplitFailed(format!("root extraction failed: {e}"))
        })?;
        if roots.len() != 2 {
            return Err(AlgebraError::IdealSplitFailed(format!(
                "centroid element has {} distinct rational eigenvalues, expected 2",
                roots.len()
            )));
        }

        // projector onto the first ideal: (psi - r2) / (r1 - r2)
        let scale = Rational::one() / (&roots[0] - &roots[1]);
        let proj: Vec<Rational> = psi
            .iter()
            .zip(&ident)
            .map(|(x, id)| (x - &(id * &roots[1])) * &scale)
            .collect();
        let ideal_basis = |use_complement: bool| -> Vec<Vec<Rational>> {
            let mut rows = Vec::new();
            for col in 0..m {
                let mut v: Vec<Rational> =
                    (0..m).map(|r| proj[r * m + col].clone()).collect();
                if use_complement {
                    v = (0..m)
                        .map(|r| {
                            let id = if r == col { Rational::one() } else { Rational::zero() };
                            id - &v[r]
                        })
                        .collect();
                }
                linalg::insert_echelon_row(&mut rows, v);
            }
            rows.into_iter().map(|(_, r)| r).collect()
        };
        let ideal2 = ideal_basis(false);
        let ideal3 = ideal_basis(true);
        if ideal2.is_empty() || ideal3.is_empty() || ideal2.len() + ideal3.len() != m {
            return Err(AlgebraError::IdealSplitFailed(format!(
                "ideal dimensions ({}, {}) do not fill the R-symmetry",
                ideal2.len(),
                ideal3.len()
            )));
        }
        // from centralizer coordinates to even-part coordinates
        let to_even = |v: &[Rational]| -> Vec<Rational> {
            let mut out = vec![Rational::zero(); ne];
            for (k, c) in v.iter().enumerate() {
                if !c.is_zero() {
                    for (r, x) in cent_e[k].iter().enumerate() {
                        out[r] += c * x;
                    }
                }
            }
            out
        };

        // even part = sl(2) + ideal2 + ideal3; columns of P are the bases
        let mut pmat = linalg::zeros(ne, ne);
        for (c, &g) in [0usize, 1, 2].iter().enumerate() {
            pmat[rank[g]][c] = Rational::one();
        }
        for (c, v) in ideal2.iter().chain(ideal3.iter()).enumerate() {
            let ve = to_even(v);
            for (r, x) in ve.into_iter().enumerate() {
                pmat[r][c + 3] = x;
            }
        }
        let pinv = linalg::invert(&pmat).ok_or_else(|| {
            AlgebraError::IdealSplitFailed("even part does not split over the ideals".into())
        })?;
        let project = |w: &[Rational], lo: usize, len: usize| -> Vec<Rational> {
            let mut coords = linalg::mat_vec(&pinv, w);
            for (k, c) in coords.iter_mut().enumerate() {
                if k < lo || k >= lo + len {
                    c.set_zero();
                }
            }
            linalg::mat_vec(&pmat, &coords)
        };

        let form = self.invariant_form()?;
        let bee: Vec<Vec<Rational>> = even_pos
            .iter()
            .map(|&i| even_pos.iter().map(|&j| form[i][j].clone()).collect())
            .collect();
        let boo: Vec<Vec<Rational>> = odd_pos
            .iter()
            .map(|&i| odd_pos.iter().map(|&j| form[i][j].clone()).collect())
            .collect();
        let binv = linalg::invert(&boo).ok_or(AlgebraError::SingularOddForm)?;

        // anticommutators of the odd basis, restricted to the even part
        let w: Vec<Vec<Vec<Rational>>> = (0..no)
            .map(|i| {
                (0..no)
                    .map(|j| {
                        let mut full = vec![Rational::zero(); dim];
                        for (c, coef) in &self.constants[odd_pos[i]][odd_pos[j]] {
                            full[*c] = coef.clone();
                        }
                        restrict(&full)
                    })
                    .collect()
            })
            .collect();

        // weight of each ideal in the anticommutator, contracted with the
        // inverse odd form on both index pairs
        let spans = [(0, 3), (3, ideal2.len()), (3 + ideal2.len(), ideal3.len())];
        let mut t = Vec::new();
        for (lo, len) in spans {
            let pw: Vec<Vec<Vec<Rational>>> = (0..no)
                .map(|i| (0..no).map(|j| project(&w[i][j], lo, len)).collect())
                .collect();
            let bpw: Vec<Vec<Vec<Rational>>> = (0..no)
                .map(|k| (0..no).map(|l| linalg::mat_vec(&bee, &pw[k][l])).collect())
                .collect();
            let mut acc = Rational::zero();
            for i in 0..no {
                for j in 0..no {
                    for k in 0..no {
                        if binv[i][k].is_zero() {
                            continue;
                        }
                        for l in 0..no {
                            if binv[j][l].is_zero() {
                                continue;
                            }
                            let dot: Rational = pw[i][j]
                                .iter()
                                .zip(&bpw[k][l])
                                .map(|(x, y)| x * y)
                                .sum();
                            if !dot.is_zero() {
                                acc += &binv[i][k] * &binv[j][l] * dot;
                            }
                        }
                    }
                }
            }
            t.push(acc);
        }

        let total: Rational = t.iter().cloned().sum();
        if !total.is_zero() {
            return Err(AlgebraError::WeightSumNonzero(format_rational(&total)));
        }
        if t.iter().all(|x| x.is_zero()) {
            return Err(AlgebraError::IdealSplitFailed("all ideal weights vanish".into()));
        }
        let degenerate = t.iter().any(|x| x.is_zero());
        let mut values = Vec::new();
        for i in 0..3 {
            for j in 0..3 {
                if i != j && !t[j].is_zero() {
                    values.push(&t[i] / &t[j]);
                }
            }
        }
        values.sort();
        values.dedup();
        Ok(AlphaOrbit { values, degenerate })
    }
}

/// Orbit of the family parameter under its symmetry group: the six ratios
/// of ideal weights. `degenerate` marks a vanishing weight, where the
/// algebra is a degeneration of the family and the orbit collapses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlphaOrbit {
    pub values: Vec<Rational>,
    pub degenerate: bool,
}

/// Orbit of a parameter value under the maps a, 1/a, -1-a, -1/(1+a),
/// -a/(1+a), -(1+a)/a, skipping the ones undefined at this value.
pub fn alpha_orbit_of(alpha: &Rational) -> Vec<Rational> {
    let one = Rational::one();
    let mut out = vec![alpha.clone(), -&one - alpha];
    if !alpha.is_zero() {
        out.push(&one / alpha);
        out.push(-(&one + alpha) / alpha);
    }
    let denom = &one + alpha;
    if !denom.is_zero() {
        out.push(-&one / &denom);
        out.push(-alpha / &denom);
    }
    out.sort();
    out.dedup();
    out
}

/// One named superalgebra with its dimension signature.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CatalogueEntry {
    pub name: &'static str,
    pub n: usize,
    pub even_dim: usize,
    pub odd_dim: usize,
    /// R-symmetry in the superconformal realization, when there is one.
    pub r_symmetry: Option<&'static str>,
    pub exceptional: bool,
}

const fn entry(
    name: &'static str,
    n: usize,
    even_dim: usize,
    odd_dim: usize,
    r_symmetry: Option<&'static str>,
    exceptional: bool,
) -> CatalogueEntry {
    CatalogueEntry { name, n, even_dim, odd_dim, r_symmetry, exceptional }
}

/// Superalgebras that can appear as the closure of an N-extended multiplet,
/// keyed by (N, even dimension, odd dimension). All are simple except
/// sl(2|2), the central extension of A(1,1) reached by the middle grading
/// of the N = 4 family.
pub const CATALOGUE: &[CatalogueEntry] = &[
    entry("B(0,1)", 1, 3, 2, Some("trivial"), false),
    entry("A(1,0)", 2, 4, 4, Some("u(1)"), false),
    entry("C(2)", 2, 4, 4, Some("u(1)"), false),
    entry("B(1,1)", 3, 6, 6, Some("so(3)"), false),
    entry("A(1,1)", 4, 6, 8, Some("sl(2)"), false),
    entry("sl(2|2)", 4, 7, 8, Some("sl(2) + u(1)"), false),
    entry("D(2,1;α)", 4, 9, 8, Some("sl(2) + sl(2)"), true),
    entry("B(2,1)", 5, 13, 10, Some("so(5)"), false),
    entry("A(2,1)", 6, 12, 12, Some("u(3)"), false),
    entry("B(1,2)", 6, 13, 12, None, false),
    entry("D(3,1)", 6, 18, 12, Some("so(6)"), false),
    entry("B(3,1)", 7, 24, 14, Some("so(7)"), false),
    entry("G(3)", 7, 17, 14, Some("g(2)"), true),
    entry("D(4,1)", 8, 31, 16, Some("so(8)"), false),
    entry("D(2,2)", 8, 16, 16, Some("sl(2) + sp(4)"), false),
    entry("A(3,1)", 8, 19, 16, Some("u(4)"), false),
    entry("F(4)", 8, 24, 16, Some("so(7)"), true),
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Identification {
    Unique(&'static CatalogueEntry),
    /// More than one catalogue entry shares the signature (the N = 2 pair
    /// A(1,0) and C(2) cannot be separated by dimensions alone).
    Ambiguous(Vec<&'static CatalogueEntry>),
    Unknown { n: usize, even_dim: usize, odd_dim: usize },
}

impl Identification {
    pub fn name(&self) -> Option<&'static str> {
        match self {
            Identification::Unique(e) => Some(e.name),
            _ => None,
        }
    }
}

/// Looks up a dimension signature in the catalogue.
pub fn identify(n: usize, even_dim: usize, odd_dim: usize) -> Identification {
    let matches: Vec<&'static CatalogueEntry> = CATALOGUE
        .iter()
        .filter(|e| e.n == n && e.even_dim == even_dim && e.odd_dim == odd_dim)
        .collect();
    match matches.len() {
        0 => Identification::Unknown { n, even_dim, odd_dim },
        1 => Identification::Unique(matches[0]),
        _ => Identification::Ambiguous(matches),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, rat_int};

    fn alg(content: &str, lambda: Rational) -> ClosedSuperalgebra {
        ClosedSuperalgebra::at_lambda(&FieldContent::parse(content).unwrap(), &lambda).unwrap()
    }

    #[test]
    fn smallest_algebra_is_osp_1_2() {
        let a = alg("1,1", rat(5, 7));
        assert_eq!((a.even_dim(), a.odd_dim()), (3, 2));
        assert_eq!(a.identification().name(), Some("B(0,1)"));
        assert_eq!(a.r_symmetry_dimension(), 0);
        a.super_jacobi().unwrap();
        let b = a.killing_form();
        assert!(!b[0][2].is_zero(), "B(H, K) should not vanish");
    }

    #[test]
    fn n2_signature_is_ambiguous() {
        let a = alg("2,2", rat(5, 7));
        match a.identification() {
            Identification::Ambiguous(v) => assert_eq!(v.len(), 2),
            other => panic!("expected an ambiguous signature, got {other:?}"),
        }
    }

    #[test]
    fn n4_has_vanishing_killing_form() {
        let a = alg("0,4,4", rat(5, 7));
        assert_eq!(a.identification().name(), Some("D(2,1;α)"));
        a.super_jacobi().unwrap();
        let b = a.killing_form();
        assert!(b.iter().all(|row| row.iter().all(|x| x.is_zero())));
        assert_eq!(a.r_symmetry_dimension(), 6);
    }

    #[test]
    fn grading_weights_follow_the_dilatation() {
        let a = alg("0,4,4", rat(5, 7));
        assert_eq!(a.weight(0), &rat_int(1));
        assert_eq!(a.weight(2), &rat_int(-1));
        assert_eq!(a.weight(3), &rat(1, 2));
        assert_eq!(a.weight(7), &rat(-1, 2));
        assert_eq!(a.weight(11), &rat_int(0));
    }

    #[test]
    fn alpha_orbit_tracks_the_scaling_dimension() {
        for (content, factor) in [("0,4,4", 2), ("1,4,3", 1), ("3,4,1", -1), ("4,4", -2)] {
            let lambda = rat(5, 7);
            let a = alg(content, lambda.clone());
            let orbit = a.extract_alpha().unwrap();
            assert!(!orbit.degenerate, "{content}");
            let expected = rat_int(factor) * &lambda;
            assert!(orbit.values.contains(&expected), "{content}: {:?}", orbit.values);
            assert_eq!(orbit.values, alpha_orbit_of(&expected), "{content}");
        }
    }

    #[test]
    fn middle_grading_degenerates() {
        let a = alg("2,4,2", rat(5, 7));
        assert_eq!((a.even_dim(), a.odd_dim()), (7, 8));
        assert_eq!(a.identification().name(), Some("sl(2|2)"));
        let orbit = a.extract_alpha().unwrap();
        assert!(orbit.degenerate);
        assert_eq!(orbit.values, vec![rat_int(-1), rat_int(0)]);
    }

    #[test]
    fn orbit_helper_is_closed_under_its_maps() {
        let orbit = alpha_orbit_of(&rat(10, 7));
        assert_eq!(orbit.len(), 6);
        for v in &orbit {
            assert_eq!(alpha_orbit_of(v), orbit);
        }
    }

    #[test]
    fn g3_witness_identifies_uniquely() {
        let a = alg("1,7,7,1", rat(-1, 4));
        assert_eq!(a.identification().name(), Some("G(3)"));
        assert_eq!(a.r_symmetry_dimension(), a.even_dim() - 3);
        a.super_jacobi().unwrap();
    }
}
