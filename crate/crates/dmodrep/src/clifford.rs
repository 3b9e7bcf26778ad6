//! Minimal real antisymmetric Clifford families.
//!
//! A family is a set of m antisymmetric n x n integer matrices with
//! `g_i g_j + g_j g_i = -2 delta_ij`. Global supermultiplets with N
//! supercharges on n + n components need the minimal solutions, which exist
//! for (m, n) = (0, 1), (1, 2), (3, 4) and (7, 8): the trivial family, the
//! symplectic unit, and the left multiplication tables of the imaginary
//! quaternions and octonions.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CliffordError {
    #[error("no minimal real Clifford family for ({m},{n})")]
    NoFamily { m: usize, n: usize },
    #[error("generator {i} is not antisymmetric")]
    NotAntisymmetric { i: usize },
    #[error("Clifford relation violated between generators {i} and {j}")]
    RelationViolated { i: usize, j: usize },
    #[error("generator {i} has size {rows}x{cols}, expected {n}x{n}")]
    WrongSize { i: usize, rows: usize, cols: usize, n: usize },
}

pub type IntMatrix = Vec<Vec<i64>>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliffordFamily {
    n: usize,
    gens: Vec<IntMatrix>,
}

/// Oriented lines of the Fano plane: `e_p e_q = e_r` cyclically for each
/// triple (p, q, r), with indices 1..=7 for the imaginary octonion units.
const FANO_TRIPLES: [[usize; 3]; 7] = [
    [1, 2, 3],
    [1, 4, 5],
    [1, 7, 6],
    [2, 4, 6],
    [2, 5, 7],
    [3, 4, 7],
    [3, 6, 5],
];

/// Left multiplication table of the imaginary units of an alternative
/// algebra of dimension `dim` (4 for quaternions, 8 for octonions), built
/// from the oriented triples: `(L_a)_{kj}` is the coefficient of `e_k` in
/// `e_a e_j`, with `e_0 = 1` and `e_a^2 = -1`.
fn left_multiplications(dim: usize, triples: &[[usize; 3]]) -> Vec<IntMatrix> {
    let mut gens = Vec::with_capacity(dim - 1);
    for a in 1..dim {
        let mut m = vec![vec![0i64; dim]; dim];
        m[a][0] = 1; // e_a * 1 = e_a
        m[0][a] = -1; // e_a * e_a = -1
        for t in triples {
            for rot in 0..3 {
                let (p, q, r) = (t[rot], t[(rot + 1) % 3], t[(rot + 2) % 3]);
                if p == a {
                    m[r][q] = 1; // e_a e_q = e_r
                    m[q][r] = -1; // e_a e_r = -e_q
                }
            }
        }
        gens.push(m);
    }
    gens
}

impl CliffordFamily {
    /// The minimal real family for m generators of size n, if one exists.
    pub fn minimal(m: usize, n: usize) -> Result<Self, CliffordError> {
        let gens = match (m, n) {
            (0, 1) => Vec::new(),
            (1, 2) => vec![vec![vec![0, 1], vec![-1, 0]]],
            (3, 4) => left_multiplications(4, &[[1, 2, 3]]),
            (7, 8) => left_multiplications(8, &FANO_TRIPLES),
            _ => return Err(CliffordError::NoFamily { m, n }),
        };
        let family = CliffordFamily { n, gens };
        family.verify()?;
        Ok(family)
    }

    /// Wraps externally supplied generators after verifying the relations.
    pub fn from_generators(n: usize, gens: Vec<IntMatrix>) -> Result<Self, CliffordError> {
        let family = CliffordFamily { n, gens };
        family.verify()?;
        Ok(family)
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn generator(&self, i: usize) -> &IntMatrix {
        &self.gens[i]
    }

    /// Checks antisymmetry and `g_i g_j + g_j g_i = -2 delta_ij` exactly.
    pub fn verify(&self) -> Result<(), CliffordError> {
        for (i, g) in self.gens.iter().enumerate() {
            if g.len() != self.n || g.iter().any(|row| row.len() != self.n) {
                return Err(CliffordError::WrongSize {
                    i,
                    rows: g.len(),
                    cols: g.first().map_or(0, |r| r.len()),
                    n: self.n,
                });
            }
            for r in 0..self.n {
                for c in 0..self.n {
                    if g[r][c] != -g[c][r] {
                        return Err(CliffordError::NotAntisymmetric { i });
                    }
                }
            }
        }
        for i in 0..self.gens.len() {
            for j in i..self.gens.len() {
                let target = if i == j { -2 } else { 0 };
                for r in 0..self.n {
                    for c in 0..self.n {
                        let mut sum = 0i64;
                        for s in 0..self.n {
                            sum += self.gens[i][r][s] * self.gens[j][s][c]
                                + self.gens[j][r][s] * self.gens[i][s][c];
                        }
                        let expected = if r == c { target } else { 0 };
                        if sum != expected {
                            return Err(CliffordError::RelationViolated { i, j });
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Conjugates every generator by the signed permutation
    /// `P e_j = sign_j e_{perm_j}`, giving an equivalent family.
    pub fn conjugate_by_signed_permutation(
        &self,
        perm: &[usize],
        signs: &[i64],
    ) -> CliffordFamily {
        assert_eq!(perm.len(), self.n);
        assert_eq!(signs.len(), self.n);
        assert!(signs.iter().all(|&s| s == 1 || s == -1));
        let mut seen = vec![false; self.n];
        for &p in perm {
            assert!(p < self.n && !seen[p], "not a permutation");
            seen[p] = true;
        }
        let gens = self
            .gens
            .iter()
            .map(|g| {
                let mut out = vec![vec![0i64; self.n]; self.n];
                for r in 0..self.n {
                    for c in 0..self.n {
                        out[perm[r]][perm[c]] = signs[r] * signs[c] * g[r][c];
                    }
                }
                out
            })
            .collect();
        CliffordFamily { n: self.n, gens }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_minimal_families_verify() {
        for (m, n) in [(0, 1), (1, 2), (3, 4), (7, 8)] {
            let fam = CliffordFamily::minimal(m, n).unwrap();
            assert_eq!(fam.len(), m);
            assert_eq!(fam.size(), n);
        }
    }

    #[test]
    fn other_sizes_are_rejected() {
        assert_eq!(
            CliffordFamily::minimal(2, 2),
            Err(CliffordError::NoFamily { m: 2, n: 2 })
        );
        assert_eq!(
            CliffordFamily::minimal(5, 8),
            Err(CliffordError::NoFamily { m: 5, n: 8 })
        );
    }

    #[test]
    fn quaternion_table() {
        let fam = CliffordFamily::minimal(3, 4).unwrap();
        // i * j = k: coefficient of e_3 in e_1 e_2
        assert_eq!(fam.generator(0)[3][2], 1);
        // j * i = -k
        assert_eq!(fam.generator(1)[3][1], -1);
        // left multiplications of quaternions compose associatively:
        // L_i L_j = L_k
        let (li, lj, lk) = (fam.generator(0), fam.generator(1), fam.generator(2));
        for r in 0..4 {
            for c in 0..4 {
                let mut sum = 0;
                for s in 0..4 {
                    sum += li[r][s] * lj[s][c];
                }
                assert_eq!(sum, lk[r][c]);
            }
        }
    }

    #[test]
    fn octonion_table_spot_checks() {
        let fam = CliffordFamily::minimal(7, 8).unwrap();
        // e_1 e_2 = e_3
        assert_eq!(fam.generator(0)[3][2], 1);
        // e_2 e_3 = e_1 (cyclic)
        assert_eq!(fam.generator(1)[1][3], 1);
        // e_1 e_7 = e_6
        assert_eq!(fam.generator(0)[6][7], 1);
        // e_7 e_1 = -e_6
        assert_eq!(fam.generator(6)[6][1], -1);
    }

    #[test]
    fn octonion_generators_have_zero_diagonal() {
        // e_a e_j never returns to e_j for imaginary e_a: this is what makes
        // the seven-supercharge dressing work
        let fam = CliffordFamily::minimal(7, 8).unwrap();
        for i in 0..7 {
            for d in 0..8 {
                assert_eq!(fam.generator(i)[d][d], 0);
            }
        }
    }

    #[test]
    fn signed_permutation_conjugation_preserves_relations() {
        let fam = CliffordFamily::minimal(7, 8).unwrap();
        let perm = [3, 1, 4, 0, 5, 2, 7, 6];
        let signs = [1, -1, 1, 1, -1, 1, -1, 1];
        let conj = fam.conjugate_by_signed_permutation(&perm, &signs);
        assert!(conj.verify().is_ok());
        assert_ne!(conj, fam);
    }

    #[test]
    fn bad_generators_are_rejected() {
        // symmetric matrix
        let sym = vec![vec![vec![0, 1], vec![1, 0]]];
        assert_eq!(
            CliffordFamily::from_generators(2, sym),
            Err(CliffordError::NotAntisymmetric { i: 0 })
        );
        // antisymmetric but squares to -4 instead of -1
        let scaled = vec![vec![vec![0, 2], vec![-2, 0]]];
        assert_eq!(
            CliffordFamily::from_generators(2, scaled),
            Err(CliffordError::RelationViolated { i: 0, j: 0 })
        );
    }
}
