//! Dense exact linear algebra over the rationals.
//!
//! Small helper routines used by the structure-constant layer: row
//! reduction, nullspace extraction, and matrix inversion. Everything here
//! works on `Vec<Vec<Rational>>` in row-major order and is exact.

use num::{One, Zero};

use crate::exact::Rational;

pub(crate) fn zeros(rows: usize, cols: usize) -> Vec<Vec<Rational>> {
    vec![vec![Rational::zero(); cols]; rows]
}

pub(crate) fn identity(n: usize) -> Vec<Vec<Rational>> {
    let mut m = zeros(n, n);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = Rational::one();
    }
    m
}

pub(crate) fn mat_vec(m: &[Vec<Rational>], v: &[Rational]) -> Vec<Rational> {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
        .collect()
}

/// Reduce `m` to reduced row echelon form in place; returns the pivot columns.
pub(crate) fn rref(m: &mut [Vec<Rational>]) -> Vec<usize> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = Rational::one() / &m[r][c];
        for x in m[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..cols {
                    let sub = &m[r][j] * &f;
                    m[i][j] = &m[i][j] - &sub;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    pivots
}

/// Basis of the right nullspace of `m` (solutions of m x = 0).
pub(crate) fn nullspace(mut m: Vec<Vec<Rational>>, cols: usize) -> Vec<Vec<Rational>> {
    if m.is_empty() {
        return (0..cols)
            .map(|j| {
                let mut e = vec![Rational::zero(); cols];
                e[j] = Rational::one();
                e
            })
            .collect();
    }
    let pivots = rref(&mut m);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); cols];
            v[f] = Rational::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -m[r][f].clone();
            }
            v
        })
        .collect()
}

/// Coordinates of `v` over independent basis column vectors, or None when
/// `v` lies outside their span (or the columns are dependent).
pub(crate) fn coords_in_basis(basis: &[Vec<Rational>], v: &[Rational]) -> Option<Vec<Rational>> {
    let n = basis.len();
    let mut aug: Vec<Vec<Rational>> = (0..v.len())
        .map(|r| {
            let mut row: Vec<Rational> = basis.iter().map(|b| b[r].clone()).collect();
            row.push(v[r].clone());
            row
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots != (0..n).collect::<Vec<_>>() {
        return None;
    }
    Some((0..n).map(|j| aug[j][n].clone()).collect())
}

/// Inserts a row into an incrementally echelonized system kept sorted by
/// pivot column. Rows that reduce to zero are dropped.
pub(crate) fn insert_echelon_row(rows: &mut Vec<(usize, Vec<Rational>)>, mut row: Vec<Rational>) {
    loop {
        let Some(p) = row.iter().position(|x| !x.is_zero()) else {
            return;
        };
        match rows.binary_search_by_key(&p, |(piv, _)| *piv) {
            Ok(k) => {
                let c = row[p].clone();
                let other = rows[k].1.clone();
                for (x, y) in row.iter_mut().zip(&other).skip(p) {
                    let sub = y * &c;
                    *x = &*x - &sub;
                }
            }
            Err(k) => {
                let inv = Rational::one() / &row[p];
                for x in row.iter_mut() {
                    *x = &*x * &inv;
                }
                rows.insert(k, (p, row));
                return;
            }
        }
    }
}

/// Inverse of a square matrix, or None if singular.
pub(crate) fn invert(m: &[Vec<Rational>]) -> Option<Vec<Vec<Rational>>> {
    let n = m.len();
    let mut aug: Vec<Vec<Rational>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend(identity(n)[i].iter().cloned());
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots != (0..n).collect::<Vec<_>>() {
        return None;
    }
    Some(aug.into_iter().map(|row| row[n..].to_vec()).collect())
}
