//! Dense exact linear algebra over the rationals.

use num_traits::{One, Zero};

use crate::Rational;

/// Reduced row echelon form of a dense rational matrix.
#[derive(Clone, Debug)]
pub struct Echelon {
    pub rows: Vec<Vec<Rational>>,
    pub pivots: Vec<usize>,
    pub ncols: usize,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Basis of `{ x : A x = 0 }`, one vector per free column.
    pub fn nullspace(&self) -> Vec<Vec<Rational>> {
        let mut is_pivot = vec![false; self.ncols];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.ncols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![Rational::zero(); self.ncols];
            v[free] = Rational::one();
            for (row, &p) in self.rows.iter().zip(&self.pivots) {
                v[p] = -row[free].clone();
            }
            basis.push(v);
        }
        basis
    }

    /// Whether `v` lies in the row space.
    pub fn row_space_contains(&self, v: &[Rational]) -> bool {
        let mut v = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let f = v[p].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x -= &f * r;
                }
            }
        }
        v.iter().all(Zero::is_zero)
    }
}

/// Gauss-Jordan elimination; `rows` all have length `ncols`.
pub fn rref(mut rows: Vec<Vec<Rational>>, ncols: usize) -> Echelon {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(pr) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, pr);
        let inv = rows[r][c].recip();
        for x in rows[r].iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x -= &f * p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    Echelon { rows, pivots, ncols }
}

pub fn rank(rows: Vec<Vec<Rational>>, ncols: usize) -> usize {
    rref(rows, ncols).rank()
}
