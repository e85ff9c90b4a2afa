use super::polynomial::Polynomial;
use crate::error::{Error, Result};

/// Matrices larger than this are refused by [`determinant`].
pub const DEFAULT_MAX_DETERMINANT_SIZE: usize = 8;

/// Exact determinant of a square polynomial matrix.
///
/// Cofactor expansion up to size 4, fraction-free Bareiss elimination above.
pub fn determinant(m: &[Vec<Polynomial>]) -> Result<Polynomial> {
    determinant_with_bound(m, DEFAULT_MAX_DETERMINANT_SIZE)
}

pub fn determinant_with_bound(m: &[Vec<Polynomial>], bound: usize) -> Result<Polynomial> {
    let n = m.len();
    for (row, r) in m.iter().enumerate() {
        if r.len() != n {
            return Err(Error::NonSquare {
                rows: n,
                row,
                cols: r.len(),
            });
        }
    }
    if n > bound {
        return Err(Error::MatrixTooLarge { size: n, bound });
    }
    if n == 0 {
        // The empty product; the ring is unknown, so use zero variables.
        return Ok(Polynomial::one(0));
    }
    if n <= 4 {
        Ok(cofactor(m))
    } else {
        Ok(bareiss(m.to_vec()))
    }
}

fn cofactor(m: &[Vec<Polynomial>]) -> Polynomial {
    let n = m.len();
    match n {
        1 => m[0][0].clone(),
        2 => &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0],
        _ => {
            let nvars = m[0][0].nvars();
            let mut acc = Polynomial::zero(nvars);
            for j in 0..n {
                if m[0][j].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<Polynomial>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|&(c, _)| c != j)
                            .map(|(_, p)| p.clone())
                            .collect()
                    })
                    .collect();
                let term = &m[0][j] * &cofactor(&minor);
                acc = if j % 2 == 0 { acc + term } else { acc - term };
            }
            acc
        }
    }
}

fn bareiss(mut a: Vec<Vec<Polynomial>>) -> Polynomial {
    let n = a.len();
    let nvars = a[0][0].nvars();
    let mut negate = false;
    let mut prev = Polynomial::one(nvars);
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return Polynomial::zero(nvars),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                a[i][j] = exact_quotient(&num, &prev)
                    .expect("Bareiss step divides exactly by the previous pivot");
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// `a / b` when `b` divides `a` in the polynomial ring.
pub fn exact_quotient(a: &Polynomial, b: &Polynomial) -> Option<Polynomial> {
    let (lm_b, lc_b) = b.leading_term()?;
    let mut rem = a.clone();
    let mut quot = Polynomial::zero(a.nvars());
    while let Some((lm, lc)) = rem.leading_term() {
        let m = lm_b.quotient_of(lm)?;
        let c = lc / lc_b;
        let t = Polynomial::term(c, m);
        rem = rem - &(&t * b);
        quot = quot + t;
    }
    Some(quot)
}
