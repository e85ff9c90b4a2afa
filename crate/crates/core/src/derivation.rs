//! Derivations `q_1 d_1 + ... + q_n d_n` of the polynomial ring.
//!
//! Trivial derivations use a fixed sign convention: the symbolic determinant
//! with first row `(d_nu0, ..., d_nut)` and rows `(d_nu0 g_k, ..., d_nut g_k)`
//! is expanded along its first row, so the coefficient of `d_nuj` is
//! `(-1)^j` times the minor obtained by deleting column `j`.

use std::fmt;

use crate::error::{Error, Result};
use crate::poly::{default_names, determinant, Polynomial};
use crate::weights::{WeightSystem, WeightedDegree};
use crate::Rational;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Derivation {
    coefficients: Vec<Polynomial>,
}

impl Derivation {
    pub fn new(coefficients: Vec<Polynomial>) -> Self {
        let n = coefficients.len();
        assert!(
            coefficients.iter().all(|q| q.nvars() == n),
            "a derivation of an n-variable ring has n coefficients in that ring"
        );
        Derivation { coefficients }
    }

    pub fn zero(nvars: usize) -> Self {
        Derivation {
            coefficients: vec![Polynomial::zero(nvars); nvars],
        }
    }

    pub fn nvars(&self) -> usize {
        self.coefficients.len()
    }

    pub fn coefficients(&self) -> &[Polynomial] {
        &self.coefficients
    }

    pub fn coefficient(&self, i: usize) -> &Polynomial {
        &self.coefficients[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.iter().all(Polynomial::is_zero)
    }

    /// `sum_i q_i * d_i(p)`.
    pub fn apply(&self, p: &Polynomial) -> Polynomial {
        assert_eq!(p.nvars(), self.nvars(), "polynomial in the wrong ring");
        let mut acc = Polynomial::zero(p.nvars());
        for (i, q) in self.coefficients.iter().enumerate() {
            if q.is_zero() {
                continue;
            }
            let d = p.partial_derivative(i);
            if !d.is_zero() {
                acc = acc + q * &d;
            }
        }
        acc
    }

    /// Common value of `deg(q_i) - w_i` over the non-zero coefficients.
    pub fn degree(&self, w: &WeightSystem) -> Result<WeightedDegree> {
        if w.len() != self.nvars() {
            return Err(Error::VariableCount {
                expected: self.nvars(),
                found: w.len(),
            });
        }
        let mut common = None;
        for (i, q) in self.coefficients.iter().enumerate() {
            if q.is_zero() {
                continue;
            }
            let d = match q.weighted_degree(w)? {
                WeightedDegree::Homogeneous(d) => d - w.get(i) as i64,
                WeightedDegree::Inhomogeneous => return Ok(WeightedDegree::Inhomogeneous),
            };
            match common {
                None => common = Some(d),
                Some(c) if c != d => return Ok(WeightedDegree::Inhomogeneous),
                Some(_) => {}
            }
        }
        common.map(WeightedDegree::Homogeneous).ok_or(Error::ZeroDerivation)
    }

    pub fn scale(&self, c: &Rational) -> Derivation {
        Derivation {
            coefficients: self.coefficients.iter().map(|q| q.scale(c)).collect(),
        }
    }

    /// Applies `f` to every coefficient.
    pub fn map(&self, f: impl Fn(&Polynomial) -> Polynomial) -> Derivation {
        Derivation {
            coefficients: self.coefficients.iter().map(f).collect(),
        }
    }

    /// Renders as `q1*d1 + ...` using the given names, skipping zero terms.
    pub fn render(&self, names: &[String]) -> String {
        let parts: Vec<String> = self
            .coefficients
            .iter()
            .enumerate()
            .filter(|(_, q)| !q.is_zero())
            .map(|(i, q)| format!("({})*d{}", q.render(names), names[i]))
            .collect();
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }

    /// Coefficient strings, one per variable.
    pub fn coefficient_strings(&self, names: &[String]) -> Vec<String> {
        self.coefficients.iter().map(|q| q.render(names)).collect()
    }
}

impl fmt::Display for Derivation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&default_names(self.nvars())))
    }
}

impl fmt::Debug for Derivation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Derivation({self})")
    }
}

/// The Euler derivation `sum_i w_i x_i d_i`.
pub fn euler(w: &WeightSystem) -> Derivation {
    let n = w.len();
    Derivation {
        coefficients: (0..n)
            .map(|i| Polynomial::var(n, i).scale(&Rational::from_integer(w.get(i).into())))
            .collect(),
    }
}

/// The trivial derivation for the index set `nu` (zero-based, strictly
/// increasing, `|nu| = t + 1`).
pub fn trivial_derivation(g: &[Polynomial], nu: &[usize]) -> Result<Derivation> {
    let n = g
        .first()
        .map(Polynomial::nvars)
        .ok_or_else(|| Error::Precondition("at least one equation is required".into()))?;
    let t = g.len();
    if nu.len() != t + 1 {
        return Err(Error::IndexCount {
            expected: t + 1,
            found: nu.len(),
        });
    }
    if let Some(&bad) = nu.iter().find(|&&i| i >= n) {
        return Err(Error::IndexOutOfRange { index: bad, n });
    }
    if nu.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::NotIncreasing(nu.to_vec()));
    }
    // jac[k][c] = d_{nu_c} g_k
    let jac: Vec<Vec<Polynomial>> = g
        .iter()
        .map(|gk| nu.iter().map(|&i| gk.partial_derivative(i)).collect())
        .collect();
    let mut coefficients = vec![Polynomial::zero(n); n];
    for (j, &col) in nu.iter().enumerate() {
        let minor: Vec<Vec<Polynomial>> = jac
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != j)
                    .map(|(_, p)| p.clone())
                    .collect()
            })
            .collect();
        let det = if t == 0 { Polynomial::one(n) } else { determinant(&minor)? };
        coefficients[col] = if j % 2 == 0 { det } else { -det };
    }
    Ok(Derivation { coefficients })
}

/// Strictly increasing index lists of length `k` from `0..n`, in
/// lexicographic order.
pub fn index_sets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        rec(0, n, k, &mut Vec::with_capacity(k), &mut out);
    }
    out
}

/// All maximal minors of the Jacobian matrix of `g`, indexed by
/// lexicographically ordered column sets.
pub fn jacobian_minors(g: &[Polynomial]) -> Result<Vec<(Vec<usize>, Polynomial)>> {
    let n = g
        .first()
        .map(Polynomial::nvars)
        .ok_or_else(|| Error::Precondition("at least one equation is required".into()))?;
    let t = g.len();
    if t > n {
        return Err(Error::Precondition(format!(
            "{t} equations exceed the {n} variables"
        )));
    }
    let partials: Vec<Vec<Polynomial>> = g
        .iter()
        .map(|gk| (0..n).map(|i| gk.partial_derivative(i)).collect())
        .collect();
    index_sets(n, t)
        .into_iter()
        .map(|nu| {
            let m: Vec<Vec<Polynomial>> = partials
                .iter()
                .map(|row| nu.iter().map(|&c| row[c].clone()).collect())
                .collect();
            Ok((nu, determinant(&m)?))
        })
        .collect()
}
