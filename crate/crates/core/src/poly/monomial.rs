use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

/// Exponent vector of a monomial `x^a = x_1^a_1 * ... * x_n^a_n`.
///
/// The `Ord` implementation is graded reverse lexicographic with
/// `x_1 > x_2 > ... > x_n`. It is the canonical term order used to store
/// and render polynomials.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    /// The monomial `x_i`.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn weighted_degree(&self, weights: &[u32]) -> u64 {
        self.0
            .iter()
            .zip(weights)
            .map(|(&e, &w)| e as u64 * w as u64)
            .sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, if `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial(other.0.iter().zip(&self.0).map(|(a, b)| a - b).collect()))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(&a, &b)| a.max(b)).collect())
    }

    /// Indices of the variables occurring in the monomial.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i)
    }

    /// `Some((i, e))` when the monomial is `x_i^e` with `e >= 1`.
    pub fn as_pure_power(&self) -> Option<(usize, u32)> {
        let mut found = None;
        for (i, &e) in self.0.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some((i, e));
            }
        }
        found
    }

    /// Reorders the variables: the new variable `j` is the old variable `perm[j]`.
    pub fn permuted(&self, perm: &[usize]) -> Monomial {
        Monomial(perm.iter().map(|&old| self.0[old]).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.0.len(), other.0.len());
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| revlex(&self.0, &other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Reverse lexicographic tie-break: the monomial with the smaller exponent
/// in the last differing variable is the larger one.
pub(crate) fn revlex(a: &[u32], b: &[u32]) -> Ordering {
    for (x, y) in a.iter().zip(b).rev() {
        match x.cmp(y) {
            Ordering::Equal => continue,
            ord => return ord.reverse(),
        }
    }
    Ordering::Equal
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x^{:?}", self.0)
    }
}

/// All exponent vectors in `nvars` variables of weighted degree exactly `degree`.
pub fn monomials_of_weighted_degree(weights: &[u32], degree: u64) -> Vec<Monomial> {
    fn rec(weights: &[u32], i: usize, left: u64, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i == weights.len() {
            if left == 0 {
                out.push(Monomial(cur.clone()));
            }
            return;
        }
        let w = weights[i] as u64;
        let max = left / w;
        for e in 0..=max {
            cur.push(e as u32);
            rec(weights, i + 1, left - e * w, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(weights, 0, degree, &mut Vec::with_capacity(weights.len()), &mut out);
    out.sort();
    out
}
