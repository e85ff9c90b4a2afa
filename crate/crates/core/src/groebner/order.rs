use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::poly::{revlex, Monomial};
use crate::weights::WeightSystem;

/// Monomial orders with `x_1 > x_2 > ... > x_n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MonomialOrder {
    Lex,
    DegRevLex,
    /// Weighted degree first, reverse lexicographic tie-break.
    WeightedDegRevLex(WeightSystem),
}

impl MonomialOrder {
    /// Grading used for the first comparison and for the sugar strategy.
    pub fn degree(&self, exps: &[u32]) -> u64 {
        match self {
            MonomialOrder::Lex | MonomialOrder::DegRevLex => exps.iter().map(|&e| e as u64).sum(),
            MonomialOrder::WeightedDegRevLex(w) => exps
                .iter()
                .zip(w.as_slice())
                .map(|(&e, &wi)| e as u64 * wi as u64)
                .sum(),
        }
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.cmp_exps(a.exponents(), b.exponents())
    }

    pub(crate) fn cmp_exps(&self, a: &[u32], b: &[u32]) -> Ordering {
        match self {
            MonomialOrder::Lex => a.cmp(b),
            _ => self.degree(a).cmp(&self.degree(b)).then_with(|| revlex(a, b)),
        }
    }

    /// Comparison with precomputed degrees.
    #[inline]
    pub(crate) fn cmp_graded(&self, da: u64, a: &[u32], db: u64, b: &[u32]) -> Ordering {
        match self {
            MonomialOrder::Lex => a.cmp(b),
            _ => da.cmp(&db).then_with(|| revlex(a, b)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(v: &[u32]) -> Monomial {
        Monomial::new(v.to_vec())
    }

    #[test]
    fn lex_prefers_first_variable() {
        assert_eq!(MonomialOrder::Lex.cmp(&m(&[1, 0]), &m(&[0, 5])), Ordering::Greater);
        assert_eq!(MonomialOrder::DegRevLex.cmp(&m(&[1, 0]), &m(&[0, 5])), Ordering::Less);
    }

    #[test]
    fn weighted_uses_weights() {
        let o = MonomialOrder::WeightedDegRevLex(WeightSystem::new(vec![3, 2]).unwrap());
        // x1^2 (6) vs x2^3 (6): tie broken revlex, x1^2 larger
        assert_eq!(o.cmp(&m(&[2, 0]), &m(&[0, 3])), Ordering::Greater);
        // x1 (3) vs x2 (2)
        assert_eq!(o.cmp(&m(&[1, 0]), &m(&[0, 1])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[0, 2]), &m(&[1, 0])), Ordering::Greater);
    }
}
