use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Positive integer weights on the variables, normalized to be coprime.
///
/// The non-increasing ordering of the weights is established by
/// [`validate_system`](crate::singularity::validate_system), which permutes
/// the variables and records the permutation; a bare `WeightSystem` keeps the
/// caller's variable order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeightSystem(Vec<u32>);

impl WeightSystem {
    /// Builds a weight system, dividing out the gcd of the entries.
    pub fn new(weights: Vec<u32>) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::InvalidWeights("no weights given".into()));
        }
        if let Some(pos) = weights.iter().position(|&w| w == 0) {
            return Err(Error::InvalidWeights(format!(
                "weight of variable {} is not positive",
                pos + 1
            )));
        }
        let g = weights.iter().fold(0u32, |acc, &w| acc.gcd(&w));
        Ok(WeightSystem(weights.into_iter().map(|w| w / g).collect()))
    }

    /// All weights equal to one.
    pub fn standard(nvars: usize) -> Self {
        WeightSystem(vec![1; nvars])
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub fn is_non_increasing(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    /// Sum of the `k` largest weights.
    pub fn top_sum(&self, k: usize) -> u64 {
        let mut ws = self.0.clone();
        ws.sort_unstable_by(|a, b| b.cmp(a));
        ws.iter().take(k).map(|&w| w as u64).sum()
    }

    pub(crate) fn permuted(&self, perm: &[usize]) -> WeightSystem {
        WeightSystem(perm.iter().map(|&old| self.0[old]).collect())
    }
}

impl fmt::Display for WeightSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, w) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{w}")?;
        }
        write!(f, ")")
    }
}

/// Result of a degree query on a possibly inhomogeneous object.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WeightedDegree {
    Homogeneous(i64),
    Inhomogeneous,
}

impl WeightedDegree {
    pub fn value(self) -> Option<i64> {
        match self {
            WeightedDegree::Homogeneous(d) => Some(d),
            WeightedDegree::Inhomogeneous => None,
        }
    }
}
