//! Deciding whether negative-degree derivations exist, with an independent
//! brute-force oracle and the structural consequences of their existence.

mod checks;
mod oracle;
mod reduction;

pub use checks::{embdim5_check, grading_independence_check, halperin_bound, theorem0_check};
pub use oracle::{derivation_space, DerivationOracle, GradedDerivationSpace};
pub use reduction::{reduce_negative_derivation, Reduction, ReductionOutcome, ReductionStep};

use serde::{Deserialize, Serialize};

use crate::derivation::{index_sets, trivial_derivation, Derivation};
use crate::error::{Error, Result};
use crate::groebner::GbConfig;
use crate::singularity::{is_normal_icis_with, SingularitySystem};
use crate::weights::WeightedDegree;

/// Degree of the trivial derivation for the index set `nu`:
/// `p_1 + ... + p_t - sum of w_i over nu`.
pub fn trivial_degree(s: &SingularitySystem, nu: &[usize]) -> i64 {
    let p: u64 = s.degrees().iter().sum();
    let w: u64 = nu.iter().map(|&i| s.weights().get(i) as u64).sum();
    p as i64 - w as i64
}

/// Least degree of a trivial derivation, attained at the `t + 1` largest
/// weights, and that index set.
pub fn min_trivial_degree(s: &SingularitySystem) -> Result<(i64, Vec<usize>)> {
    if s.t() + 1 > s.n() {
        return Err(Error::Precondition(format!(
            "trivial derivations need t + 1 <= n, got t = {} and n = {}",
            s.t(),
            s.n()
        )));
    }
    let nu: Vec<usize> = (0..=s.t()).collect();
    Ok((trivial_degree(s, &nu), nu))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DecisionBasis {
    /// Generators of the derivation module are the Euler derivation and the
    /// trivial derivations, so the minimal generator degree decides.
    #[serde(rename = "theorem-17-rule")]
    GeneratorRule,
    BruteForceOracle,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub nu: Vec<usize>,
    pub degree: i64,
    pub derivation: Derivation,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NegativityVerdict {
    pub exists: bool,
    pub min_degree: i64,
    pub witnesses: Vec<Witness>,
    pub decision_basis: DecisionBasis,
    pub justification: String,
    /// Dimensions found by the oracle when it was consulted, by degree.
    pub oracle_dimensions: Vec<(i64, usize)>,
}

const RULE_JUSTIFICATION: &str = "the derivation module is generated by the Euler derivation \
(degree 0) and the trivial derivations; coefficients from a positively graded ring have degree \
>= 0, so a negative-degree derivation exists iff some trivial generator has negative degree";

/// Decides whether derivations of negative degree exist on a normal ICIS.
pub fn has_negative_derivations(s: &SingularitySystem) -> Result<NegativityVerdict> {
    has_negative_derivations_with(s, &GbConfig::default())
}

pub fn has_negative_derivations_with(s: &SingularitySystem, config: &GbConfig) -> Result<NegativityVerdict> {
    if !is_normal_icis_with(s, config)? {
        return Err(Error::Precondition(
            "the decision rule needs a normal ICIS; use the derivation-space oracle instead".into(),
        ));
    }
    let (min_degree, _) = min_trivial_degree(s)?;
    let mut witnesses = Vec::new();
    if min_degree < 0 {
        for nu in index_sets(s.n(), s.t() + 1) {
            let degree = trivial_degree(s, &nu);
            if degree >= 0 {
                continue;
            }
            let derivation = trivial_derivation(s.equations(), &nu)?;
            if derivation.is_zero() {
                continue;
            }
            if derivation.degree(s.weights())? != WeightedDegree::Homogeneous(degree) {
                return Err(Error::theory(
                    format!("trivial derivation for nu = {nu:?} is not homogeneous of degree {degree}"),
                    s.dump(),
                ));
            }
            witnesses.push(Witness { nu, degree, derivation });
        }
    }
    if min_degree < 0 && witnesses.is_empty() {
        // Cannot happen for a genuine normal ICIS; let the oracle decide.
        let oracle = DerivationOracle::with_config(s, config)?;
        let dims: Vec<(i64, usize)> = (min_degree..0).map(|d| (d, oracle.space(d).dimension())).collect();
        return Ok(NegativityVerdict {
            exists: dims.iter().any(|&(_, dim)| dim > 0),
            min_degree,
            witnesses,
            decision_basis: DecisionBasis::BruteForceOracle,
            justification: "all trivial derivations of negative degree vanish identically, \
                            contradicting the generator description; the oracle decided"
                .into(),
            oracle_dimensions: dims,
        });
    }
    Ok(NegativityVerdict {
        exists: min_degree < 0,
        min_degree,
        witnesses,
        decision_basis: DecisionBasis::GeneratorRule,
        justification: RULE_JUSTIFICATION.into(),
        oracle_dimensions: Vec::new(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{default_names, parse_polynomial, Polynomial};
    use crate::singularity::validate_system;
    use crate::weights::WeightSystem;

    fn sys(gens: &[&str], w: &[u32]) -> SingularitySystem {
        let names = default_names(w.len());
        let g: Vec<Polynomial> = gens.iter().map(|s| parse_polynomial(s, &names).unwrap()).collect();
        validate_system(&g, &WeightSystem::new(w.to_vec()).unwrap()).unwrap()
    }

    fn example() -> SingularitySystem {
        sys(
            &["x1*x4 + x2*x5 + x3^2 - x4^5", "x1*x5 + x2*x6 + x3^2 + x6^5"],
            &[8, 8, 5, 2, 2, 2],
        )
    }

    #[test]
    fn min_degree_examples() {
        assert_eq!(min_trivial_degree(&example()).unwrap(), (-1, vec![0, 1, 2]));
        assert_eq!(min_trivial_degree(&sys(&["x1^2 + x2^2 + x3^2"], &[1, 1, 1])).unwrap(), (0, vec![0, 1]));
        assert_eq!(min_trivial_degree(&sys(&["x1^3 + x2^3 + x3^3"], &[1, 1, 1])).unwrap(), (1, vec![0, 1]));
        assert!(min_trivial_degree(&sys(&["x1^2", "x2^2"], &[1, 1])).is_err());
    }

    #[test]
    fn counterexample_verdict() {
        let s = example();
        let v = has_negative_derivations(&s).unwrap();
        assert!(v.exists);
        assert_eq!(v.min_degree, -1);
        assert_eq!(v.decision_basis, DecisionBasis::GeneratorRule);
        assert_eq!(v.witnesses.len(), 1);
        let w = &v.witnesses[0];
        assert_eq!((w.nu.as_slice(), w.degree), (&[0, 1, 2][..], -1));
        for g in s.equations() {
            assert!(w.derivation.apply(g).is_zero());
        }
    }

    #[test]
    fn sphere_and_cubic_have_none() {
        let v = has_negative_derivations(&sys(&["x1^2 + x2^2 + x3^2"], &[1, 1, 1])).unwrap();
        assert!(!v.exists && v.witnesses.is_empty());
        let v = has_negative_derivations(&sys(&["x1^3 + x2^3 + x3^3 + x4^3"], &[1, 1, 1, 1])).unwrap();
        assert!(!v.exists);
    }

    #[test]
    fn rule_needs_normal_icis() {
        let err = has_negative_derivations(&sys(&["x1^2 + x2^3"], &[3, 2])).unwrap_err();
        assert!(matches!(err, Error::Precondition(_)));
    }
}
