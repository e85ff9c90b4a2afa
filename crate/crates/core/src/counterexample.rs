//! The six-variable (and wider) complete intersection carrying a derivation
//! of degree -1, with its verification certificate.
//!
//! For `n >= 6` and constants `c_7, ..., c_n`:
//!
//! ```text
//! g1 = x1*x4 + x2*x5 + x3^2 - x4^5 + x7^5 + ... + xn^5
//! g2 = x1*x5 + x2*x6 + x3^2 + x6^5 + c7*x7^5 + ... + cn*xn^5
//! ```
//!
//! with weights `(8, 8, 5, 2, ..., 2)` and the derivation
//! `2x3(x5 - x6) d1 - 2x3(x4 - x5) d2 + (x4x6 - x5^2) d3`.

use num_traits::{One, Pow, Zero};

use crate::analysis::has_negative_derivations_with;
use crate::derivation::{trivial_derivation, Derivation};
use crate::error::{Error, Result};
use crate::groebner::GbConfig;
use crate::poly::{default_names, Monomial, Polynomial};
use crate::report::{analyze_validated, AnalysisReport, CounterexampleChecks, InputEcho};
use crate::singularity::{validate_system, SingularitySystem};
use crate::weights::{WeightSystem, WeightedDegree};
use crate::Rational;

/// Default upper bound on `n`, keeping the Gröbner verification quick.
pub const DEFAULT_MAX_N: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CounterexampleParams {
    n: usize,
    c: Vec<Rational>,
}

impl CounterexampleParams {
    /// `c` holds `c_7, ..., c_n`.
    pub fn new(n: usize, c: Vec<Rational>) -> Result<Self> {
        Self::with_max_n(n, c, DEFAULT_MAX_N)
    }

    pub fn with_max_n(n: usize, c: Vec<Rational>, max_n: usize) -> Result<Self> {
        if n < 6 {
            return Err(Error::InvalidParams(format!("the family needs n >= 6, got {n}")));
        }
        if n > max_n {
            return Err(Error::InvalidParams(format!("n = {n} exceeds the bound {max_n}")));
        }
        if c.len() != n - 6 {
            return Err(Error::InvalidParams(format!(
                "expected {} constants c7..c{n}, got {}",
                n - 6,
                c.len()
            )));
        }
        for (idx, ci) in c.iter().enumerate() {
            let i = idx + 7;
            if ci.is_one() {
                return Err(Error::InvalidParams(format!("c{i} = 1 is not allowed")));
            }
            if (Pow::pow(ci, 9u32) + Rational::one()).is_zero() {
                return Err(Error::InvalidParams(format!("c{i}^9 + 1 = 0 is not allowed")));
            }
            if let Some(prev) = c[..idx].iter().position(|p| p == ci) {
                return Err(Error::InvalidParams(format!("c{} and c{i} coincide", prev + 7)));
            }
        }
        Ok(CounterexampleParams { n, c })
    }

    /// The canonical choice `c_{6+k} = k + 1`.
    pub fn with_default_constants(n: usize) -> Result<Self> {
        let c = (1..=n.saturating_sub(6))
            .map(|k| Rational::from_integer((k as i64 + 1).into()))
            .collect();
        Self::new(n, c)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn c(&self) -> &[Rational] {
        &self.c
    }
}

pub fn counterexample_weights(n: usize) -> WeightSystem {
    let mut w = vec![8, 8, 5];
    w.resize(n.max(3), 2);
    WeightSystem::new(w).expect("positive weights")
}

fn fifth_power(n: usize, i: usize, c: Rational) -> Polynomial {
    let mut e = vec![0; n];
    e[i] = 5;
    Polynomial::term(c, Monomial::new(e))
}

fn monomial(n: usize, pairs: &[(usize, u32)]) -> Monomial {
    let mut e = vec![0; n];
    for &(i, k) in pairs {
        e[i] += k;
    }
    Monomial::new(e)
}

/// The two equations, in the caller's (already sorted) variable order.
pub fn counterexample_equations(params: &CounterexampleParams) -> Vec<Polynomial> {
    let n = params.n;
    let one = Rational::one;
    let mut g1 = Polynomial::from_terms(
        n,
        vec![
            (monomial(n, &[(0, 1), (3, 1)]), one()),
            (monomial(n, &[(1, 1), (4, 1)]), one()),
            (monomial(n, &[(2, 2)]), one()),
            (monomial(n, &[(3, 5)]), -one()),
        ],
    );
    let mut g2 = Polynomial::from_terms(
        n,
        vec![
            (monomial(n, &[(0, 1), (4, 1)]), one()),
            (monomial(n, &[(1, 1), (5, 1)]), one()),
            (monomial(n, &[(2, 2)]), one()),
            (monomial(n, &[(5, 5)]), one()),
        ],
    );
    for (idx, ci) in params.c.iter().enumerate() {
        g1 = g1 + fifth_power(n, idx + 6, one());
        g2 = g2 + fifth_power(n, idx + 6, ci.clone());
    }
    vec![g1, g2]
}

/// `2x3(x5 - x6) d1 - 2x3(x4 - x5) d2 + (x4x6 - x5^2) d3`, written out
/// rather than computed from a determinant.
pub fn counterexample_eta(n: usize) -> Derivation {
    let two = || Rational::from_integer(2.into());
    let mut q = vec![Polynomial::zero(n); n];
    q[0] = Polynomial::from_terms(
        n,
        vec![
            (monomial(n, &[(2, 1), (4, 1)]), two()),
            (monomial(n, &[(2, 1), (5, 1)]), -two()),
        ],
    );
    q[1] = Polynomial::from_terms(
        n,
        vec![
            (monomial(n, &[(2, 1), (3, 1)]), -two()),
            (monomial(n, &[(2, 1), (4, 1)]), two()),
        ],
    );
    q[2] = Polynomial::from_terms(
        n,
        vec![
            (monomial(n, &[(3, 1), (5, 1)]), Rational::one()),
            (monomial(n, &[(4, 2)]), -Rational::one()),
        ],
    );
    Derivation::new(q)
}

/// The validated system and its degree -1 derivation.
pub fn build_counterexample(params: &CounterexampleParams) -> Result<(SingularitySystem, Derivation)> {
    let s = validate_system(&counterexample_equations(params), &counterexample_weights(params.n))?;
    debug_assert_eq!(s.var_perm(), (0..params.n).collect::<Vec<_>>().as_slice());
    Ok((s, counterexample_eta(params.n)))
}

/// Runs the full pipeline and the six certificate checks. A failing check
/// is a theory violation carrying the report.
pub fn verify_counterexample(params: &CounterexampleParams) -> Result<AnalysisReport> {
    verify_counterexample_with(params, &GbConfig::default())
}

pub fn verify_counterexample_with(params: &CounterexampleParams, config: &GbConfig) -> Result<AnalysisReport> {
    let (s, eta) = build_counterexample(params)?;
    let names = default_names(params.n);
    let input = InputEcho {
        variables: names.clone(),
        weights: s.weights().as_slice().to_vec(),
        equations: s.equations().iter().map(|g| g.render(&names)).collect(),
    };
    let mut report = analyze_validated(&s, input, config)?;

    let eta_degree = match eta.degree(s.weights())? {
        WeightedDegree::Homogeneous(d) => d,
        WeightedDegree::Inhomogeneous => i64::MIN,
    };
    let delta = trivial_derivation(s.equations(), &[0, 1, 2])?;
    let sign = if delta == eta {
        1
    } else if delta == eta.scale(&-Rational::one()) {
        -1
    } else {
        0
    };
    let negative_witness_123 = if report.normal {
        let v = has_negative_derivations_with(&s, config)?;
        v.exists && v.witnesses.iter().any(|w| w.nu == [0, 1, 2] && w.degree == -1)
    } else {
        false
    };
    let checks = CounterexampleChecks {
        degrees_are_10_10: s.degrees() == [10, 10],
        eta_degree,
        eta_degree_is_minus_one: eta_degree == -1,
        eta_annihilates: s.equations().iter().all(|g| eta.apply(g).is_zero()),
        complete_intersection: report.complete_intersection && s.d() == params.n - 2 && s.d() >= 4,
        isolated: report.isolated,
        negative_witness_123,
        sign,
    };
    let passed = checks.all_passed();
    report.counterexample = Some(checks);
    if !passed {
        return Err(Error::theory(
            "the counter-example certificate failed",
            format!("{}\n{:?}", s.dump(), report.counterexample),
        ));
    }
    Ok(report)
}
