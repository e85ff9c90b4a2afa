//! Serializable summary of the full analysis pipeline.
//!
//! Indices in a report are one-based, matching the variable names `x1, ...`
//! of the input; the library API itself is zero-based.

use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::analysis::{has_negative_derivations_with, min_trivial_degree, DecisionBasis, NegativityVerdict};
use crate::derivation::jacobian_minors;
use crate::error::Result;
use crate::groebner::{groebner_basis_with, EngineStats, GbConfig};
use crate::poly::Polynomial;
use crate::singularity::{
    analysis_order, condition_a, condition_b, equation_basis, lemma12_check, validate_named_system, ConditionWitness,
    SingularitySystem, SystemSummary,
};
use crate::weights::WeightSystem;

/// The system as the caller wrote it, before sorting.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputEcho {
    pub variables: Vec<String>,
    pub weights: Vec<u32>,
    pub equations: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionA {
    pub j: usize,
    pub m: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionB {
    pub nu: Vec<usize>,
    pub m: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionRow {
    pub k: usize,
    pub variable: String,
    pub a: Option<ConditionA>,
    pub b: Option<ConditionB>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessReport {
    pub nu: Vec<usize>,
    pub degree: i64,
    /// Coefficient of `d/dx_i` for each variable, in the sorted variables.
    pub coefficients: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictReport {
    pub exists: bool,
    pub min_degree: i64,
    pub decision_basis: DecisionBasis,
    pub justification: String,
    pub witnesses: Vec<WitnessReport>,
    pub oracle_dimensions: Vec<(i64, usize)>,
}

impl VerdictReport {
    pub fn from_verdict(v: &NegativityVerdict, names: &[String]) -> Self {
        VerdictReport {
            exists: v.exists,
            min_degree: v.min_degree,
            decision_basis: v.decision_basis,
            justification: v.justification.clone(),
            witnesses: v
                .witnesses
                .iter()
                .map(|w| WitnessReport {
                    nu: w.nu.iter().map(|i| i + 1).collect(),
                    degree: w.degree,
                    coefficients: w.derivation.coefficient_strings(names),
                })
                .collect(),
            oracle_dimensions: v.oracle_dimensions.clone(),
        }
    }
}

/// Outcome of the six checks on a member of the counter-example family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CounterexampleChecks {
    pub degrees_are_10_10: bool,
    pub eta_degree: i64,
    pub eta_degree_is_minus_one: bool,
    pub eta_annihilates: bool,
    pub complete_intersection: bool,
    pub isolated: bool,
    pub negative_witness_123: bool,
    /// η agrees with the trivial derivation for `(1, 2, 3)` up to this sign.
    pub sign: i32,
}

impl CounterexampleChecks {
    pub fn all_passed(&self) -> bool {
        self.degrees_are_10_10
            && self.eta_degree_is_minus_one
            && self.eta_annihilates
            && self.complete_intersection
            && self.isolated
            && self.negative_witness_123
            && self.sign != 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub input: InputEcho,
    /// The sorted system; `var_perm[j]` is the input position of variable `j`.
    pub system: SystemSummary,
    pub degrees: Vec<u64>,
    pub complete_intersection: bool,
    pub krull_dimension: usize,
    pub dimension: usize,
    pub isolated: bool,
    pub normal: bool,
    pub orders: Vec<u64>,
    pub conditions: Vec<ConditionRow>,
    pub lemma12: Vec<bool>,
    pub min_trivial_degree: Option<i64>,
    pub min_trivial_nu: Option<Vec<usize>>,
    pub verdict: Option<VerdictReport>,
    /// Why no verdict was computed, if so.
    pub verdict_note: Option<String>,
    pub counterexample: Option<CounterexampleChecks>,
    pub elapsed_ms: u64,
    pub engine: EngineStats,
}

impl AnalysisReport {
    /// The report with timing zeroed, for comparisons.
    pub fn without_timing(&self) -> AnalysisReport {
        AnalysisReport {
            elapsed_ms: 0,
            ..self.clone()
        }
    }
}

/// Validates and analyzes a system given in the caller's variable order.
pub fn analyze(g: &[Polynomial], w: &WeightSystem, names: &[String]) -> Result<AnalysisReport> {
    analyze_with(g, w, names, &GbConfig::default())
}

pub fn analyze_with(g: &[Polynomial], w: &WeightSystem, names: &[String], config: &GbConfig) -> Result<AnalysisReport> {
    let echo = InputEcho {
        variables: names.to_vec(),
        weights: w.as_slice().to_vec(),
        equations: g.iter().map(|p| p.render(names)).collect(),
    };
    let s = validate_named_system(g, w, names)?;
    analyze_validated(&s, echo, config)
}

/// Runs the pipeline on an already validated system.
pub fn analyze_validated(s: &SingularitySystem, input: InputEcho, config: &GbConfig) -> Result<AnalysisReport> {
    let start = Instant::now();
    let mut engine = EngineStats::default();

    let gb = equation_basis(s, config)?;
    engine.absorb(gb.stats());
    let krull_dimension = gb.krull_dimension()?;
    let complete_intersection = krull_dimension == s.d();

    let mut gens: Vec<Polynomial> = s.equations().to_vec();
    gens.extend(jacobian_minors(s.equations())?.into_iter().map(|(_, m)| m).filter(|m| !m.is_zero()));
    let jac = groebner_basis_with(&gens, analysis_order(s), config)?;
    engine.absorb(jac.stats());
    let isolated = jac.is_zero_dimensional()?;
    let normal = complete_intersection && isolated && s.d() >= 2;

    let conditions = (0..s.n())
        .map(|k| ConditionRow {
            k: k + 1,
            variable: s.names()[k].clone(),
            a: match condition_a(s, k) {
                Some(ConditionWitness::A { j, m, .. }) => Some(ConditionA { j: j + 1, m }),
                _ => None,
            },
            b: match condition_b(s, k) {
                Some(ConditionWitness::B { nu, m, .. }) => Some(ConditionB {
                    nu: nu.iter().map(|i| i + 1).collect(),
                    m,
                }),
                _ => None,
            },
        })
        .collect();

    let (min_trivial_degree, min_trivial_nu) = match min_trivial_degree(s) {
        Ok((d, nu)) => (Some(d), Some(nu.iter().map(|i| i + 1).collect())),
        Err(_) => (None, None),
    };

    let (verdict, verdict_note) = if normal {
        let v = has_negative_derivations_with(s, config)?;
        (Some(VerdictReport::from_verdict(&v, s.names())), None)
    } else {
        let why = if !complete_intersection {
            "not a complete intersection"
        } else if !isolated {
            "singularity is not isolated"
        } else {
            "dimension below 2, so not normal"
        };
        (None, Some(format!("{why}; use the derivation-space oracle")))
    };

    let mut system = s.summary();
    system.var_perm.iter_mut().chain(system.eq_perm.iter_mut()).for_each(|i| *i += 1);

    Ok(AnalysisReport {
        input,
        system,
        degrees: s.degrees().to_vec(),
        complete_intersection,
        krull_dimension,
        dimension: s.d(),
        isolated,
        normal,
        orders: s.orders(),
        conditions,
        lemma12: lemma12_check(s),
        min_trivial_degree,
        min_trivial_nu,
        verdict,
        verdict_note,
        counterexample: None,
        elapsed_ms: start.elapsed().as_millis() as u64,
        engine,
    })
}
