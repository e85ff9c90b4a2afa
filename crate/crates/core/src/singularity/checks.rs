use serde::{Deserialize, Serialize};

use super::system::SingularitySystem;
use crate::derivation::jacobian_minors;
use crate::error::Result;
use crate::groebner::{groebner_basis_with, EngineStats, GbConfig, GroebnerBasis, MonomialOrder};
use crate::poly::{Monomial, Polynomial};

/// Order used for the dimension computations on a validated system.
///
/// The equations and minors are homogeneous for the system's weights, so
/// the weighted order keeps every intermediate polynomial homogeneous.
pub fn analysis_order(s: &SingularitySystem) -> MonomialOrder {
    MonomialOrder::WeightedDegRevLex(s.weights().clone())
}

/// Gröbner basis of `<g_1, ..., g_t>`.
pub fn equation_basis(s: &SingularitySystem, config: &GbConfig) -> Result<GroebnerBasis> {
    groebner_basis_with(s.equations(), analysis_order(s), config)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsolationCertificate {
    pub isolated: bool,
    /// Least pure power of each variable among the leading monomials of the
    /// basis of `<g> + J`, if any.
    pub pure_powers: Vec<Option<u32>>,
    pub basis_size: usize,
    pub stats: EngineStats,
}

/// Whether the ideal of the equations and all maximal Jacobian minors is
/// primary to the irrelevant ideal (graded isolatedness test).
pub fn is_isolated(s: &SingularitySystem) -> Result<IsolationCertificate> {
    is_isolated_with(s, &GbConfig::default())
}

pub fn is_isolated_with(s: &SingularitySystem, config: &GbConfig) -> Result<IsolationCertificate> {
    let mut gens: Vec<Polynomial> = s.equations().to_vec();
    gens.extend(
        jacobian_minors(s.equations())?
            .into_iter()
            .map(|(_, m)| m)
            .filter(|m| !m.is_zero()),
    );
    let gb = groebner_basis_with(&gens, analysis_order(s), config)?;
    let pure_powers = gb.pure_powers();
    Ok(IsolationCertificate {
        isolated: gb.is_zero_dimensional()?,
        pure_powers,
        basis_size: gb.generators().len(),
        stats: gb.stats().clone(),
    })
}

/// Whether `g_1, ..., g_t` cut out a subvariety of dimension `n - t`.
pub fn is_complete_intersection(s: &SingularitySystem) -> Result<bool> {
    is_complete_intersection_with(s, &GbConfig::default())
}

pub fn is_complete_intersection_with(s: &SingularitySystem, config: &GbConfig) -> Result<bool> {
    let gb = equation_basis(s, config)?;
    Ok(gb.krull_dimension()? == s.d())
}

/// Complete intersection, isolated, and of dimension at least two.
pub fn is_normal_icis(s: &SingularitySystem) -> Result<bool> {
    is_normal_icis_with(s, &GbConfig::default())
}

pub fn is_normal_icis_with(s: &SingularitySystem, config: &GbConfig) -> Result<bool> {
    if s.d() < 2 {
        return Ok(false);
    }
    Ok(is_complete_intersection_with(s, config)? && is_isolated_with(s, config)?.isolated)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum ConditionWitness {
    /// `x_k^m` occurs in `g_j`.
    A { k: usize, j: usize, m: u32 },
    /// For each `j`, `x_k^{m_j} x_{nu_j}` occurs in `g_j`, the `nu_j`
    /// pairwise different and different from `k`.
    B { k: usize, nu: Vec<usize>, m: Vec<u32> },
}

impl ConditionWitness {
    pub fn k(&self) -> usize {
        match self {
            ConditionWitness::A { k, .. } | ConditionWitness::B { k, .. } => *k,
        }
    }
}

/// Condition A(k): smallest `j`, then smallest `m >= 2`, with `x_k^m` in `g_j`.
pub fn condition_a(s: &SingularitySystem, k: usize) -> Option<ConditionWitness> {
    assert!(k < s.n(), "variable index out of range");
    s.equations().iter().enumerate().find_map(|(j, g)| {
        g.monomials()
            .filter_map(Monomial::as_pure_power)
            .filter(|&(i, e)| i == k && e >= 2)
            .map(|(_, e)| e)
            .min()
            .map(|m| ConditionWitness::A { k, j, m })
    })
}

/// Condition B(k), found as a system of distinct representatives.
pub fn condition_b(s: &SingularitySystem, k: usize) -> Option<ConditionWitness> {
    assert!(k < s.n(), "variable index out of range");
    let n = s.n();
    // candidates[j] = sorted (nu, m) with x_k^m x_nu in g_j
    let candidates: Vec<Vec<(usize, u32)>> = s
        .equations()
        .iter()
        .map(|g| {
            let mut c: Vec<(usize, u32)> = g
                .monomials()
                .filter_map(|mono| {
                    let m = mono.exponent(k);
                    if m == 0 {
                        return None;
                    }
                    let others: Vec<usize> = mono.support().filter(|&i| i != k).collect();
                    match others.as_slice() {
                        [nu] if mono.exponent(*nu) == 1 => Some((*nu, m)),
                        _ => None,
                    }
                })
                .collect();
            c.sort();
            c.dedup_by_key(|(nu, _)| *nu);
            c
        })
        .collect();

    // Kuhn's augmenting paths; equations in order, candidates by increasing nu.
    let mut owner: Vec<Option<usize>> = vec![None; n];
    fn augment(j: usize, cand: &[Vec<(usize, u32)>], owner: &mut [Option<usize>], seen: &mut [bool]) -> bool {
        for &(nu, _) in &cand[j] {
            if seen[nu] {
                continue;
            }
            seen[nu] = true;
            if owner[nu].is_none() || augment(owner[nu].unwrap(), cand, owner, seen) {
                owner[nu] = Some(j);
                return true;
            }
        }
        false
    }
    for j in 0..s.t() {
        let mut seen = vec![false; n];
        if !augment(j, &candidates, &mut owner, &mut seen) {
            return None;
        }
    }
    let mut nu = vec![0; s.t()];
    let mut m = vec![0; s.t()];
    for (v, o) in owner.iter().enumerate() {
        if let Some(j) = o {
            nu[*j] = v;
            m[*j] = candidates[*j].iter().find(|(c, _)| *c == v).unwrap().1;
        }
    }
    Some(ConditionWitness::B { k, nu, m })
}

/// For each `j`, whether `p_1 + ... + p_j >= w_1 + ... + w_j + j`.
pub fn lemma12_check(s: &SingularitySystem) -> Vec<bool> {
    let mut psum = 0u64;
    let mut wsum = 0u64;
    (0..s.t())
        .map(|j| {
            psum += s.degrees()[j];
            wsum += s.weights().get(j) as u64;
            psum >= wsum + j as u64 + 1
        })
        .collect()
}
