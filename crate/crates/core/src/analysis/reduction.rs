use super::oracle::DerivationOracle;
use crate::derivation::Derivation;
use crate::error::{Error, Result};
use crate::groebner::GbConfig;
use crate::poly::{Monomial, Polynomial};
use crate::singularity::{condition_a, condition_b, is_isolated_with, is_normal_icis_with, ConditionWitness, SingularitySystem};
use crate::weights::WeightedDegree;
use crate::Rational;

/// One coordinate change `x_k' = x_k + t1`, witnessed by `x_k^m` in `g_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionStep {
    pub k: usize,
    pub j: usize,
    pub m: u32,
    pub t1: Polynomial,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ReductionOutcome {
    /// Condition A fails at `k` with `q_k != 0`; condition B holds there.
    Stopped { k: usize, witness: ConditionWitness },
    /// Every coefficient was removed: the derivation is zero modulo the ideal.
    Eliminated,
}

#[derive(Clone, Debug)]
pub struct Reduction {
    pub eta: Derivation,
    pub system: SingularitySystem,
    pub steps: Vec<ReductionStep>,
    pub outcome: ReductionOutcome,
    /// Whether the structural conclusions for normal ICIS were checked
    /// (they only apply when the input is one).
    pub conclusions_checked: bool,
}

/// Removes leading coefficients of a negative derivation by coordinate
/// changes while condition A allows it.
///
/// `eta` must be homogeneous of negative degree, annihilate every equation
/// modulo the ideal, and be triangular: `q_i` only involves variables after
/// `x_i`, and `q_i = 0` for `i > t`.
pub fn reduce_negative_derivation(s: &SingularitySystem, eta: &Derivation) -> Result<Reduction> {
    reduce_negative_derivation_with(s, eta, &GbConfig::default())
}

pub fn reduce_negative_derivation_with(
    s: &SingularitySystem,
    eta: &Derivation,
    config: &GbConfig,
) -> Result<Reduction> {
    let (n, t) = (s.n(), s.t());
    if eta.nvars() != n {
        return Err(Error::VariableCount {
            expected: n,
            found: eta.nvars(),
        });
    }
    match eta.degree(s.weights())? {
        WeightedDegree::Homogeneous(a) if a < 0 => {}
        WeightedDegree::Homogeneous(a) => {
            return Err(Error::Precondition(format!("derivation has degree {a}, not negative")))
        }
        WeightedDegree::Inhomogeneous => return Err(Error::Precondition("derivation is not homogeneous".into())),
    }
    check_triangular(eta, t)?;
    let oracle = DerivationOracle::with_config(s, config)?;
    if let Some(j) = oracle.first_non_annihilated(eta) {
        return Err(Error::NotAnnihilating { index: j + 1 });
    }

    let mut sys = s.clone();
    let mut eta = eta.clone();
    let mut steps = Vec::new();
    let mut k = 0;
    loop {
        while k < n && eta.coefficient(k).is_zero() {
            k += 1;
        }
        if k == n {
            return Ok(Reduction {
                eta,
                system: sys,
                steps,
                outcome: ReductionOutcome::Eliminated,
                conclusions_checked: false,
            });
        }
        let Some(ConditionWitness::A { j, m, .. }) = condition_a(&sys, k) else {
            break;
        };
        let (next_sys, next_eta, t1) = shift_coordinate(&sys, &eta, k, j, m, config)?;
        steps.push(ReductionStep { k, j, m, t1 });
        sys = next_sys;
        eta = next_eta;
    }

    if k >= t {
        return Err(Error::Precondition(format!(
            "condition A fails at x{} with k > t; the system is not an isolated singularity",
            k + 1
        )));
    }
    let witness = match condition_b(&sys, k) {
        Some(w) => w,
        None if is_isolated_with(&sys, config)?.isolated => {
            return Err(Error::theory(
                format!("neither condition A nor B holds for x{} on an isolated singularity", k + 1),
                sys.dump(),
            ))
        }
        None => {
            return Err(Error::Precondition(format!(
                "neither condition A nor B holds for x{}; the system is not isolated",
                k + 1
            )))
        }
    };
    let conclusions_checked = is_normal_icis_with(s, config)?;
    if conclusions_checked {
        check_conclusions(&sys, k, &witness)?;
    }
    Ok(Reduction {
        eta,
        system: sys,
        steps,
        outcome: ReductionOutcome::Stopped { k, witness },
        conclusions_checked,
    })
}

fn check_triangular(eta: &Derivation, t: usize) -> Result<()> {
    for (i, q) in eta.coefficients().iter().enumerate() {
        if i > t && !q.is_zero() {
            return Err(Error::Precondition(format!(
                "coefficient of d x{} must vanish (only the first t + 1 may be non-zero)",
                i + 1
            )));
        }
        if let Some(v) = (0..=i).find(|&v| q.depends_on(v)) {
            return Err(Error::Precondition(format!(
                "coefficient of d x{} depends on x{}; it may only involve later variables",
                i + 1,
                v + 1
            )));
        }
    }
    Ok(())
}

/// Normalizes `g_j` so the `x_k^m` coefficient is `1/m`, takes the
/// coefficient `t1` of `x_k^{m-1}`, and rewrites everything in the
/// coordinate `x_k + t1`.
fn shift_coordinate(
    s: &SingularitySystem,
    eta: &Derivation,
    k: usize,
    j: usize,
    m: u32,
    config: &GbConfig,
) -> Result<(SingularitySystem, Derivation, Polynomial)> {
    let n = s.n();
    let g = s.equation(j);
    let lead = g.coefficient_of_power(k, m);
    if !lead.is_constant() || lead.is_zero() || g.degree_in(k) != m {
        return Err(Error::theory(
            format!("x{}^{m} is not the top power of x{} in g{}", k + 1, k + 1, j + 1),
            s.dump(),
        ));
    }
    let c = lead.coefficient(&Monomial::one(n));
    let normalizer = (c * Rational::from_integer(m.into())).recip();
    let t1 = g.coefficient_of_power(k, m - 1).scale(&normalizer);
    if !t1.is_zero() && t1.weighted_degree(s.weights())? != WeightedDegree::Homogeneous(s.weights().get(k) as i64) {
        return Err(Error::theory(
            format!("t1 = {} is not of the degree of x{}", t1, k + 1),
            s.dump(),
        ));
    }

    // eta = sum_{i>k} q_i (d_i - d_i(t1) d_k) modulo the ideal.
    let mut residual = eta.coefficient(k).clone();
    for i in k + 1..n {
        let q = eta.coefficient(i);
        if !q.is_zero() {
            residual = residual + q * &t1.partial_derivative(i);
        }
    }
    let oracle = DerivationOracle::with_config(s, config)?;
    if !oracle.groebner_basis().contains(&residual) {
        // Only derivations killing the equations exactly are guaranteed this.
        return Err(Error::Precondition(format!(
            "q{} + sum q_i d_i(t1) = {} is not in the ideal",
            k + 1,
            residual.render(s.names())
        )));
    }

    // Old x_k equals x_k' - t1.
    let shift = Polynomial::var(n, k) - &t1;
    let equations: Vec<Polynomial> = s.equations().iter().map(|g| g.substitute(k, &shift)).collect();
    let next = s.with_equations(equations);
    let mut coefficients = eta.coefficients().to_vec();
    coefficients[k] = Polynomial::zero(n);
    let next_eta = Derivation::new(coefficients);

    for (idx, (g, &p)) in next.equations().iter().zip(s.degrees()).enumerate() {
        if g.weighted_degree(s.weights())? != WeightedDegree::Homogeneous(p as i64) {
            return Err(Error::theory(
                format!("coordinate change broke homogeneity of g{}", idx + 1),
                next.dump(),
            ));
        }
    }
    if !next_eta.is_zero() && next_eta.degree(s.weights())? != eta.degree(s.weights())? {
        return Err(Error::theory("coordinate change broke homogeneity of the derivation", next.dump()));
    }
    Ok((next, next_eta, t1))
}

/// Numerical consequences for a normal ICIS carrying a negative derivation.
fn check_conclusions(s: &SingularitySystem, k: usize, witness: &ConditionWitness) -> Result<()> {
    let (t, d) = (s.t() as i64, s.d() as i64);
    let k1 = k as i64 + 1;
    let fail = |claim: String| Err(Error::theory(claim, s.dump()));
    if k1 > t {
        return fail(format!("stopping index {k1} exceeds t = {t}"));
    }
    if k1 < t - d + 2 {
        return fail(format!("stopping index {k1} is below t - d + 2 = {}", t - d + 2));
    }
    for j in k..s.t() {
        let order = s.equation(j).order()?;
        if order > 2 {
            return fail(format!("g{} has order {order} > 2", j + 1));
        }
    }
    if let ConditionWitness::B { nu, m, .. } = witness {
        for j in k..s.t() {
            if m[j] != 1 {
                return fail(format!("condition B exponent m{} = {} is not 1", j + 1, m[j]));
            }
            if nu[j] < s.t() + 1 {
                return fail(format!("condition B index nu{} = {} is below t + 2", j + 1, nu[j] + 1));
            }
        }
    }
    Ok(())
}
