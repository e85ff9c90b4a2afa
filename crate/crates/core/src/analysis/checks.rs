use super::{has_negative_derivations_with, NegativityVerdict};
use crate::error::{Error, Result};
use crate::groebner::GbConfig;
use crate::poly::Polynomial;
use crate::singularity::{condition_a, condition_b, infer_weights, is_normal_icis_with, validate_system, SingularitySystem};

/// If every equation has order at least three, asserts that no negative
/// derivation exists. Returns whether that hypothesis applied.
pub fn theorem0_check(s: &SingularitySystem) -> Result<bool> {
    let config = GbConfig::default();
    let verdict = has_negative_derivations_with(s, &config)?;
    if s.orders().iter().any(|&o| o < 3) {
        return Ok(false);
    }
    if verdict.exists || verdict.min_degree < 0 {
        return Err(Error::theory(
            format!(
                "all equations have order >= 3 but a negative derivation of degree {} exists",
                verdict.min_degree
            ),
            s.dump(),
        ));
    }
    Ok(true)
}

/// For a normal ICIS of embedding dimension five with two equations, asserts
/// there are no negative derivations and that conditions A and B do not hold
/// for the first two variables crosswise. Returns the existence flag, which
/// is `false` whenever the call succeeds.
pub fn embdim5_check(s: &SingularitySystem) -> Result<bool> {
    if (s.n(), s.t()) != (5, 2) {
        return Err(Error::Precondition(format!(
            "needs n = 5 and t = 2, got n = {} and t = {}",
            s.n(),
            s.t()
        )));
    }
    let verdict = has_negative_derivations_with(s, &GbConfig::default())?;
    if verdict.exists {
        return Err(Error::theory(
            "a normal ICIS with n = 5, t = 2 has a negative derivation",
            s.dump(),
        ));
    }
    if inequality_holds(s) {
        let crosswise = |a: usize, b: usize| condition_a(s, a).is_some() && condition_b(s, b).is_some();
        if crosswise(0, 1) || crosswise(1, 0) {
            return Err(Error::theory(
                "conditions A and B hold crosswise on x1, x2 although p1 + ... + pt < w1 + ... + w(t+1)",
                s.dump(),
            ));
        }
    }
    Ok(verdict.exists)
}

/// `p_1 + ... + p_t < w_1 + ... + w_{t+1}`.
fn inequality_holds(s: &SingularitySystem) -> bool {
    let p: u64 = s.degrees().iter().sum();
    p < s.weights().top_sum(s.t() + 1)
}

/// `p_t - p_1` for a zero-dimensional complete intersection: every
/// derivation of lower degree vanishes.
pub fn halperin_bound(s: &SingularitySystem) -> Result<i64> {
    if s.d() != 0 {
        return Err(Error::Precondition(format!(
            "the bound needs t = n, got t = {} and n = {}",
            s.t(),
            s.n()
        )));
    }
    let p = s.degrees();
    Ok(p[p.len() - 1] as i64 - p[0] as i64)
}

/// Whether existence of negative derivations and the equation degrees agree
/// across every inferred positive grading of `g`. Vacuously true with fewer
/// than two probe gradings.
pub fn grading_independence_check(g: &[Polynomial]) -> Result<bool> {
    if g.len() == 1 && g[0].order()? < 3 {
        return Err(Error::Precondition(
            "grading independence is not claimed for a single equation of order < 3".into(),
        ));
    }
    let probes = infer_weights(g);
    if probes.len() < 2 {
        return Ok(true);
    }
    let config = GbConfig::default();
    let mut seen: Option<(bool, Vec<u64>, SingularitySystem)> = None;
    for w in &probes {
        let s = validate_system(g, w)?;
        if !is_normal_icis_with(&s, &config)? {
            return Err(Error::Precondition(format!("not a normal ICIS for the weights {w}")));
        }
        let NegativityVerdict { exists, .. } = has_negative_derivations_with(&s, &config)?;
        let degrees = s.degrees().to_vec();
        match &seen {
            None => seen = Some((exists, degrees, s)),
            Some((e0, d0, s0)) => {
                // degrees are compared up to the common scale of the grading
                if *e0 != exists || !proportional(d0, &degrees) {
                    return Err(Error::theory(
                        format!("gradings disagree: exists {e0} with p = {d0:?} versus exists {exists} with p = {degrees:?}"),
                        format!("{}\n{}", s0.dump(), s.dump()),
                    ));
                }
            }
        }
    }
    Ok(true)
}

fn proportional(a: &[u64], b: &[u64]) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| x * b[0] == y * a[0])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{default_names, parse_polynomial};
    use crate::weights::WeightSystem;

    fn ps(gens: &[&str], n: usize) -> Vec<Polynomial> {
        gens.iter()
            .map(|s| parse_polynomial(s, &default_names(n)).unwrap())
            .collect()
    }

    fn sys(gens: &[&str], w: &[u32]) -> SingularitySystem {
        validate_system(&ps(gens, w.len()), &WeightSystem::new(w.to_vec()).unwrap()).unwrap()
    }

    const G1: &str = "x1*x4 + x2*x5 + x3^2 - x4^5";
    const G2: &str = "x1*x5 + x2*x6 + x3^2 + x6^5";

    #[test]
    fn high_order_equations_rule_out_negative_degrees() {
        assert!(theorem0_check(&sys(&["x1^3 + x2^3 + x3^3 + x4^3"], &[1, 1, 1, 1])).unwrap());
        assert!(!theorem0_check(&sys(&[G1, G2], &[8, 8, 5, 2, 2, 2])).unwrap());
        assert!(!theorem0_check(&sys(&["x1^2 + x2^2 + x3^2"], &[1, 1, 1])).unwrap());
    }

    #[test]
    fn embdim5_examples() {
        let s = sys(&["x1^2 + x2^2 + x3^2 + x4^2 + x5^2", "x1^2 + 2*x2^2 + 3*x3^2 + 4*x4^2 + 5*x5^2"], &[1; 5]);
        assert!(!embdim5_check(&s).unwrap());
        assert!(matches!(
            embdim5_check(&sys(&["x1^2 + x2^2 + x3^2"], &[1, 1, 1])),
            Err(Error::Precondition(_))
        ));
        // x1 and x2 never occur: not isolated
        let s = sys(&["x3^2 + x4^2", "x4^2 + x5^2"], &[1; 5]);
        assert!(matches!(embdim5_check(&s), Err(Error::Precondition(_))));
    }

    #[test]
    fn halperin_examples() {
        assert_eq!(halperin_bound(&sys(&["x1^2", "x2^2", "x3^2"], &[1, 1, 1])).unwrap(), 0);
        assert_eq!(halperin_bound(&sys(&["x1^2", "x2^3"], &[3, 2])).unwrap(), 0);
        assert_eq!(halperin_bound(&sys(&["x1^2", "x2^4"], &[2, 1])).unwrap(), 0);
        assert_eq!(halperin_bound(&sys(&["x1^4", "x2^2"], &[1, 1])).unwrap(), -2);
        assert!(halperin_bound(&sys(&["x1^2 + x2^2 + x3^2"], &[1, 1, 1])).is_err());
    }

    #[test]
    fn grading_independence_examples() {
        assert!(grading_independence_check(&ps(&[G1, G2], 6)).unwrap());
        assert!(matches!(
            grading_independence_check(&ps(&["x1*x2 + x3^2"], 3)),
            Err(Error::Precondition(_))
        ));
    }
}
