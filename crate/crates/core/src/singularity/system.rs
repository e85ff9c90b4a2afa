use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::{default_names, Polynomial};
use crate::weights::{WeightSystem, WeightedDegree};

/// A validated quasihomogeneous presentation `A = P / <g_1, ..., g_t>`.
///
/// Variables are ordered by non-increasing weight and equations by
/// non-increasing degree. All indices are zero-based; `var_perm[j]` is the
/// caller's index of variable `j` and `eq_perm[j]` the caller's index of
/// equation `j`.
#[derive(Clone, PartialEq, Eq)]
pub struct SingularitySystem {
    names: Vec<String>,
    equations: Vec<Polynomial>,
    weights: WeightSystem,
    degrees: Vec<u64>,
    var_perm: Vec<usize>,
    eq_perm: Vec<usize>,
}

/// Checks homogeneity and order of the equations and sorts variables and
/// equations.
pub fn validate_system(g: &[Polynomial], w: &WeightSystem) -> Result<SingularitySystem> {
    let n = w.len();
    validate_named_system(g, w, &default_names(n))
}

pub fn validate_named_system(g: &[Polynomial], w: &WeightSystem, names: &[String]) -> Result<SingularitySystem> {
    if g.is_empty() {
        return Err(Error::Precondition("at least one equation is required".into()));
    }
    let n = w.len();
    if names.len() != n {
        return Err(Error::VariableCount {
            expected: n,
            found: names.len(),
        });
    }
    if let Some(bad) = g.iter().find(|p| p.nvars() != n) {
        return Err(Error::VariableCount {
            expected: n,
            found: bad.nvars(),
        });
    }
    if g.len() > n {
        return Err(Error::Precondition(format!(
            "{} equations exceed the {n} variables",
            g.len()
        )));
    }
    let mut degrees = Vec::with_capacity(g.len());
    for (i, gi) in g.iter().enumerate() {
        if gi.is_zero() {
            return Err(Error::Precondition(format!("equation g{} is zero", i + 1)));
        }
        match gi.weighted_degree(w)? {
            WeightedDegree::Homogeneous(d) => degrees.push(d as u64),
            WeightedDegree::Inhomogeneous => {
                let (a, da, b, db) = gi.homogeneity_defect(w).expect("inhomogeneous has a defect");
                return Err(Error::Inhomogeneous {
                    index: i + 1,
                    first: Polynomial::term(num_traits::One::one(), a).render(names),
                    second: Polynomial::term(num_traits::One::one(), b).render(names),
                    first_degree: da,
                    second_degree: db,
                });
            }
        }
        let order = gi.order()?;
        if order < 2 {
            return Err(Error::OrderTooLow { index: i + 1, order });
        }
    }

    let mut var_perm: Vec<usize> = (0..n).collect();
    var_perm.sort_by(|&a, &b| w.get(b).cmp(&w.get(a)));
    let mut eq_perm: Vec<usize> = (0..g.len()).collect();
    eq_perm.sort_by(|&a, &b| degrees[b].cmp(&degrees[a]));

    Ok(SingularitySystem {
        names: var_perm.iter().map(|&i| names[i].clone()).collect(),
        equations: eq_perm.iter().map(|&j| g[j].permute_variables(&var_perm)).collect(),
        weights: w.permuted(&var_perm),
        degrees: eq_perm.iter().map(|&j| degrees[j]).collect(),
        var_perm,
        eq_perm,
    })
}

impl SingularitySystem {
    pub fn n(&self) -> usize {
        self.weights.len()
    }

    pub fn t(&self) -> usize {
        self.equations.len()
    }

    /// Expected dimension `n - t`.
    pub fn d(&self) -> usize {
        self.n() - self.t()
    }

    pub fn equations(&self) -> &[Polynomial] {
        &self.equations
    }

    pub fn equation(&self, j: usize) -> &Polynomial {
        &self.equations[j]
    }

    pub fn weights(&self) -> &WeightSystem {
        &self.weights
    }

    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn var_perm(&self) -> &[usize] {
        &self.var_perm
    }

    pub fn eq_perm(&self) -> &[usize] {
        &self.eq_perm
    }

    pub fn orders(&self) -> Vec<u64> {
        self.equations
            .iter()
            .map(|g| g.order().expect("validated equations are non-zero"))
            .collect()
    }

    /// Same variables and weights, different equations of the same degrees.
    pub(crate) fn with_equations(&self, equations: Vec<Polynomial>) -> SingularitySystem {
        debug_assert_eq!(equations.len(), self.t());
        SingularitySystem {
            equations,
            ..self.clone()
        }
    }

    /// Human-readable dump used in theory-violation reports.
    pub fn dump(&self) -> String {
        let mut s = format!("vars: {}\nweights: {}\n", self.names.join(" "), self.weights);
        for g in &self.equations {
            s.push_str(&format!("eq: {}\n", g.render(&self.names)));
        }
        s
    }

    pub fn summary(&self) -> SystemSummary {
        SystemSummary {
            variables: self.names.clone(),
            weights: self.weights.as_slice().to_vec(),
            equations: self.equations.iter().map(|g| g.render(&self.names)).collect(),
            degrees: self.degrees.clone(),
            var_perm: self.var_perm.clone(),
            eq_perm: self.eq_perm.clone(),
        }
    }
}

impl fmt::Debug for SingularitySystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SingularitySystem {{\n{}}}", self.dump())
    }
}

/// Serializable view of a validated system.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, serde::Deserialize)]
pub struct SystemSummary {
    pub variables: Vec<String>,
    pub weights: Vec<u32>,
    pub equations: Vec<String>,
    pub degrees: Vec<u64>,
    pub var_perm: Vec<usize>,
    pub eq_perm: Vec<usize>,
}

/// Inverse of a permutation given as `perm[new] = old`.
pub fn invert_permutation(perm: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; perm.len()];
    for (new, &old) in perm.iter().enumerate() {
        inv[old] = new;
    }
    inv
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_polynomial;

    fn p(s: &str, n: usize) -> Polynomial {
        parse_polynomial(s, &default_names(n)).unwrap()
    }

    #[test]
    fn counterexample_validates() {
        let g = vec![
            p("x1*x4 + x2*x5 + x3^2 - x4^5", 6),
            p("x1*x5 + x2*x6 + x3^2 + x6^5", 6),
        ];
        let s = validate_system(&g, &WeightSystem::new(vec![8, 8, 5, 2, 2, 2]).unwrap()).unwrap();
        assert_eq!(s.degrees(), &[10, 10]);
        assert_eq!((s.t(), s.d()), (2, 4));
        assert_eq!(s.var_perm(), &[0, 1, 2, 3, 4, 5]);
    }

    #[test]
    fn order_one_rejected() {
        let err = validate_system(&[p("x1", 2)], &WeightSystem::standard(2)).unwrap_err();
        assert_eq!(err, Error::OrderTooLow { index: 1, order: 1 });
    }

    #[test]
    fn cusp_validates() {
        let s = validate_system(&[p("x1^2 + x2^3", 2)], &WeightSystem::new(vec![3, 2]).unwrap()).unwrap();
        assert_eq!(s.degrees(), &[6]);
    }

    #[test]
    fn inhomogeneous_reports_monomials() {
        let err = validate_system(&[p("x1^2 + x2^3", 2)], &WeightSystem::standard(2)).unwrap_err();
        match err {
            Error::Inhomogeneous { index, first, second, .. } => {
                assert_eq!(index, 1);
                assert_eq!((first.as_str(), second.as_str()), ("x2^3", "x1^2"));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn sorts_variables_and_equations() {
        // y has the larger weight; the cubic equation has the larger degree.
        let g = vec![p("x1^2", 2), p("x2^3 + x1^3", 2)];
        let s = validate_system(&g, &WeightSystem::new(vec![1, 1]).unwrap()).unwrap();
        assert_eq!(s.degrees(), &[3, 2]);
        assert_eq!(s.eq_perm(), &[1, 0]);

        let g = vec![p("x1^4 + x2^2", 2)];
        let s = validate_system(&g, &WeightSystem::new(vec![1, 2]).unwrap()).unwrap();
        assert_eq!(s.var_perm(), &[1, 0]);
        assert_eq!(s.weights().as_slice(), &[2, 1]);
        assert_eq!(s.equation(0), &p("x1^2 + x2^4", 2));
        assert_eq!(s.names(), &["x2".to_string(), "x1".to_string()]);
        let inv = invert_permutation(s.var_perm());
        let back: Vec<usize> = inv.iter().map(|&i| s.var_perm()[i]).collect();
        assert_eq!(back, vec![0, 1]);
    }
}
