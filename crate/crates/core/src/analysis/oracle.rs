use std::collections::HashMap;

use num_traits::Zero;

use crate::derivation::Derivation;
use crate::error::Result;
use crate::groebner::{GbConfig, GroebnerBasis};
use crate::linalg::rref;
use crate::poly::{monomials_of_weighted_degree, Monomial, Polynomial};
use crate::singularity::{equation_basis, SingularitySystem};
use crate::Rational;

/// Homogeneous piece of the derivation module of `P/<g>` in one degree.
///
/// Coefficients are taken modulo the ideal: each `q_i` is a combination of
/// standard monomials of the Gröbner basis, so two derivations differing by
/// an element of `<g> Theta_P` have the same coordinates.
#[derive(Clone, Debug)]
pub struct GradedDerivationSpace {
    degree: i64,
    basis: Vec<Derivation>,
    unknowns: Vec<(usize, Monomial)>,
    vectors: Vec<Vec<Rational>>,
}

impl GradedDerivationSpace {
    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn basis(&self) -> &[Derivation] {
        &self.basis
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    /// Number of coefficient unknowns `(i, standard monomial)` of the system.
    pub fn unknowns(&self) -> usize {
        self.unknowns.len()
    }
}

/// Brute-force solver for graded pieces of the derivation module, sharing one
/// Gröbner basis of the equations across degrees.
#[derive(Clone, Debug)]
pub struct DerivationOracle {
    system: SingularitySystem,
    gb: GroebnerBasis,
    /// `partials[j][i] = d_i g_j`
    partials: Vec<Vec<Polynomial>>,
}

impl DerivationOracle {
    pub fn new(s: &SingularitySystem) -> Result<Self> {
        Self::with_config(s, &GbConfig::default())
    }

    pub fn with_config(s: &SingularitySystem, config: &GbConfig) -> Result<Self> {
        let gb = equation_basis(s, config)?;
        let partials = s
            .equations()
            .iter()
            .map(|g| (0..s.n()).map(|i| g.partial_derivative(i)).collect())
            .collect();
        Ok(DerivationOracle {
            system: s.clone(),
            gb,
            partials,
        })
    }

    pub fn system(&self) -> &SingularitySystem {
        &self.system
    }

    pub fn groebner_basis(&self) -> &GroebnerBasis {
        &self.gb
    }

    fn standard_monomials(&self, degree: i64) -> Vec<Monomial> {
        if degree < 0 {
            return Vec::new();
        }
        monomials_of_weighted_degree(self.system.weights().as_slice(), degree as u64)
            .into_iter()
            .filter(|m| self.gb.is_standard(m))
            .collect()
    }

    /// Solves `d(g_j) = 0` in `P/<g>` for all `j` over derivations of the
    /// given degree.
    pub fn space(&self, degree: i64) -> GradedDerivationSpace {
        let s = &self.system;
        let n = s.n();
        let unknowns: Vec<(usize, Monomial)> = (0..n)
            .flat_map(|i| {
                self.standard_monomials(degree + s.weights().get(i) as i64)
                    .into_iter()
                    .map(move |m| (i, m))
            })
            .collect();

        let mut row_of: HashMap<(usize, Monomial), usize> = HashMap::new();
        let mut rows: Vec<Vec<Rational>> = Vec::new();
        for (col, (i, m)) in unknowns.iter().enumerate() {
            for (j, partial) in self.partials.iter().enumerate() {
                if partial[*i].is_zero() {
                    continue;
                }
                let image = self.gb.normal_form(&partial[*i].mul_monomial(m));
                for (mono, c) in image.terms() {
                    let r = *row_of.entry((j, mono.clone())).or_insert_with(|| {
                        rows.push(vec![Rational::zero(); unknowns.len()]);
                        rows.len() - 1
                    });
                    rows[r][col] += c;
                }
            }
        }
        let vectors = rref(rows, unknowns.len()).nullspace();
        let basis = vectors.iter().map(|v| derivation_from(n, &unknowns, v)).collect();
        GradedDerivationSpace {
            degree,
            basis,
            unknowns,
            vectors,
        }
    }

    /// Replaces every coefficient by its normal form.
    pub fn reduce(&self, eta: &Derivation) -> Derivation {
        eta.map(|q| self.gb.normal_form(q))
    }

    /// Index of the first equation `g_j` with `eta(g_j)` outside the ideal.
    pub fn first_non_annihilated(&self, eta: &Derivation) -> Option<usize> {
        (0..self.system.t()).find(|&j| !self.gb.contains(&eta.apply(self.system.equation(j))))
    }

    /// Whether the class of `eta` modulo `<g> Theta_P` lies in `space`.
    pub fn class_in_space(&self, space: &GradedDerivationSpace, eta: &Derivation) -> bool {
        let reduced = self.reduce(eta);
        let index: HashMap<(usize, &Monomial), usize> = space
            .unknowns
            .iter()
            .enumerate()
            .map(|(col, (i, m))| ((*i, m), col))
            .collect();
        let mut v = vec![Rational::zero(); space.unknowns.len()];
        for (i, q) in reduced.coefficients().iter().enumerate() {
            for (m, c) in q.terms() {
                match index.get(&(i, m)) {
                    Some(&col) => v[col] = c.clone(),
                    None => return false,
                }
            }
        }
        rref(space.vectors.clone(), space.unknowns.len()).row_space_contains(&v)
    }
}

fn derivation_from(n: usize, unknowns: &[(usize, Monomial)], v: &[Rational]) -> Derivation {
    let mut coefficients = vec![Polynomial::zero(n); n];
    for ((i, m), c) in unknowns.iter().zip(v) {
        if !c.is_zero() {
            coefficients[*i].add_term(m.clone(), c.clone());
        }
    }
    Derivation::new(coefficients)
}

/// Graded piece of the derivation module in the given degree.
pub fn derivation_space(s: &SingularitySystem, degree: i64) -> Result<GradedDerivationSpace> {
    Ok(DerivationOracle::new(s)?.space(degree))
}
