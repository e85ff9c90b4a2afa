//! Gröbner bases, normal forms and dimension of polynomial ideals.

mod engine;
mod order;

pub use engine::EngineStats;
pub use order::MonomialOrder;

use engine::{from_polynomial, Engine, IPoly};

use crate::error::{Error, Result};
use crate::poly::{Monomial, Polynomial};
use crate::Rational;

/// Default cap on reduction steps for a single Gröbner computation.
pub const DEFAULT_BUDGET: u64 = 1_000_000;

/// Environment variable overriding [`DEFAULT_BUDGET`].
pub const BUDGET_ENV: &str = "NEGDER_GB_BUDGET";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GbConfig {
    pub budget: u64,
}

impl Default for GbConfig {
    /// The default budget, overridden by `NEGDER_GB_BUDGET` when it parses.
    fn default() -> Self {
        let budget = std::env::var(BUDGET_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .unwrap_or(DEFAULT_BUDGET);
        GbConfig { budget }
    }
}

/// Reduced Gröbner basis together with the ideal generators it came from.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    order: MonomialOrder,
    nvars: usize,
    basis: Vec<IPoly>,
    generators: Vec<Polynomial>,
    source: Vec<Polynomial>,
    stats: EngineStats,
}

pub fn groebner_basis(gens: &[Polynomial], order: MonomialOrder) -> Result<GroebnerBasis> {
    groebner_basis_with(gens, order, &GbConfig::default())
}

pub fn groebner_basis_with(gens: &[Polynomial], order: MonomialOrder, config: &GbConfig) -> Result<GroebnerBasis> {
    let nvars = gens
        .first()
        .map(Polynomial::nvars)
        .ok_or_else(|| Error::Precondition("at least one generator is required".into()))?;
    if let Some(bad) = gens.iter().find(|g| g.nvars() != nvars) {
        return Err(Error::VariableCount {
            expected: nvars,
            found: bad.nvars(),
        });
    }
    if let MonomialOrder::WeightedDegRevLex(w) = &order {
        if w.len() != nvars {
            return Err(Error::VariableCount {
                expected: nvars,
                found: w.len(),
            });
        }
    }
    let input: Vec<IPoly> = gens.iter().map(|g| from_polynomial(g, &order).0).collect();
    let mut engine = Engine::new(&order, config.budget);
    let basis = engine.groebner(input)?;
    let stats = engine.stats;
    let generators = basis.iter().map(|b| b.to_polynomial(nvars)).collect();
    Ok(GroebnerBasis {
        order,
        nvars,
        basis,
        generators,
        source: gens.to_vec(),
        stats,
    })
}

impl GroebnerBasis {
    /// Basis elements, primitive integer polynomials with positive leading
    /// coefficient, sorted by increasing leading monomial.
    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn source(&self) -> &[Polynomial] {
        &self.source
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn stats(&self) -> &EngineStats {
        &self.stats
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.basis
            .iter()
            .map(|b| Monomial::new(b.lm().exps.to_vec()))
            .collect()
    }

    pub fn is_unit(&self) -> bool {
        self.basis.iter().any(|b| b.lm().is_one())
    }

    /// Remainder of `p` modulo the basis; zero exactly for ideal members.
    pub fn normal_form(&self, p: &Polynomial) -> Polynomial {
        assert_eq!(p.nvars(), self.nvars, "polynomial in the wrong ring");
        if p.is_zero() {
            return p.clone();
        }
        let (ip, den) = from_polynomial(p, &self.order);
        let active = vec![true; self.basis.len()];
        let mut engine = Engine::new(&self.order, u64::MAX);
        let (r, lambda) = engine
            .reduce_scaled(ip, &self.basis, &active)
            .expect("normal form runs without a budget");
        // r = lambda * den * NF(p)
        let scale = (lambda * Rational::from_integer(den)).recip();
        r.to_polynomial(self.nvars).scale(&scale)
    }

    pub fn contains(&self, p: &Polynomial) -> bool {
        self.normal_form(p).is_zero()
    }

    /// Whether a monomial is a standard monomial (not a leading monomial multiple).
    pub fn is_standard(&self, m: &Monomial) -> bool {
        !self
            .basis
            .iter()
            .any(|b| b.lm().exps.iter().zip(m.exponents()).all(|(a, e)| a <= e))
    }

    /// Krull dimension of the quotient ring: the largest set of variables
    /// no leading monomial is supported on.
    pub fn krull_dimension(&self) -> Result<usize> {
        if self.is_unit() {
            return Err(Error::UnitIdeal);
        }
        let n = self.nvars;
        assert!(n < 64, "independent-set search supports fewer than 64 variables");
        let supports: Vec<u64> = self
            .basis
            .iter()
            .map(|b| {
                b.lm()
                    .exps
                    .iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .fold(0u64, |acc, (i, _)| acc | 1 << i)
            })
            .collect();
        let independent = |set: u64| supports.iter().all(|&s| s & !set != 0);
        let full: u64 = if n == 0 { 0 } else { (1u64 << n) - 1 };
        let mut best = 0;
        // Independent sets are closed under subsets; search maximal ones.
        let mut set = full;
        loop {
            let size = set.count_ones() as usize;
            if size > best && independent(set) {
                best = size;
                if best == n {
                    break;
                }
            }
            if set == 0 {
                break;
            }
            set -= 1;
        }
        Ok(best)
    }

    /// For each variable, the least `e` with `x_i^e` a leading monomial.
    pub fn pure_powers(&self) -> Vec<Option<u32>> {
        let mut out = vec![None; self.nvars];
        for b in &self.basis {
            if let Some((i, e)) = Monomial::new(b.lm().exps.to_vec()).as_pure_power() {
                out[i] = Some(out[i].map_or(e, |old: u32| old.min(e)));
            }
        }
        out
    }

    /// Whether the quotient is a finite-dimensional vector space.
    ///
    /// For ideals homogeneous in a positive grading this is the same as being
    /// primary to the irrelevant maximal ideal.
    pub fn is_zero_dimensional(&self) -> Result<bool> {
        if self.is_unit() {
            return Err(Error::UnitIdeal);
        }
        Ok(self.pure_powers().iter().all(Option::is_some))
    }
}

pub fn normal_form(p: &Polynomial, gb: &GroebnerBasis) -> Polynomial {
    gb.normal_form(p)
}

pub fn krull_dimension(gb: &GroebnerBasis) -> Result<usize> {
    gb.krull_dimension()
}

pub fn is_zero_dimensional(gb: &GroebnerBasis) -> Result<bool> {
    gb.is_zero_dimensional()
}
