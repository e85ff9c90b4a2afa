use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::monomial::Monomial;
use crate::error::{Error, Result};
use crate::weights::{WeightSystem, WeightedDegree};
use crate::Rational;

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms are kept in a map ordered by [`Monomial`]'s graded reverse
/// lexicographic order; zero coefficients are never stored, so structural
/// equality is mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Self::term(c, Monomial::one(nvars))
    }

    pub fn from_int(nvars: usize, c: i64) -> Self {
        Self::constant(nvars, Rational::from_integer(BigInt::from(c)))
    }

    /// The variable `x_i` (zero-based).
    pub fn var(nvars: usize, i: usize) -> Self {
        Self::term(Rational::one(), Monomial::var(nvars, i))
    }

    pub fn term(c: Rational, m: Monomial) -> Self {
        let nvars = m.nvars();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { nvars, terms }
    }

    /// Collects terms, merging repeated monomials and dropping zeros.
    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = Polynomial::zero(nvars);
        for (m, c) in terms {
            assert_eq!(m.nvars(), nvars, "monomial in the wrong ring");
            p.add_term(m, c);
        }
        p
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in decreasing canonical order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> + '_ {
        self.terms.iter().rev()
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> + '_ {
        self.terms.keys().rev()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn contains_monomial(&self, m: &Monomial) -> bool {
        self.terms.contains_key(m)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(k, c)| (k.mul(m), c.clone())).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Polynomial::one(self.nvars);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Weighted degree if every monomial has the same `w`-degree.
    pub fn weighted_degree(&self, w: &WeightSystem) -> Result<WeightedDegree> {
        self.check_ring(w.len())?;
        let mut degrees = self.terms.keys().map(|m| m.weighted_degree(w.as_slice()));
        let first = degrees.next().ok_or(Error::ZeroPolynomial)?;
        if degrees.all(|d| d == first) {
            Ok(WeightedDegree::Homogeneous(first as i64))
        } else {
            Ok(WeightedDegree::Inhomogeneous)
        }
    }

    /// Two monomials of different weighted degree, when `self` is inhomogeneous.
    pub(crate) fn homogeneity_defect(&self, w: &WeightSystem) -> Option<(Monomial, u64, Monomial, u64)> {
        let mut it = self.terms.keys().rev();
        let first = it.next()?;
        let d0 = first.weighted_degree(w.as_slice());
        it.find(|m| m.weighted_degree(w.as_slice()) != d0)
            .map(|m| (first.clone(), d0, m.clone(), m.weighted_degree(w.as_slice())))
    }

    /// Order at the origin: the least total degree of a monomial.
    pub fn order(&self) -> Result<u64> {
        self.terms
            .keys()
            .map(Monomial::total_degree)
            .min()
            .ok_or(Error::ZeroPolynomial)
    }

    pub fn total_degree(&self) -> Result<u64> {
        self.terms
            .keys()
            .map(Monomial::total_degree)
            .max()
            .ok_or(Error::ZeroPolynomial)
    }

    /// Formal partial derivative with respect to `x_i` (zero-based).
    pub fn partial_derivative(&self, i: usize) -> Polynomial {
        assert!(i < self.nvars, "variable index {i} out of range");
        let mut out = Polynomial::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.exponent(i);
            if e == 0 {
                continue;
            }
            let mut exps = m.exponents().to_vec();
            exps[i] -= 1;
            out.terms
                .insert(Monomial::new(exps), c * Rational::from_integer(BigInt::from(e)));
        }
        out
    }

    /// Replaces `x_i` by `r` and expands.
    pub fn substitute(&self, i: usize, r: &Polynomial) -> Polynomial {
        assert!(i < self.nvars, "variable index {i} out of range");
        assert_eq!(r.nvars, self.nvars, "substituted polynomial in the wrong ring");
        let mut powers: Vec<Polynomial> = vec![Polynomial::one(self.nvars)];
        let mut out = Polynomial::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.exponent(i) as usize;
            while powers.len() <= e {
                let next = powers.last().unwrap() * r;
                powers.push(next);
            }
            let mut exps = m.exponents().to_vec();
            exps[i] = 0;
            let rest = Polynomial::term(c.clone(), Monomial::new(exps));
            out = out + &rest * &powers[e];
        }
        out
    }

    /// Collects the coefficient of `x_k^e`, a polynomial free of `x_k`.
    pub fn coefficient_of_power(&self, k: usize, e: u32) -> Polynomial {
        let mut out = Polynomial::zero(self.nvars);
        for (m, c) in &self.terms {
            if m.exponent(k) == e {
                let mut exps = m.exponents().to_vec();
                exps[k] = 0;
                out.terms.insert(Monomial::new(exps), c.clone());
            }
        }
        out
    }

    /// Highest power of `x_k` occurring.
    pub fn degree_in(&self, k: usize) -> u32 {
        self.terms.keys().map(|m| m.exponent(k)).max().unwrap_or(0)
    }

    pub fn depends_on(&self, k: usize) -> bool {
        self.terms.keys().any(|m| m.exponent(k) > 0)
    }

    /// Reorders variables: new variable `j` is old variable `perm[j]`.
    pub fn permute_variables(&self, perm: &[usize]) -> Polynomial {
        assert_eq!(perm.len(), self.nvars);
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.permuted(perm), c.clone()))
                .collect(),
        }
    }

    /// Multiplies by the least positive rational making the coefficients
    /// coprime integers with a positive leading coefficient.
    pub fn primitive(&self) -> Polynomial {
        use num_integer::Integer;
        let Some((_, lc)) = self.leading_term() else {
            return self.clone();
        };
        let den_lcm = self
            .terms
            .values()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let num_gcd = self
            .terms
            .values()
            .fold(BigInt::zero(), |acc, c| acc.gcd(&(c.numer() * (&den_lcm / c.denom()))));
        let mut factor = Rational::new(den_lcm, num_gcd);
        if lc.is_negative() {
            factor = -factor;
        }
        self.scale(&factor)
    }

    /// Renders with the given variable names.
    pub fn render(&self, names: &[String]) -> String {
        assert_eq!(names.len(), self.nvars);
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let a = c.abs();
            let mut factors: Vec<String> = Vec::new();
            if !a.is_one() || m.is_one() {
                factors.push(a.to_string());
            }
            for (i, &e) in m.exponents().iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(names[i].clone()),
                    _ => factors.push(format!("{}^{}", names[i], e)),
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }

    fn check_ring(&self, n: usize) -> Result<()> {
        if n != self.nvars {
            return Err(Error::VariableCount {
                expected: self.nvars,
                found: n,
            });
        }
        Ok(())
    }
}

/// Default variable names `x1, ..., xn`.
pub fn default_names(nvars: usize) -> Vec<String> {
    (1..=nvars).map(|i| format!("x{i}")).collect()
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&default_names(self.nvars)))
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl Add<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.clone() + rhs
    }
}

impl Add<&Polynomial> for Polynomial {
    type Output = Polynomial;
    fn add(mut self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars, "polynomials in different rings");
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
        self
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        let (mut big, small) = if self.terms.len() >= rhs.terms.len() { (self, rhs) } else { (rhs, self) };
        assert_eq!(big.nvars, small.nvars, "polynomials in different rings");
        for (m, c) in small.terms {
            big.add_term(m, c);
        }
        big
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(mut self) -> Polynomial {
        for c in self.terms.values_mut() {
            *c = -c.clone();
        }
        self
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -self.clone()
    }
}

impl Sub<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.clone() - rhs
    }
}

impl Sub<&Polynomial> for Polynomial {
    type Output = Polynomial;
    fn sub(mut self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars, "polynomials in different rings");
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c.clone());
        }
        self
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        self - &rhs
    }
}

impl Mul<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars, "polynomials in different rings");
        let mut out = Polynomial::zero(self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl Mul<&Polynomial> for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        &self * rhs
    }
}
