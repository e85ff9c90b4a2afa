//! Buchberger's algorithm on content-free integer polynomials.
//!
//! Pairs are selected by the sugar strategy and pruned with the
//! Gebauer–Möller criteria. Reductions are fraction-free: to cancel a term
//! `c*m` against a reducer with leading term `a*M`, the working polynomial is
//! replaced by `(a/g)*f - (c/g)*(m/M)*reducer` with `g = gcd(a, c)`.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::order::MonomialOrder;
use crate::error::{Error, Result};
use crate::poly::{Monomial, Polynomial};
use crate::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Mon {
    pub deg: u64,
    pub exps: Box<[u32]>,
}

impl Mon {
    fn new(order: &MonomialOrder, exps: Box<[u32]>) -> Self {
        Mon {
            deg: order.degree(&exps),
            exps,
        }
    }

    fn divides(&self, other: &Mon) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    fn mul(&self, other: &Mon) -> Mon {
        Mon {
            deg: self.deg + other.deg,
            exps: self.exps.iter().zip(other.exps.iter()).map(|(a, b)| a + b).collect(),
        }
    }

    fn div(&self, other: &Mon) -> Mon {
        Mon {
            deg: self.deg - other.deg,
            exps: self.exps.iter().zip(other.exps.iter()).map(|(a, b)| a - b).collect(),
        }
    }

    fn lcm(&self, other: &Mon, order: &MonomialOrder) -> Mon {
        Mon::new(
            order,
            self.exps.iter().zip(other.exps.iter()).map(|(&a, &b)| a.max(b)).collect(),
        )
    }

    fn coprime(&self, other: &Mon) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(&a, &b)| a == 0 || b == 0)
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }
}

/// Integer polynomial, terms sorted decreasingly by the engine's order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct IPoly {
    pub terms: Vec<(Mon, BigInt)>,
}

impl IPoly {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lm(&self) -> &Mon {
        &self.terms[0].0
    }

    fn lc(&self) -> &BigInt {
        &self.terms[0].1
    }

    fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divides by the content, making the leading coefficient positive.
    /// Returns the divisor used (negative when the sign flipped).
    fn make_primitive(&mut self) -> BigInt {
        if self.terms.is_empty() {
            return BigInt::one();
        }
        let mut g = self.content();
        if self.lc().is_negative() {
            g = -g;
        }
        if !g.is_one() {
            for (_, c) in self.terms.iter_mut() {
                *c /= &g;
            }
        }
        g
    }

    pub fn to_polynomial(&self, nvars: usize) -> Polynomial {
        Polynomial::from_terms(
            nvars,
            self.terms
                .iter()
                .map(|(m, c)| (Monomial::new(m.exps.to_vec()), Rational::from_integer(c.clone()))),
        )
    }
}

/// Converts a rational polynomial; returns the integer polynomial and the
/// positive factor it was multiplied by.
pub(crate) fn from_polynomial(p: &Polynomial, order: &MonomialOrder) -> (IPoly, BigInt) {
    let den = p.terms().fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
    let mut terms: Vec<(Mon, BigInt)> = p
        .terms()
        .map(|(m, c)| {
            let mon = Mon::new(order, m.exponents().into());
            (mon, c.numer() * (&den / c.denom()))
        })
        .collect();
    terms.sort_by(|a, b| cmp_mon(order, &b.0, &a.0));
    (IPoly { terms }, den)
}

#[inline]
fn cmp_mon(order: &MonomialOrder, a: &Mon, b: &Mon) -> Ordering {
    order.cmp_graded(a.deg, &a.exps, b.deg, &b.exps)
}

#[derive(Clone, Debug, Default, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct EngineStats {
    pub reduction_steps: u64,
    pub pairs_considered: u64,
    pub pairs_reduced: u64,
    pub zero_reductions: u64,
    pub basis_size: usize,
}

impl EngineStats {
    pub fn absorb(&mut self, other: &EngineStats) {
        self.reduction_steps += other.reduction_steps;
        self.pairs_considered += other.pairs_considered;
        self.pairs_reduced += other.pairs_reduced;
        self.zero_reductions += other.zero_reductions;
        self.basis_size = self.basis_size.max(other.basis_size);
    }
}

pub(crate) struct Engine<'a> {
    pub order: &'a MonomialOrder,
    pub budget: u64,
    pub stats: EngineStats,
}

impl<'a> Engine<'a> {
    pub fn new(order: &'a MonomialOrder, budget: u64) -> Self {
        Engine {
            order,
            budget,
            stats: EngineStats::default(),
        }
    }

    fn tick(&mut self) -> Result<()> {
        self.stats.reduction_steps += 1;
        if self.stats.reduction_steps > self.budget {
            return Err(Error::ResourceCap { budget: self.budget });
        }
        Ok(())
    }

    /// Full reduction of `f` modulo `basis` (only entries with `active`),
    /// up to a nonzero scalar. The result is primitive.
    pub fn reduce(&mut self, f: IPoly, basis: &[IPoly], active: &[bool]) -> Result<IPoly> {
        Ok(self.reduce_from(f, 0, basis, active, false)?.0)
    }

    /// Like [`Engine::reduce`], also returning `lambda` with
    /// `remainder = lambda * (f - sum h_i b_i)`.
    pub fn reduce_scaled(&mut self, f: IPoly, basis: &[IPoly], active: &[bool]) -> Result<(IPoly, Rational)> {
        let (r, lambda) = self.reduce_from(f, 0, basis, active, true)?;
        Ok((r, lambda.expect("tracked")))
    }

    /// Reduces the terms of `f` from position `start` on; earlier terms are
    /// only rescaled. Tracks the overall scale when asked to.
    fn reduce_from(
        &mut self,
        mut f: IPoly,
        start: usize,
        basis: &[IPoly],
        active: &[bool],
        track: bool,
    ) -> Result<(IPoly, Option<Rational>)> {
        let mut lambda = track.then(Rational::one);
        let mut i = start;
        let mut since_content = 0;
        while i < f.terms.len() {
            let reducer = basis
                .iter()
                .zip(active)
                .filter(|(_, &a)| a)
                .map(|(b, _)| b)
                .find(|b| b.lm().divides(&f.terms[i].0));
            let Some(g) = reducer else {
                i += 1;
                continue;
            };
            self.tick()?;
            let (m, c) = &f.terms[i];
            let shift = m.div(g.lm());
            let a = g.lc();
            let gcd = a.gcd(c);
            let mut fa = a / &gcd;
            let mut fc = c / &gcd;
            if fa.is_negative() {
                fa = -fa;
                fc = -fc;
            }
            // new f = fa * f - fc * shift * g; the term at position i cancels.
            let mut out: Vec<(Mon, BigInt)> = Vec::with_capacity(f.terms.len() + g.terms.len());
            let scale = !fa.is_one();
            let mut old = std::mem::take(&mut f.terms).into_iter();
            for _ in 0..i {
                let (mm, cc) = old.next().unwrap();
                out.push((mm, if scale { cc * &fa } else { cc }));
            }
            old.next();
            let mut rest = old.peekable();
            let mut sub = g.terms[1..].iter().map(|(gm, gc)| (gm.mul(&shift), gc * &fc)).peekable();
            loop {
                let ord = match (rest.peek(), sub.peek()) {
                    (None, None) => break,
                    (Some(_), None) => Ordering::Greater,
                    (None, Some(_)) => Ordering::Less,
                    (Some(x), Some(y)) => cmp_mon(self.order, &x.0, &y.0),
                };
                match ord {
                    Ordering::Greater => {
                        let (mm, cc) = rest.next().unwrap();
                        out.push((mm, if scale { cc * &fa } else { cc }));
                    }
                    Ordering::Less => {
                        let (mm, cc) = sub.next().unwrap();
                        out.push((mm, -cc));
                    }
                    Ordering::Equal => {
                        let (mm, cc) = rest.next().unwrap();
                        let (_, sc) = sub.next().unwrap();
                        let v = if scale { cc * &fa } else { cc } - sc;
                        if !v.is_zero() {
                            out.push((mm, v));
                        }
                    }
                }
            }
            f.terms = out;
            if let (true, Some(l)) = (scale, lambda.as_mut()) {
                *l *= Rational::from_integer(fa);
            }
            since_content += 1;
            // Coefficients grow by a factor per step, so keep them primitive.
            if since_content >= 4 || f.terms.len() > 64 {
                since_content = 0;
                let g = f.content();
                if !g.is_zero() && !g.is_one() {
                    for (_, c) in f.terms.iter_mut() {
                        *c /= &g;
                    }
                    if let Some(l) = lambda.as_mut() {
                        *l /= Rational::from_integer(g);
                    }
                }
            }
        }
        let g = f.make_primitive();
        if let Some(l) = lambda.as_mut() {
            *l /= Rational::from_integer(g);
        }
        Ok((f, lambda))
    }

    fn spoly(&self, f: &IPoly, g: &IPoly) -> IPoly {
        let lcm = f.lm().lcm(g.lm(), self.order);
        let sf = lcm.div(f.lm());
        let sg = lcm.div(g.lm());
        let gcd = f.lc().gcd(g.lc());
        let cf = g.lc() / &gcd;
        let cg = f.lc() / &gcd;
        let mut acc: std::collections::BTreeMap<Box<[u32]>, (Mon, BigInt)> = Default::default();
        let mut push = |m: Mon, c: BigInt| {
            let e = acc.entry(m.exps.clone()).or_insert((m, BigInt::zero()));
            e.1 += c;
        };
        for (m, c) in &f.terms[1..] {
            push(m.mul(&sf), c * &cf);
        }
        for (m, c) in &g.terms[1..] {
            push(m.mul(&sg), -(c * &cg));
        }
        let mut terms: Vec<(Mon, BigInt)> = acc.into_values().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| cmp_mon(self.order, &b.0, &a.0));
        IPoly { terms }
    }

    /// Reduced Gröbner basis of the given integer polynomials.
    pub fn groebner(&mut self, input: Vec<IPoly>) -> Result<Vec<IPoly>> {
        let mut polys: Vec<IPoly> = Vec::new();
        let mut sugar: Vec<u64> = Vec::new();
        let mut active: Vec<bool> = Vec::new();
        let mut pairs: Vec<Pair> = Vec::new();

        let mut input: Vec<IPoly> = input.into_iter().filter(|p| !p.is_zero()).collect();
        input.sort_by(|a, b| cmp_mon(self.order, a.lm(), b.lm()));
        for p in input {
            let s = p.terms.iter().map(|(m, _)| m.deg).max().unwrap_or(0);
            let mut h = self.reduce(p, &polys, &active)?;
            if h.is_zero() {
                continue;
            }
            h.make_primitive();
            if h.lm().is_one() {
                return Ok(vec![h]);
            }
            self.update(&mut polys, &mut sugar, &mut active, &mut pairs, h, s);
        }

        while let Some(pair) = self.select(&mut pairs) {
            self.stats.pairs_reduced += 1;
            let s = self.spoly(&polys[pair.i], &polys[pair.j]);
            let h = self.reduce(s, &polys, &active)?;
            if h.is_zero() {
                self.stats.zero_reductions += 1;
                continue;
            }
            if h.lm().is_one() {
                return Ok(vec![h]);
            }
            self.update(&mut polys, &mut sugar, &mut active, &mut pairs, h, pair.sugar);
        }

        // Interreduce the minimal basis.
        let idx: Vec<usize> = (0..polys.len()).filter(|&i| active[i]).collect();
        let mut out = Vec::with_capacity(idx.len());
        for &i in &idx {
            let mut others = active.clone();
            others[i] = false;
            // the head is never reducible by the other minimal elements
            let (p, _) = self.reduce_from(polys[i].clone(), 1, &polys, &others, false)?;
            out.push(p);
        }
        out.sort_by(|a, b| cmp_mon(self.order, a.lm(), b.lm()));
        self.stats.basis_size = out.len();
        Ok(out)
    }

    fn select(&mut self, pairs: &mut Vec<Pair>) -> Option<Pair> {
        if pairs.is_empty() {
            return None;
        }
        let order = self.order;
        let best = pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                a.sugar
                    .cmp(&b.sugar)
                    .then_with(|| cmp_mon(order, &a.lcm, &b.lcm))
                    .then_with(|| (a.i, a.j).cmp(&(b.i, b.j)))
            })
            .map(|(k, _)| k)?;
        Some(pairs.swap_remove(best))
    }

    /// Gebauer–Möller update with the new element `h`.
    fn update(
        &mut self,
        polys: &mut Vec<IPoly>,
        sugar: &mut Vec<u64>,
        active: &mut Vec<bool>,
        pairs: &mut Vec<Pair>,
        h: IPoly,
        h_sugar: u64,
    ) {
        // Under lex, reduction can raise the total degree past the sugar.
        let h_sugar = h.terms.iter().map(|(m, _)| m.deg).fold(h_sugar, u64::max);
        let hk = polys.len();
        let hlm = h.lm().clone();
        let mut candidates: Vec<Pair> = (0..hk)
            .filter(|&i| active[i])
            .map(|i| {
                let lcm = polys[i].lm().lcm(&hlm, self.order);
                let s = (sugar[i] - polys[i].lm().deg).max(h_sugar - hlm.deg) + lcm.deg;
                Pair {
                    i,
                    j: hk,
                    lcm,
                    sugar: s,
                    coprime: polys[i].lm().coprime(&hlm),
                }
            })
            .collect();
        self.stats.pairs_considered += candidates.len() as u64;

        // Chain criterion among the new pairs: keep (i, h) unless some other
        // new pair's lcm properly divides its lcm; equal lcms keep one
        // representative, preferring a coprime pair.
        candidates.sort_by(|a, b| cmp_mon(self.order, &a.lcm, &b.lcm).then(b.coprime.cmp(&a.coprime)).then(a.i.cmp(&b.i)));
        let mut kept: Vec<Pair> = Vec::new();
        for c in candidates {
            if kept.iter().any(|k| k.lcm.divides(&c.lcm)) {
                continue;
            }
            kept.push(c);
        }
        // Product criterion.
        let new_pairs: Vec<Pair> = kept.into_iter().filter(|p| !p.coprime).collect();

        // Prune old pairs whose lcm is divisible by LM(h) strictly.
        pairs.retain(|p| {
            if !hlm.divides(&p.lcm) {
                return true;
            }
            let l1 = polys[p.i].lm().lcm(&hlm, self.order);
            let l2 = polys[p.j].lm().lcm(&hlm, self.order);
            l1 == p.lcm || l2 == p.lcm
        });
        pairs.extend(new_pairs);

        for i in 0..hk {
            if active[i] && hlm.divides(polys[i].lm()) {
                active[i] = false;
            }
        }
        polys.push(h);
        sugar.push(h_sugar);
        active.push(true);
    }
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Mon,
    sugar: u64,
    coprime: bool,
}
