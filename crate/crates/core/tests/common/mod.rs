//! Seeded generators and independent oracles shared by the integration tests.
#![allow(dead_code)]

use negder::groebner::GbConfig;
use negder::poly::{default_names, monomials_of_weighted_degree};
use negder::singularity::{is_normal_icis_with, validate_system, SingularitySystem};
use negder::{parse_polynomial, Monomial, Polynomial, Rational, WeightSystem};
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn int(k: i64) -> Rational {
    Rational::from_integer(k.into())
}

pub fn nonzero_coeff(rng: &mut impl Rng) -> Rational {
    let k = rng.gen_range(1..=5i64);
    int(if rng.gen_bool(0.5) { k } else { -k })
}

pub fn poly(text: &str, n: usize) -> Polynomial {
    parse_polynomial(text, &default_names(n)).unwrap()
}

/// Random polynomial with small exponents and coefficients, not homogeneous.
pub fn random_polynomial(rng: &mut impl Rng, n: usize, terms: usize, max_exp: u32) -> Polynomial {
    Polynomial::from_terms(
        n,
        (0..terms).map(|_| {
            let e = (0..n).map(|_| rng.gen_range(0..=max_exp)).collect();
            (Monomial::new(e), nonzero_coeff(rng))
        }),
    )
}

/// All monomials of weighted degree `degree` and order at least `min_order`,
/// each with a random coefficient in `-3..=3`.
pub fn random_quasihomogeneous(rng: &mut impl Rng, w: &[u32], degree: u64, min_order: u64) -> Polynomial {
    let terms: Vec<(Monomial, Rational)> = monomials_of_weighted_degree(w, degree)
        .into_iter()
        .filter(|m| m.total_degree() >= min_order)
        .map(|m| (m, int(rng.gen_range(-3..=3))))
        .collect();
    Polynomial::from_terms(w.len(), terms)
}

/// Like [`random_quasihomogeneous`] but keeps each monomial with
/// probability `density`, but always keeps the pure powers and the
/// monomials `x_i^a x_j` that an isolated singularity needs.
pub fn random_sparse_quasihomogeneous(
    rng: &mut impl Rng,
    w: &[u32],
    degree: u64,
    min_order: u64,
    density: f64,
) -> Polynomial {
    let mut terms = Vec::new();
    for m in monomials_of_weighted_degree(w, degree) {
        if m.total_degree() < min_order {
            continue;
        }
        let support = m.support().count();
        let near_pure = support == 1 || (support == 2 && m.exponents().contains(&1));
        if near_pure || rng.gen_bool(density) {
            terms.push((m, nonzero_coeff(rng)));
        }
    }
    Polynomial::from_terms(w.len(), terms)
}

/// Non-increasing weight tuples of length `n` with entries in `1..=max`.
pub fn weight_grid(n: usize, max: u32) -> Vec<Vec<u32>> {
    fn go(n: usize, cap: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for v in (1..=cap).rev() {
            prefix.push(v);
            go(n, v, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, max, &mut Vec::new(), &mut out);
    out
}

/// One attempt at a graded system with the given weights: `t` random
/// equations of degrees drawn from `degrees`. `None` if the draw is
/// degenerate or fails validation.
pub fn try_system(
    rng: &mut impl Rng,
    w: &[u32],
    t: usize,
    degrees: &[u64],
    min_order: u64,
) -> Option<SingularitySystem> {
    try_system_d(rng, w, t, degrees, min_order, 0.2)
}

pub fn try_system_d(
    rng: &mut impl Rng,
    w: &[u32],
    t: usize,
    degrees: &[u64],
    min_order: u64,
    density: f64,
) -> Option<SingularitySystem> {
    let mut g = Vec::with_capacity(t);
    for _ in 0..t {
        let p = *degrees.choose(rng)?;
        let f = random_sparse_quasihomogeneous(rng, w, p, min_order, density);
        if f.is_zero() {
            return None;
        }
        g.push(f);
    }
    validate_system(&g, &WeightSystem::new(w.to_vec()).ok()?).ok()
}

/// Keeps drawing until a normal ICIS appears, at most `attempts` times.
/// Budget overruns count as failed draws.
pub fn sample_normal_icis(
    rng: &mut impl Rng,
    w: &[u32],
    t: usize,
    degrees: &[u64],
    min_order: u64,
    attempts: usize,
    config: &GbConfig,
) -> Option<SingularitySystem> {
    (0..attempts).find_map(|_| {
        let s = try_system(rng, w, t, degrees, min_order)?;
        matches!(is_normal_icis_with(&s, config), Ok(true)).then_some(s)
    })
}

/// Dense rational vector of a polynomial over a fixed monomial list.
fn coords(p: &Polynomial, index: &std::collections::HashMap<Monomial, usize>) -> Option<Vec<Rational>> {
    let mut v = vec![Rational::zero(); index.len()];
    for (m, c) in p.terms() {
        v[*index.get(m)?] = c.clone();
    }
    Some(v)
}

/// Row reduction written independently of the library: returns the pivot
/// rows of an echelon form.
pub fn echelon(mut rows: Vec<Vec<Rational>>) -> Vec<(usize, Vec<Rational>)> {
    let mut done: Vec<(usize, Vec<Rational>)> = Vec::new();
    for mut r in rows.drain(..) {
        for (col, pr) in &done {
            if !r[*col].is_zero() {
                let f = r[*col].clone();
                for (x, y) in r.iter_mut().zip(pr) {
                    *x -= &f * y;
                }
            }
        }
        if let Some(col) = r.iter().position(|x| !x.is_zero()) {
            let inv = Rational::one() / &r[col];
            r.iter_mut().for_each(|x| *x *= &inv);
            for (_, other) in done.iter_mut() {
                if !other[col].is_zero() {
                    let f = other[col].clone();
                    for (x, y) in other.iter_mut().zip(&r) {
                        *x -= &f * y;
                    }
                }
            }
            done.push((col, r));
        }
    }
    done
}

/// Membership of a homogeneous `f` (standard grading) in the ideal of
/// homogeneous `gens`, decided in the single degree of `f` by spanning all
/// products `monomial * generator`.
pub fn in_ideal_by_linear_algebra(gens: &[Polynomial], f: &Polynomial) -> bool {
    if f.is_zero() {
        return true;
    }
    let n = f.nvars();
    let deg = f.total_degree().unwrap();
    let ones = vec![1u32; n];
    let mons = monomials_of_weighted_degree(&ones, deg);
    let index: std::collections::HashMap<Monomial, usize> =
        mons.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
    let mut rows = Vec::new();
    for g in gens.iter().filter(|g| !g.is_zero()) {
        let dg = g.total_degree().unwrap();
        if dg > deg {
            continue;
        }
        for m in monomials_of_weighted_degree(&ones, deg - dg) {
            rows.push(coords(&g.mul_monomial(&m), &index).unwrap());
        }
    }
    let ech = echelon(rows);
    let mut v = coords(f, &index).unwrap();
    for (col, r) in &ech {
        if !v[*col].is_zero() {
            let c = v[*col].clone();
            for (x, y) in v.iter_mut().zip(r) {
                *x -= &c * y;
            }
        }
    }
    v.iter().all(Zero::is_zero)
}

/// Hand-picked systems of several shapes, as `(equations, weights)`.
pub fn named_corpus() -> Vec<(Vec<Polynomial>, Vec<u32>)> {
    let sys = |eqs: &[&str], w: &[u32]| (eqs.iter().map(|e| poly(e, w.len())).collect(), w.to_vec());
    vec![
        sys(&["x1^2 + x2^2 + x3^2"], &[1, 1, 1]),
        sys(&["x1^2 + x2^3 + x3^5"], &[15, 10, 6]),
        sys(&["x1^2 + x2^3 + x3^4"], &[6, 4, 3]),
        sys(&["x1^2 + x2^2*x3 + x3^4"], &[4, 3, 2]),
        sys(&["x1^2 + x2^2*x3 + x3^3"], &[3, 2, 2]),
        sys(&["x1^3 + x2^3 + x3^3"], &[1, 1, 1]),
        sys(&["x1^3 + x2^3 + x3^3 + x4^3"], &[1, 1, 1, 1]),
        sys(&["x1*x2 + x3^2"], &[1, 1, 1]),
        sys(&["x1^2 + x2^2 + x3^2 + x4^2", "x1^2 + 2*x2^2 + 3*x3^2 + 4*x4^2"], &[1, 1, 1, 1]),
        sys(&["x1^2 + x2^2 + x3^2 + x4^2 + x5^2", "x1^2 + 2*x2^2 + 3*x3^2 + 4*x4^2 + 5*x5^2"], &[1, 1, 1, 1, 1]),
        sys(&["x1^3 + x2^3 + x3^3 + x4^3", "x1^3 + 2*x2^3 + 3*x3^3 + 4*x4^3"], &[1, 1, 1, 1]),
        sys(&["x1^2 + x2^3 + x3^3 + x4^6", "x2^3 - x3^3 + x4^6"], &[3, 2, 2, 1]),
        sys(&["x1*x4 + x2*x5 + x3^2 - x4^5", "x1*x5 + x2*x6 + x3^2 + x6^5"], &[8, 8, 5, 2, 2, 2]),
        sys(&["x1^2 + 2*x1*x2^3", "x2^2"], &[3, 1]),
        sys(&["x1^2", "x2^3"], &[3, 2]),
        sys(&["x1^2 + x2^2", "x1*x2"], &[1, 1]),
        sys(&["x1^2 + x2^3"], &[3, 2]),
    ]
}
