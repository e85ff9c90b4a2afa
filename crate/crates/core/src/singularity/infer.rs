use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::derivation::index_sets;
use crate::linalg::rref;
use crate::poly::Polynomial;
use crate::weights::WeightSystem;
use crate::Rational;

/// Positive weight systems making every polynomial quasihomogeneous.
///
/// The admissible weights form the positive part of a rational subspace.
/// The result lists its strictly positive extreme rays, and when there are
/// several of them also their sum and the sum biased toward each ray, so the
/// list samples the interior of the cone. Empty when no positive weight
/// works. Duplicates are removed; the order is deterministic.
pub fn infer_weights(g: &[Polynomial]) -> Vec<WeightSystem> {
    let Some(n) = g.first().map(Polynomial::nvars) else {
        return Vec::new();
    };
    if n == 0 {
        return Vec::new();
    }
    let mut rows = Vec::new();
    for p in g {
        assert_eq!(p.nvars(), n, "polynomials in different rings");
        let mut monos = p.monomials();
        let Some(first) = monos.next() else { continue };
        for m in monos {
            rows.push(
                (0..n)
                    .map(|i| Rational::from_integer(BigInt::from(m.exponent(i)) - BigInt::from(first.exponent(i))))
                    .collect(),
            );
        }
    }
    let basis = rref(rows, n).nullspace();
    let r = basis.len();
    if r == 0 {
        return Vec::new();
    }

    // Extreme rays of the cone: one-dimensional solutions after forcing
    // r - 1 coordinates to vanish.
    let mut rays: Vec<Vec<BigInt>> = Vec::new();
    for zeros in index_sets(n, r - 1) {
        let constraint: Vec<Vec<Rational>> = zeros
            .iter()
            .map(|&i| basis.iter().map(|b| b[i].clone()).collect())
            .collect();
        let kernel = rref(constraint, r).nullspace();
        if kernel.len() != 1 {
            continue;
        }
        let v: Vec<Rational> = (0..n)
            .map(|i| {
                kernel[0]
                    .iter()
                    .zip(&basis)
                    .fold(Rational::zero(), |acc, (c, b)| acc + c * &b[i])
            })
            .collect();
        let Some(ray) = primitive_nonnegative(&v) else { continue };
        if !rays.contains(&ray) {
            rays.push(ray);
        }
    }

    let sum = rays.iter().fold(vec![BigInt::zero(); n], |acc, ray| add(&acc, ray));
    let mut out: Vec<Vec<BigInt>> = rays.iter().filter(|r| is_positive(r)).cloned().collect();
    if rays.len() >= 2 && is_positive(&sum) {
        out.push(primitive(&sum));
        for ray in &rays {
            out.push(primitive(&add(&sum, ray)));
        }
    }
    let mut seen = Vec::new();
    for v in out {
        let Some(ws) = v.iter().map(ToPrimitive::to_u32).collect::<Option<Vec<u32>>>() else {
            continue;
        };
        if let Ok(w) = WeightSystem::new(ws) {
            if !seen.contains(&w) {
                seen.push(w);
            }
        }
    }
    seen
}

fn add(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn is_positive(v: &[BigInt]) -> bool {
    v.iter().all(Signed::is_positive)
}

fn primitive(v: &[BigInt]) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return v.to_vec();
    }
    v.iter().map(|x| x / &g).collect()
}

/// Integer multiple of `v` with coprime entries, sign-normalized to be
/// non-negative, or `None` if `v` is zero or has mixed signs.
fn primitive_nonnegative(v: &[Rational]) -> Option<Vec<BigInt>> {
    let has_pos = v.iter().any(Signed::is_positive);
    let has_neg = v.iter().any(Signed::is_negative);
    if has_pos == has_neg {
        return None;
    }
    let den = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v
        .iter()
        .map(|x| {
            let y = (x * Rational::from_integer(den.clone())).to_integer();
            if has_neg {
                -y
            } else {
                y
            }
        })
        .collect();
    Some(primitive(&ints))
}
