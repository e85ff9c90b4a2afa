//! Exact computations on quasihomogeneous isolated complete intersection
//! singularities: validation, the isolatedness test, trivial derivations,
//! and the decision whether negative-degree derivations exist.

pub mod analysis;
pub mod counterexample;
pub mod derivation;
pub mod error;
pub mod groebner;
pub mod linalg;
pub mod poly;
pub mod report;
pub mod singularity;
pub mod weights;

pub use error::{Error, Result};
pub use poly::{parse_polynomial, Monomial, Polynomial};
pub use weights::{WeightSystem, WeightedDegree};

/// Exact rational coefficients.
pub type Rational = num_rational::BigRational;

// Guide chapters, compiled as doctests so their snippets stay correct.
#[cfg(doctest)]
#[doc = include_str!("../../../book/src/introduction.md")]
mod book_introduction {}
#[cfg(doctest)]
#[doc = include_str!("../../../book/src/polynomials.md")]
mod book_polynomials {}
#[cfg(doctest)]
#[doc = include_str!("../../../book/src/groebner.md")]
mod book_groebner {}
#[cfg(doctest)]
#[doc = include_str!("../../../book/src/derivations.md")]
mod book_derivations {}
#[cfg(doctest)]
#[doc = include_str!("../../../book/src/singularities.md")]
mod book_singularities {}
#[cfg(doctest)]
#[doc = include_str!("../../../book/src/negative-derivations.md")]
mod book_negative_derivations {}
#[cfg(doctest)]
#[doc = include_str!("../../../book/src/counterexample.md")]
mod book_counterexample {}
#[cfg(doctest)]
#[doc = include_str!("../../../book/src/cli.md")]
mod book_cli {}
