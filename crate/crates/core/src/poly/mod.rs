//! Sparse polynomials over the rationals.

mod matrix;
mod monomial;
mod parse;
mod polynomial;

pub use matrix::{determinant, determinant_with_bound, exact_quotient, DEFAULT_MAX_DETERMINANT_SIZE};
pub use monomial::{monomials_of_weighted_degree, Monomial};
pub use parse::parse_polynomial;
pub use polynomial::{default_names, Polynomial};

pub(crate) use monomial::revlex;
