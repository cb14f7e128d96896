//! Exact multivariate polynomials over the rationals, weight term orders and
//! the text format.

mod monomial;
mod order;
mod parse;
mod polynomial;
mod system;

pub use monomial::Monomial;
pub use order::WeightOrder;
pub use parse::{parse_polynomial, parse_system};
pub use polynomial::{Polynomial, Term};
pub use system::PolySystem;

/// Coefficient field.
pub type Rational = num_rational::BigRational;
