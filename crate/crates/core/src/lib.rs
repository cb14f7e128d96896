//! Gröbner basis detection with exact arithmetic.
//!
//! Given a finite set of polynomials, decide whether some term order (a
//! positive weight vector) makes the set a Gröbner basis, optionally of a
//! zero-dimensional ideal, and produce the witness order when it does.
//!
//! * [`poly`]: monomials, polynomials, weight orders, the text format.
//! * [`groebner`]: S-polynomials, reduction, the Buchberger test.
//! * [`order_solver`]: which leading-term selections a weight vector can realize.
//! * [`detect`]: the zero-dimensional, structural and brute-force detectors.
//! * [`reductions`]: set packing to structural detection and the
//!   zero-dimensional elevation, plus a brute-force set-packing solver.
//! * [`cli`]: the `gbd` command-line front end.

pub mod cli;
pub mod detect;
pub mod error;
pub mod groebner;
pub mod order_solver;
pub mod poly;
pub mod reductions;

pub use error::{Error, Result};
pub use poly::{Monomial, PolySystem, Polynomial, Rational, Term, WeightOrder};
