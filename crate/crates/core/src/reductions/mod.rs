//! Instance generators for the hardness reductions.
//!
//! Set packing with sets of size below `m` maps to structural detection on
//! homogeneous degree-`m` polynomials ([`encode_set_packing`]); a homogeneous
//! degree-`m` system maps to zero-dimensional detection by adjoining every
//! monomial of degree `2m + 1` ([`elevate_to_zero_dim`]).

mod elevate;
mod encode;
mod packing;

pub use elevate::{elevate_to_zero_dim, monomials_of_degree};
pub use encode::{
    decode_selection, encode_set_packing, packing_witness_order, EncodingMap, PackingWitness,
};
pub use packing::{solve_set_packing_bruteforce, SetPackingInstance};
