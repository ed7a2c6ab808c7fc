//! Exact arithmetic layer: arbitrary-precision rationals, dense univariate
//! polynomials, sparse multivariate polynomials, resultants and subresultant
//! remainder sequences, fraction-free determinants, and the Macaulay
//! resultant of three ternary forms.
//!
//! Everything here is exact; no floating point enters at this layer.

mod macaulay;
mod matrix;
mod multipoly;
mod prs;
mod unipoly;

pub use macaulay::{pencil_discriminant, ternary_resultant};
pub use matrix::{det3, det_bareiss, det_bareiss_int, det_rational, det_unipoly_interpolated, interpolate};
pub use multipoly::MultiPoly;
pub use prs::{
    discriminant, principal_subresultants, resultant, resultant_bivariate, resultant_sylvester,
    subresultant_prs, sylvester_matrix, Coeff,
};
pub use unipoly::UniPoly;
pub(crate) use unipoly::format_rat;

use thiserror::Error;

/// Exact rational scalar used throughout.
pub type Rat = num_rational::BigRational;

/// Errors surfaced by the exact layer.
#[derive(Debug, Error)]
pub enum ExactError {
    #[error("polynomial has degree zero in the eliminated variable")]
    DegreeZero,
    #[error("leading coefficient degenerates: {0}")]
    DegenerateLeading(String),
    #[error("exact division failed (inputs are not divisible)")]
    Indivisible,
    #[error("{0}")]
    Invalid(String),
}

pub(crate) fn rat_i64(n: i64) -> Rat {
    Rat::from_integer(n.into())
}
