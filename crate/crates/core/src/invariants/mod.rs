//! Every named count, class, recursion and genus of the contact geometry of
//! a general pencil of degree-d plane curves, each computed by its own
//! derivation route so that independent routes can be cross-checked as
//! exact polynomial identities in the symbolic degree d.

mod classes;
mod formulas;
mod recursion;
mod table;

pub use classes::{
    bitangent_class_s, double_point_class, flex_class_s, pullback_m, pullback_q,
    pullback_tangent_y_c1, pushforward_s, tangent_bundle_y_c1,
};
pub use formulas::{
    bitangent_curve_pg, bitangent_curve_ramification, bitangent_line_degree,
    bitangent_line_genus, bitangent_point_degree, bitangent_point_pa, branch_curve_genus,
    contact_point_curve_degree, correspondence_coincidences, dual_degree, euler_surface,
    extra_node_prediction, flex_bitangent_degree, flex_curve_genus, flex_degrees,
    hurwitz_genus, hurwitz_genus_checked, hurwitz_ramification, hyperflex_degree,
    improper_multiplicities, incidence_dimension, inscribed_g12_count, nodal_fiber_count,
    plucker_bitangents, plucker_flexes, principal_parts_chern, salmon_claimed_formula,
    severi_cusp_count, tangency_cover_degree, tritangent_degree, BitangentLineRoute,
    BitangentPointGenusRoute, BitangentPointRoute, ImproperMultiplicities, TritangentRoute,
};
pub use recursion::{
    bitangent_recursion_increment, solve_parity_recursion, tritangent_recursion_increment,
    BitangentIncrement,
};
pub use table::{invariant_table, Derivation, FactoredPoly, InvariantId, InvariantRow};

use crate::exact::UniPoly;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum InvariantError {
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("exact divisibility failed for {0}")]
    Divisibility(String),
    #[error("{0} is not integer-valued at integer degrees")]
    NonIntegral(&'static str),
    #[error("recursion solution failed verification for {0}")]
    Recursion(&'static str),
}

/// The formal degree symbol d.
pub(crate) fn d() -> UniPoly {
    UniPoly::var()
}

pub(crate) fn ipoly(ascending: &[i64]) -> UniPoly {
    UniPoly::from_int_coeffs(ascending)
}
