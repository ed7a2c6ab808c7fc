//! Numerical confirmation of the contact counts on concrete curves and
//! pencils. Elimination is exact down to one variable; floating point
//! enters only at univariate root extraction, and every extracted
//! configuration is verified against the defining equations before it is
//! counted.

mod bitangents;
mod counts;
mod eliminate;
mod numutil;
mod roots;
mod stretch;

pub use bitangents::{count_bitangents_quartic, is_bitangent_line, BitangentCount, BitangentLine};
pub use counts::{
    count_flex_points_on_line, count_flexes, count_nodal_members, count_tangent_members,
    count_tangents_from_point, flex_points_on_line, tangent_members_on_line,
};
pub use eliminate::{random_projectivity, residual_at};
pub use roots::{root_clusters, root_clusters_exact, ComplexPoly, RootCluster};
pub use stretch::{count_bitangent_lines_through_point, count_hyperflexes_quartic_pencil, StretchOutcome};

use thiserror::Error;

/// Tolerances, retry budget and seed for the numeric oracle. Counts are
/// deterministic given the configuration.
#[derive(Clone, Debug)]
pub struct OracleConfig {
    pub seed: u64,
    /// Coefficient height for randomized fixtures.
    pub height: u32,
    /// Two roots closer than this (after normalization) belong to one
    /// cluster.
    pub cluster_radius: f64,
    /// Residual bound for accepting a configuration as a genuine solution.
    pub residual_tol: f64,
    /// Retry budget for degenerate projections, lines or pencils.
    pub retries: u32,
    /// Iteration cap for the simultaneous root refinement.
    pub max_iterations: u32,
    /// Wall-clock budget (seconds) for the stretch-tier eliminations.
    pub stretch_budget_secs: u64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            seed: 1,
            height: 10,
            cluster_radius: 1e-6,
            residual_tol: 1e-8,
            retries: 6,
            max_iterations: 400,
            stretch_budget_secs: 420,
        }
    }
}

impl OracleConfig {
    pub fn with_seed(seed: u64) -> Self {
        OracleConfig {
            seed,
            ..OracleConfig::default()
        }
    }
}

#[derive(Debug, Error)]
pub enum OracleError {
    #[error("root refinement did not converge within the iteration budget")]
    NonConvergence,
    #[error("polynomial is too ill-scaled for double-precision extraction")]
    IllScaled,
    #[error("degenerate configuration persisted after {0} retries: {1}")]
    RetriesExhausted(u32, String),
    #[error("input fails a precondition: {0}")]
    Precondition(String),
    #[error(transparent)]
    Curve(#[from] crate::curves::CurveError),
    #[error(transparent)]
    Exact(#[from] crate::exact::ExactError),
}
