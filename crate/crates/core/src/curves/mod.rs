//! Concrete plane curves and pencils with exact rational coefficients, and
//! the constructions (Hessian, polar, line restriction, member through a
//! point) that feed the numeric oracle.

pub mod fixtures;
mod line;
mod pencil;
mod plane_curve;

pub use line::LineParam;
pub use pencil::CurvePencil;
pub use plane_curve::{PlaneCurve, Projectivity};

use thiserror::Error;

pub const X: &str = "x";
pub const Y: &str = "y";
pub const Z: &str = "z";
pub const XYZ: [&str; 3] = [X, Y, Z];

#[derive(Debug, Error)]
pub enum CurveError {
    #[error("polynomial is not homogeneous in x, y, z")]
    NotHomogeneous,
    #[error("curve polynomial is zero")]
    ZeroCurve,
    #[error("{0}")]
    Invalid(String),
    #[error("the two pencil generators are proportional")]
    ProportionalGenerators,
    #[error("point is a base point: every member passes through it")]
    BasePoint,
    #[error("polar of the point is identically zero")]
    ZeroPolar,
    #[error("restriction is identically zero: the line is a component")]
    LineIsComponent,
    #[error("random search exhausted its retry budget: {0}")]
    RetriesExhausted(String),
}
