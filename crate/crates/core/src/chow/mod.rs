//! The three intersection-theoretic arenas: the Chow ring of the incidence
//! variety of points on lines, the Chow ring of the product of the dual
//! plane with a pencil, and the divisor lattice of the blown-up surface
//! swept out by tangency triples, with their degree maps, pairing, and the
//! genus formulas used to cross-check them.

mod psi;
mod surface;
mod yring;

pub use psi::PsiClass;
pub use surface::{plane_model_genus, SurfaceDivClass};
pub use yring::YClass;
