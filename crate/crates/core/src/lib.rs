//! Exact verification engine for the contact invariants of pencils of plane
//! curves: degrees, classes and genera of the loci swept out by flexes,
//! bitangents, hyperflexes, flex bitangents and tritangents, recomputed as
//! exact polynomial identities in the symbolic degree `d`, together with a
//! numerical elimination oracle that confirms the counts on concrete random
//! curves and pencils at small degree.

pub mod chow;
pub mod curves;
pub mod exact;
pub mod invariants;
pub mod oracle;

pub use exact::{MultiPoly, Rat, UniPoly};
