//! Twin-width of small graphs.
//!
//! [`Trigraph`] implements the black/red contraction semantics. On top of it
//! sit an exact solver ([`solver`]), a certificate format with a replaying
//! verifier ([`certificate`]), isomorphism-class enumeration with canonical
//! forms ([`enumerate`], [`canon`]), recognizers for graph classes with known
//! bounds ([`structure`]) and the census driver ([`census`]).
//!
//! The `parallel` feature (on by default) runs enumeration and census work on
//! rayon; without it everything runs sequentially with identical output.

pub mod canon;
pub mod census;
pub mod certificate;
pub mod enumerate;
pub mod fixtures;
pub mod io;
pub mod par;
pub mod solver;
pub mod structure;
pub mod trigraph;

pub use canon::{canonical_form, canonical_labeling, CanonicalKey};
pub use census::{census_max_tww, census_with, CensusError, CensusRecord, CensusReport};
pub use certificate::{
    read_certificate, record_certificate, replay, verify_certificate, write_certificate, CertificateError,
    ContractionCertificate, Failure, Verification,
};
pub use enumerate::{enumerate_graphs, EnumerationError};
pub use par::Execution;
pub use solver::{decide_tww, twin_width, SolveResult, SolveStats, Solver, SolverConfig};
pub use structure::{best_bound, make_named, recognize, BoundKind, NamedGraph, Rule, StructuralBound};
pub use trigraph::{ContractionStep, EdgeColor, Trigraph, TrigraphError, VertexLabel};
