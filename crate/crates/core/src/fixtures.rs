//! Hand-transcribed contraction sequences shipped with the crate.

use crate::certificate::{read_certificate, ContractionCertificate};

/// Seven-vertex worked example; width 2.
pub const EX7: &str = include_str!("../fixtures/ex7.cert");
/// Six-vertex graph with a 2-sequence.
pub const CASE15: &str = include_str!("../fixtures/case15.cert");
/// Six-vertex graph with a 1-sequence.
pub const CASE24: &str = include_str!("../fixtures/case24.cert");
/// The same graph as [`CASE24`] in edge-list form.
pub const CASE24_EDGES: &str = include_str!("../fixtures/case24.edges");

pub fn all() -> [(&'static str, &'static str); 3] {
    [("EX7", EX7), ("CASE15", CASE15), ("CASE24", CASE24)]
}

pub fn load(text: &str) -> ContractionCertificate {
    read_certificate(text).expect("bundled fixtures parse")
}
