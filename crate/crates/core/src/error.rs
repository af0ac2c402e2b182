use thiserror::Error;

use crate::face::{Face, Vertex};

pub type Result<T> = std::result::Result<T, Error>;

/// Input errors. Property failures (a complex that is not CM, an inequality
/// that does not hold) are reported through verdict types, never here.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex label {label} outside the allowed range 1..={cap}")]
    VertexCap { label: Vertex, cap: u32 },
    #[error("vertex {0} listed twice in one face")]
    DuplicateVertex(Vertex),
    #[error("{0} is not a face of the complex")]
    NotAFace(Face),
    #[error("{0} is not a facet of the complex")]
    NotAFacet(Face),
    #[error("complex is not pure")]
    NotPure,
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(isize, isize),
    #[error("invalid gluing: {0}")]
    InvalidGlue(String),
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
    #[error("coloring is not proper: {0}")]
    ImproperColoring(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("malformed input: {0}")]
    Parse(String),
}
