use thiserror::Error;

/// Errors raised by graph construction, permutation handling, partitions and
/// the exact linear algebra routines.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("size limit exceeded: {what} = {value}, allowed {min}..={max}")]
    SizeLimit {
        what: &'static str,
        value: usize,
        min: usize,
        max: usize,
    },
    #[error("invalid layer {layer} for hypercube of dimension {n}")]
    InvalidLayer { n: usize, layer: usize },
    #[error("domain error: {0}")]
    Domain(String),
    #[error("malformed graph: {0}")]
    MalformedGraph(String),
    #[error("degree mismatch: expected {expected}, got {actual}")]
    DegreeMismatch { expected: usize, actual: usize },
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("malformed partition: {0}")]
    MalformedPartition(String),
    #[error(
        "partition is not equitable: vertices {first} and {second} have different neighbor counts in cell {cell}"
    )]
    NotEquitable {
        first: usize,
        second: usize,
        cell: usize,
    },
    #[error("internal consistency failure: {0}")]
    Internal(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
