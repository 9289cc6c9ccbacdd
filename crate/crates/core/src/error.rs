use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    IndexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },
    #[error("not a permutation of 0..{0}")]
    NotAPermutation(usize),
    #[error("graph is not a C0P-graph")]
    NotC0P,
    #[error("structure violation: {0}")]
    StructureViolation(String),
    #[error("witness construction failed: {0}")]
    ConstructionFailure(String),
    #[error("instance too large for brute force: n = {n} exceeds cap {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("invalid staircase spec: {0}")]
    SpecViolation(String),
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
