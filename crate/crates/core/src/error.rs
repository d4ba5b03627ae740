use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid root system: {0}")]
    InvalidRootSystem(String),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("Weyl group enumeration exceeded the cap of {cap} elements")]
    EnumerationCap { cap: usize },

    #[error("weight is not dominant integral on index {index} (value {value}); the Levi module would be infinite-dimensional")]
    NotDominantIntegral { index: usize, value: String },

    #[error("parabolic index {index} is not in J_lambda (lambda(h_{index}) = {value})")]
    ParabolicNotInJLambda { index: usize, value: String },

    #[error("polyhedron size cap exceeded: {0}")]
    PolyhedronCap(String),

    #[error("polyhedron is not pointed (contains a line)")]
    NotPointed,

    #[error("{0} is not a vertex of the polyhedron")]
    NotAVertex(String),

    #[error("Weyl character formula hypothesis fails: {0}")]
    WcfHypothesis(String),

    #[error("oracle depth {depth} exceeds the configured cap {cap}")]
    OracleDepth { depth: u32, cap: u32 },

    /// Something the mathematics guarantees did not happen. Always a bug.
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
