use thiserror::Error;

use crate::graph::Vertex;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid vertex {vertex:?} for n = {n}")]
    InvalidVertex { vertex: [u32; 3], n: u32 },

    #[error("rank {rank} out of range for n = {n} (vertex count {count})")]
    RankOutOfRange { rank: u64, n: u32, count: u64 },

    #[error("construction undefined: {0}")]
    ConstructionUndefined(String),

    #[error("cardinality {l} unreachable: {reason}")]
    UnreachableCardinality { l: u64, reason: String },

    #[error("vertex set is not independent")]
    NotIndependent,

    /// An independent set that does not split into type-1/2/3 blocks.
    #[error("independent set has no type-1/2/3 decomposition; offending vertices: {vertices:?}")]
    DecompositionFailed { vertices: Vec<Vertex> },

    #[error("no exact independence number cached for n = {0}")]
    MissingExactAlpha(u32),

    /// A closed-form count disagreed with a direct count, or a structural
    /// check failed on a built object.
    #[error("invariant violation: {0}")]
    InvariantViolation(String),

    #[error("set file line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
