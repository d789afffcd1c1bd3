use thiserror::Error;

/// Errors produced by the decomposition engine and the combinatorial layers on top of it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("partition too long for rank: length {length} exceeds {max} for {group}")]
    PartitionTooLong { group: String, length: usize, max: usize },

    #[error("invalid group: {0}")]
    InvalidGroup(String),

    #[error("invalid weight: {0}")]
    InvalidWeight(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("not a true character: {0}")]
    NotTrueCharacter(String),

    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),

    #[error("division check failed: {0}")]
    Divisibility(String),

    #[error("dimension bookkeeping violated: {0}")]
    Bookkeeping(String),

    #[error("symplectic modification not implemented; use oracle ({0})")]
    SymplecticModification(String),

    #[error("orthogonal modification beyond implemented family; use oracle ({0})")]
    OrthogonalModification(String),

    #[error("incompatible operands: {0}")]
    Incompatible(String),

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    #[error("unknown suite: {0}")]
    UnknownSuite(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
