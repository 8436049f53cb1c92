use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unsupported Dynkin type {family}{rank}")]
    UnsupportedType { family: char, rank: usize },

    #[error("invalid orientation: {0}")]
    InvalidOrientation(String),

    #[error("vertex {vertex} is frozen and cannot be mutated")]
    FrozenMutation { vertex: usize },

    #[error("vertex {vertex} out of range (quiver has {size} vertices)")]
    VertexOutOfRange { vertex: usize, size: usize },

    #[error("vertex {vertex} is neither a sink nor a source")]
    NotSinkOrSource { vertex: usize },

    #[error("{0} is not a root")]
    NotARoot(String),

    #[error("division is not exact: {0}")]
    InexactDivision(String),

    #[error("exploration budget of {budget} exceeded")]
    BudgetExceeded { budget: usize },

    #[error("configuration is not admissible: {0}")]
    NotAdmissible(String),

    #[error("mesh category window too small: {0}")]
    WindowTooSmall(String),

    #[error("internal consistency check failed: {0}")]
    Internal(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("integer overflow in {0}")]
    Overflow(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
