use thiserror::Error;

/// Errors raised by the group, lattice and invariant computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("parse error: {0}")]
    Parse(String),

    /// A configured size ceiling was hit. Results are never truncated.
    #[error("{what} exceeds the configured ceiling of {limit}")]
    Resource { what: String, limit: u64 },

    /// A documented precondition of an operation does not hold.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// An internal cross-check failed. This signals either a bug or a
    /// counterexample to one of the identities the engine verifies.
    #[error("consistency check failed: {0}")]
    Consistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn resource(what: impl Into<String>, limit: u64) -> Self {
        Error::Resource {
            what: what.into(),
            limit,
        }
    }
}
