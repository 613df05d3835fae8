use alloc::boxed::Box;
use alloc::string::String;

/// Errors raised by the toolkit.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// A graph6 record could not be decoded.
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 {
        /// Byte offset into the record.
        offset: usize,
        /// What went wrong.
        reason: &'static str,
    },

    /// A graph failed its structural invariants.
    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    /// No fixture with this experiment id.
    #[error("unknown fixture experiment id {0}")]
    UnknownFixture(u32),

    /// An exhaustive or simulated computation would exceed its size guard.
    #[error("{what}: size {size} exceeds the limit of {limit}")]
    Capacity {
        /// The guarded operation.
        what: &'static str,
        /// Requested size.
        size: usize,
        /// Maximum supported size.
        limit: usize,
    },

    /// A precondition of an operation was violated.
    #[error("contract violation: {0}")]
    Contract(String),

    /// Operand sizes disagree.
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch {
        /// Expected size.
        expected: usize,
        /// Actual size.
        found: usize,
    },

    /// An optimizer objective failed.
    #[error("objective failed at iteration {iteration}: {source}")]
    Objective {
        /// Iteration index at which the objective failed.
        iteration: usize,
        /// Underlying error.
        source: Box<Error>,
    },
}

/// Result alias for this crate.
pub type Result<T, E = Error> = core::result::Result<T, E>;

pub(crate) fn contract(msg: impl Into<String>) -> Error {
    Error::Contract(msg.into())
}
