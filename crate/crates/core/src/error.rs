use thiserror::Error;

/// Errors raised by the library. Every variant is a rejection of invalid input
/// or of a violated precondition; nothing is retried or recovered internally.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid Dynkin type {family}{rank}")]
    InvalidType { family: String, rank: usize },

    #[error("Weyl group of order {order} exceeds the limit {limit}")]
    GroupTooLarge { order: u64, limit: u64 },

    #[error("invalid weight: {0}")]
    InvalidWeight(String),

    #[error("invalid word: {0}")]
    InvalidWord(String),

    #[error("invalid index poset: {reason}")]
    InvalidIndexPoset { reason: String },

    #[error("index poset is not tau-standard: {0}")]
    NotTauStandard(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("invalid LS-path: {0}")]
    InvalidPath(String),

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("interpolation grid too small: need total degree up to {required}, got {given}")]
    GridTooSmall { required: usize, given: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
