use thiserror::Error;

/// Errors produced by braidkit operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at token {token:?}: {reason}")]
    Parse { token: String, reason: String },

    #[error("generator index {index} out of range for {n} strands")]
    IndexOutOfRange { index: i64, n: usize },

    #[error("strand count mismatch: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },

    #[error("the subgroup generator has exponent sum zero")]
    ZeroExponent,

    #[error("resource limit of {limit} exceeded")]
    ResourceLimit { limit: usize },

    #[error("input commutes with the conjugating generator")]
    CommutingInput,

    #[error("invalid parameters: {0}")]
    Param(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
