use thiserror::Error;

/// Errors raised by the exact and high-precision kernels.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("mismatched quadratic radicands: {left} vs {right}")]
    RadicandMismatch { left: u64, right: u64 },

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("prime sieve too small: need primes up to {needed}, sieve limit is {limit}")]
    SieveCapacity { needed: u64, limit: u64 },

    #[error("{quantity} is not an integer after exact arithmetic (n = {n})")]
    NonInteger { quantity: &'static str, n: u64 },

    #[error("not applicable: {0}")]
    NotApplicable(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
