use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator vanishes at the chosen point")]
    VanishingDenominator,
    #[error("parameters a and q must both be nonzero")]
    DegenerateParameters,
    #[error("{0} is not a prime in the supported range")]
    NotPrime(u64),
    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("bound exceeded: {0}")]
    BoundExceeded(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, AlgebraError>;
