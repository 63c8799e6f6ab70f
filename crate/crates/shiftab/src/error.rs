use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("rule {rule} violated at row {row}, column {col}")]
    RuleViolation { rule: &'static str, row: usize, col: usize },
    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),
    #[error("enumeration exceeded the ceiling of {0} objects")]
    CeilingExceeded(u64),
    #[error("pole at zero while substituting into a negative power")]
    PoleAtZero,
    #[error("substitution leaves a non-integral coefficient")]
    NonIntegral,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("internal invariant broken: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
