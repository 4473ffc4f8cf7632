use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("operands live in different polynomial rings")]
    RingMismatch,
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("ring has no grading weights")]
    NoWeights,
    #[error("index {index} outside 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("module dimension {dim} exceeds cap {cap}")]
    CapExceeded { dim: usize, cap: usize },
    #[error("dimension audit failed: {0}")]
    AuditFailure(String),
    #[error("multiplicity {multiplicity} > 1 for component {label}")]
    MultiplicityViolation { label: String, multiplicity: usize },
    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
