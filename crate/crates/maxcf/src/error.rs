use thiserror::Error;

/// Library-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid dimension: {0}")]
    InvalidDimension(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("out of domain: {0}")]
    OutOfDomain(String),

    #[error("model has no closed-form cdf")]
    MissingCdf,

    #[error("model has no quantile function")]
    MissingQuantile,

    #[error("model has no closed-form max-CF")]
    MissingClosedForm,

    #[error("contract violation: {0}")]
    ContractViolation(String),

    #[error("noisy evaluator: {0}")]
    NoisyEvaluator(String),

    #[error("empty grid")]
    EmptyGrid,

    #[error("instance too large: {got} support points exceeds cap {cap}; use w1_bounds instead")]
    SizeCapExceeded { got: usize, cap: usize },

    #[error("unsupported norm: {0}")]
    UnsupportedNorm(String),

    #[error("numeric failure in {what}: achieved error {achieved:.3e} above tolerance {tolerance:.3e}")]
    NumericFailure {
        what: String,
        achieved: f64,
        tolerance: f64,
    },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("serialization error: {0}")]
    Serde(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
