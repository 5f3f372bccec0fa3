use thiserror::Error;

/// Engine-wide error type. Structural misuse (ring or order mismatch) is kept
/// separate from arithmetic failures so callers can abort with context.
#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero in GF({p})")]
    DivisionByZero { p: u64 },

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("ring mismatch: {0}")]
    RingMismatch(String),

    #[error("monomial order mismatch: {0}")]
    OrderMismatch(String),

    #[error("inhomogeneous input: {0}")]
    NotHomogeneous(String),

    #[error("zero polynomial not allowed: {0}")]
    ZeroInput(String),

    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },

    #[error("saturation did not stabilize within {cap} quotient steps")]
    SaturationCap { cap: usize },

    #[error("free resolution exceeded length cap {cap}")]
    ResolutionCap { cap: usize },

    #[error("no rational point found after {tries} slice attempts")]
    NoRationalPoint { tries: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("contract violation: {0}")]
    Contract(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),

    #[error("timeout: {0}")]
    Timeout(String),
}

pub type Result<T> = std::result::Result<T, Error>;
