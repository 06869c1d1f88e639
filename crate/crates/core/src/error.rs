use thiserror::Error;

/// Errors raised by the library. Verification failures are never errors; they
/// are reported as data in the respective report types.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("ambient dimension mismatch: {0} vs {1}")]
    AmbientMismatch(usize, usize),

    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(String, String),

    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("element is not idempotent: {0}")]
    NotIdempotent(String),

    #[error("subspace is not a two-sided ideal")]
    NotAnIdeal,

    #[error("subspace is not a unital subalgebra")]
    NotASubalgebra,

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("search bound exceeded: {0}")]
    BoundExceeded(String),

    #[error("presentation rejected: {0}")]
    Presentation(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
