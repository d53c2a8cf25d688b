//! Library error type.

/// Errors produced by validation and dispatch throughout the library.
#[derive(Debug, thiserror::Error)]
pub enum AslError {
    /// A convex body failed construction-time validation.
    #[error("invalid body: {0}")]
    InvalidBody(String),
    /// A requested operation is not available for the given variant.
    #[error("unsupported: {0}")]
    Unsupported(String),
    /// An argument violated a documented precondition.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, AslError>;
