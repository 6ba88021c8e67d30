use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Result would exceed the supported register size.
    #[error("capacity exceeded: {0}")]
    Capacity(String),
    /// Bad call-site argument (index out of range, dimension mismatch, ...).
    #[error("invalid argument: {0}")]
    Argument(String),
    /// Input data violates a domain invariant (normalization, hermiticity, ...).
    #[error("validation failed: {0}")]
    Validation(String),
    #[error("numeric failure: {message} (residual {residual:e})")]
    Numeric { message: String, residual: f64 },
}

impl Error {
    pub(crate) fn argument(msg: impl Into<String>) -> Self {
        Error::Argument(msg.into())
    }

    pub(crate) fn validation(msg: impl Into<String>) -> Self {
        Error::Validation(msg.into())
    }

    /// True for errors caused by the caller's input rather than by numerics.
    pub fn is_input_error(&self) -> bool {
        !matches!(self, Error::Numeric { .. })
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
