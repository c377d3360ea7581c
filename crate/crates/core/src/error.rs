use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// An argument lies outside the domain where the operation is defined.
    #[error("parameter out of domain: {0}")]
    Domain(String),

    /// Coefficient or zero data does not reach far enough.
    #[error("incomplete data: {0}")]
    Incomplete(String),

    /// A quadrature or series did not reach the requested accuracy.
    #[error("numerical failure in {what}: achieved error {achieved:e}")]
    Numeric { what: String, achieved: f64 },

    #[error("overflow: {0}")]
    Overflow(String),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// A required relation between the inputs does not hold.
    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("resource limit: {0}")]
    Resource(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn incomplete(msg: impl Into<String>) -> Self {
        Error::Incomplete(msg.into())
    }
}
