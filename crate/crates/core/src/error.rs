use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Failure modes shared by every evaluator in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument lies outside the region where the quantity is defined
    /// (pole, divergent series, non-unit residue, ...).
    #[error("domain error: {0}")]
    Domain(String),
    /// Malformed user input such as an unparsable rational literal.
    #[error("invalid input: {0}")]
    InvalidInput(String),
    /// A NaN or infinity appeared while evaluating the named operation.
    #[error("non-finite intermediate in {0}")]
    NonFinite(&'static str),
    /// Two evaluation routes of the same identity disagreed beyond their
    /// combined error bounds.
    #[error("identity check failed: {0}")]
    Inconsistent(String),
    #[error("{what} did not reach the requested accuracy within {limit} terms")]
    NoConvergence { what: &'static str, limit: usize },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }
}
