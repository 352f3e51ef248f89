use thiserror::Error;

/// Errors surfaced by every fallible operation in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Input refers to something outside the object's ground set, or the
    /// object itself is malformed (e.g. a base family violating exchange).
    #[error("domain error: {0}")]
    Domain(String),
    /// A documented precondition of the operation does not hold.
    #[error("precondition failed: {0}")]
    Precondition(String),
    /// The instance is larger than the configured enumeration capacity.
    #[error("capacity exceeded: {what} has size {size}, limit is {limit}")]
    Capacity {
        what: &'static str,
        size: usize,
        limit: usize,
    },
    /// Malformed input text.
    #[error("parse error: {0}")]
    Parse(String),
    /// A witness or certificate failed its validator.
    #[error("validation failed: {0}")]
    Validation(String),
    /// An invariant that the construction guarantees was found broken.
    #[error("internal invariant broken: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn pre(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub(crate) fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }

    /// Prefix the message with where the failure happened. Capacity errors
    /// keep their structured form.
    pub fn context(self, ctx: &str) -> Self {
        match self {
            Error::Domain(m) => Error::Domain(format!("{ctx}: {m}")),
            Error::Precondition(m) => Error::Precondition(format!("{ctx}: {m}")),
            Error::Parse(m) => Error::Parse(format!("{ctx}: {m}")),
            Error::Validation(m) => Error::Validation(format!("{ctx}: {m}")),
            Error::Internal(m) => Error::Internal(format!("{ctx}: {m}")),
            cap @ Error::Capacity { .. } => cap,
        }
    }
}
