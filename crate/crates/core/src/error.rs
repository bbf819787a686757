use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Closure enumeration would exceed the configured order cap.
    #[error("group order exceeds the cap of {cap} elements")]
    SizeLimit { cap: usize },

    #[error("invalid input: {0}")]
    Input(String),

    /// A well-formed request outside an operation's domain.
    #[error("domain error: {0}")]
    Domain(String),

    #[error("cannot construct group: {0}")]
    Construction(String),

    #[error("syntax error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },

    /// An algorithmic postcondition failed. Indicates a bug.
    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn construction(msg: impl Into<String>) -> Self {
        Error::Construction(msg.into())
    }

    pub(crate) fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }
}
