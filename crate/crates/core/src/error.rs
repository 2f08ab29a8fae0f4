use thiserror::Error;

/// Errors raised by graph construction, search and verification routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A request exceeds a hard or default size limit.
    #[error("capacity exceeded: {0}")]
    Capacity(String),
    /// Inputs violate an operation's precondition.
    #[error("invalid input: {0}")]
    Validation(String),
    /// A textual input (spec string, graph6 line, rational) could not be parsed.
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },
}

impl Error {
    pub(crate) fn validation(msg: impl Into<String>) -> Self {
        Error::Validation(msg.into())
    }

    pub(crate) fn capacity(msg: impl Into<String>) -> Self {
        Error::Capacity(msg.into())
    }

    pub(crate) fn parse(position: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            position,
            message: msg.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
