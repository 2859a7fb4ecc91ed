use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Structurally invalid arguments (bad vertex id, out-of-range parameter).
    #[error("invalid input: {0}")]
    Input(String),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    /// A size or work guard was exceeded; no approximate answer is given.
    #[error("capacity exceeded in {what}: {actual} > limit {limit}")]
    Capacity {
        what: &'static str,
        limit: u64,
        actual: u64,
    },

    #[error("time budget exhausted in {0}")]
    Timeout(&'static str),
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: msg.into(),
        }
    }

    pub(crate) fn capacity(what: &'static str, limit: usize, actual: usize) -> Self {
        Error::Capacity {
            what,
            limit: limit as u64,
            actual: actual as u64,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
