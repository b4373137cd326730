use thiserror::Error;

/// Errors produced across the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed text input. `line` is 1-based.
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// A caller violated an operation's precondition.
    #[error("contract violation: {0}")]
    Contract(String),

    /// An exact routine was asked to run beyond its configured size limit.
    #[error("{what} refused: n = {n} exceeds the limit of {limit}")]
    LimitExceeded {
        what: &'static str,
        n: usize,
        limit: usize,
    },

    /// A tree decomposition failed one of the three defining conditions.
    #[error("invalid tree decomposition (condition {condition}): {msg}")]
    TreeDecomposition { condition: u8, msg: String },

    /// A randomized construction exhausted its retry budget.
    #[error("{what} failed after {attempts} attempts: {detail}")]
    Exhausted {
        what: &'static str,
        attempts: usize,
        detail: String,
    },

    /// A constructed artifact failed its own verification; this is a bug.
    #[error("internal verification failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }

    pub(crate) fn contract(msg: impl Into<String>) -> Self {
        Error::Contract(msg.into())
    }
}
