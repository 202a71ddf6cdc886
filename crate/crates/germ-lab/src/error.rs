//! Error type shared by the whole crate.

/// Errors produced by the exact-arithmetic operations.
///
/// Everything here is a contract violation of some kind: bad input,
/// 64-bit overflow, or an internal identity failing to hold (which
/// would mean a bug, never a rounding artifact; there is no floating
/// point anywhere in this crate).
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("internal inconsistency: {0}")]
    Inconsistency(String),

    #[error("degree {degree} exceeds the exhaustive enumeration cap {cap}")]
    DegreeCap { degree: usize, cap: usize },

    #[error("unknown verification suite `{0}`")]
    UnknownSuite(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub(crate) fn inconsistent(msg: impl Into<String>) -> Self {
        Error::Inconsistency(msg.into())
    }
}
