use thiserror::Error;

/// Errors reported by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// A contract violation: invalid parameters, mismatched ambient spaces,
    /// out-of-range arguments.
    #[error("parameter error: {0}")]
    Param(String),

    /// A size limit was exceeded (ground-set cap, vertex cap, or a count
    /// that overflows u64).
    #[error("size error: {0}")]
    Size(String),

    /// A family file could not be parsed.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn param_err<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Param(msg.into()))
}

pub(crate) fn size_err<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Size(msg.into()))
}
