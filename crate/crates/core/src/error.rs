use thiserror::Error;

/// Errors shared by every algorithm in the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// A brute-force routine refused an input above its cap.
    #[error("{what}: size {got} exceeds cap {cap}")]
    SizeCap { what: &'static str, got: usize, cap: usize },

    #[error("infeasible: {0}")]
    Infeasible(String),

    /// A runtime-checked invariant failed. Always a bug.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn arg(msg: impl Into<String>) -> Self {
        Error::Argument(msg.into())
    }

    pub(crate) fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }
}

pub(crate) fn check_cap(what: &'static str, got: usize, cap: usize) -> Result<()> {
    if got > cap {
        Err(Error::SizeCap { what, got, cap })
    } else {
        Ok(())
    }
}
