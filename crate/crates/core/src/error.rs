use thiserror::Error;

/// Errors raised by the lattice, group, code and polynomial pipelines.
///
/// The variants are coarse on purpose: the command-line front end maps
/// each one onto a distinct exit code.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// An input violates an operation's precondition.
    #[error("domain error: {0}")]
    Domain(String),
    /// A computation would exceed a configured size cap.
    #[error("capacity exceeded: {0}")]
    Capacity(String),
    /// An internal cross-check or completeness certificate failed.
    #[error("consistency failure: {0}")]
    Consistency(String),
    /// The request is outside the supported range (e.g. too large `m`).
    #[error("unsupported: {0}")]
    Unsupported(String),
    /// Malformed textual input.
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

macro_rules! domain {
    ($($arg:tt)*) => { $crate::error::Error::Domain(format!($($arg)*)) };
}
macro_rules! consistency {
    ($($arg:tt)*) => { $crate::error::Error::Consistency(format!($($arg)*)) };
}
pub(crate) use consistency;
pub(crate) use domain;
