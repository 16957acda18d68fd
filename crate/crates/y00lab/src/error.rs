//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by the laboratory.
#[derive(Debug, Error)]
pub enum Error {
    /// Invalid domain input (non-finite values, out-of-range parameters,
    /// mismatched operator spans, malformed distributions).
    #[error("domain error: {0}")]
    Domain(String),

    /// A numerical routine failed (eigensolver breakdown, spectrum
    /// normalization drift beyond tolerance).
    #[error("numeric error: {0}")]
    Numeric(String),

    /// The input is structurally valid but outside what the operation
    /// supports.
    #[error("unsupported input: {0}")]
    Unsupported(String),

    /// Scenario or sweep configuration is invalid. Maps to exit code 2.
    #[error("config error: {0}")]
    Config(String),

    /// The request exceeds a deliberate capability limit (key space too
    /// large, sweep grid over cap). Maps to exit code 3.
    #[error("refused: {0}")]
    Refused(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn numeric(msg: impl Into<String>) -> Self {
        Error::Numeric(msg.into())
    }

    pub(crate) fn config(msg: impl Into<String>) -> Self {
        Error::Config(msg.into())
    }
}
