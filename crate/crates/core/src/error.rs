//! Error types shared across the simulator.

use thiserror::Error;

/// Unified error type for all simulator operations.
#[derive(Debug, Error)]
pub enum Error {
    /// A structural contract was violated (incompatible layer dimensions,
    /// incongruent mask/plan shapes).
    #[error("spec error: {0}")]
    Spec(String),

    /// Runtime shape mismatch between tensors.
    #[error("dimension error: {0}")]
    Dimension(String),

    /// Invalid input data (labels out of range, empty datasets, too few
    /// samples for a partition).
    #[error("input error: {0}")]
    Input(String),

    /// Malformed binary file; `offset` is the byte position of the problem.
    #[error("format error at byte {offset}: {msg}")]
    Format { offset: u64, msg: String },

    /// Invalid configuration of an operation (no candidate layers, fewer
    /// dense layers than requested, missing device ratio).
    #[error("config error: {0}")]
    Config(String),

    /// An upload that does not respect its own mask.
    #[error("integrity error: {0}")]
    Integrity(String),

    /// A condition the implementation guarantees cannot happen.
    #[error("internal error: {0}")]
    Internal(String),

    /// Config-file validation failure; names the offending key and line.
    #[error("validation error: key `{key}` (line {line}): {msg}")]
    Validation { key: String, line: usize, msg: String },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn spec(msg: impl Into<String>) -> Self {
        Error::Spec(msg.into())
    }
    pub fn dimension(msg: impl Into<String>) -> Self {
        Error::Dimension(msg.into())
    }
    pub fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }
    pub fn config(msg: impl Into<String>) -> Self {
        Error::Config(msg.into())
    }
    pub fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }
    pub fn validation(key: impl Into<String>, line: usize, msg: impl Into<String>) -> Self {
        Error::Validation { key: key.into(), line, msg: msg.into() }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
