use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("symbol `{symbol}` occurs {count} times, expected exactly 2")]
    NotDoubleOccurrence { symbol: String, count: usize },

    /// `item` names the offending symbol or chord.
    #[error("{item} spans positions {first} and {second}: even difference violates C1")]
    C1Violation {
        item: String,
        first: usize,
        second: usize,
    },

    #[error("invalid lintel: {0}")]
    InvalidLintel(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("vertex {vertex} out of range for graph on {size} vertices")]
    OutOfRange { vertex: usize, size: usize },

    #[error("graph on {0} vertices is too small for this operation")]
    SizeTooSmall(usize),

    #[error("size {size} exceeds the configured maximum {max}")]
    SizeTooLarge { size: usize, max: usize },

    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },

    #[error("{path}:{line}: {source}")]
    AtLine {
        path: PathBuf,
        line: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("unknown criterion `{0}`")]
    UnknownCriterion(String),
}

impl Error {
    /// Strips line/path context, exposing the underlying cause.
    pub fn root(&self) -> &Error {
        match self {
            Error::AtLine { source, .. } => source.root(),
            other => other,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
