//! Error types shared across the model modules.

use thiserror::Error;

/// Errors raised by the physical model functions.
#[derive(Debug, Error)]
pub enum ModelError {
    /// An input violates a model precondition (negative rate, zero distance, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// An input falls outside a model's validity window.
    #[error("{quantity} = {value} outside validity window [{min}, {max}] {unit}")]
    OutOfRange {
        quantity: &'static str,
        value: f64,
        min: f64,
        max: f64,
        unit: &'static str,
    },

    /// A coefficient table failed to load or validate.
    #[error(transparent)]
    Data(#[from] DataError),
}

/// Errors raised while loading the shipped coefficient data files.
#[derive(Debug, Error)]
pub enum DataError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("{path}: {message}")]
    Malformed { path: String, message: String },

    #[error("{path} row {row}: {message}")]
    BadRow {
        path: String,
        row: usize,
        message: String,
    },

    #[error("{path}: checksum mismatch (expected {expected}, found {found})")]
    Checksum {
        path: String,
        expected: String,
        found: String,
    },
}

pub type Result<T, E = ModelError> = std::result::Result<T, E>;
