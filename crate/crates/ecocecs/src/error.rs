//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by dataset handling, encoding, training, and evaluation.
#[derive(Debug, Error)]
pub enum EcocError {
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    /// A cell in a CSV file failed to parse. Row and column are 1-based file
    /// coordinates (the header is row 1).
    #[error("csv parse error at row {row}, column {col} ({name}): {msg}")]
    CsvParse {
        row: usize,
        col: usize,
        name: String,
        msg: String,
    },

    #[error("invalid dataset: {0}")]
    InvalidData(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Geometry that makes a measure undefined, e.g. coincident centroids
    /// across groups or an all-zero inter-class distance sum.
    #[error("degenerate geometry: {0}")]
    DegenerateGeometry(String),

    #[error("dimension mismatch: expected {expected} features, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
}

pub type Result<T> = std::result::Result<T, EcocError>;
