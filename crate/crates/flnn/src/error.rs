use std::path::PathBuf;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong in the library, grouped by origin so
/// callers (notably the CLI) can map failures to exit classes.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Invalid configuration or precondition violation.
    #[error("invalid configuration: {0}")]
    Config(String),

    /// A vector had the wrong length for the operation.
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    /// A CSV record could not be ingested; `line` is 1-based.
    #[error("{path}: line {line}: {kind}")]
    Csv {
        path: PathBuf,
        line: usize,
        kind: CsvErrorKind,
    },

    /// Dataset-level problem after ingestion (labels, emptiness, non-finite values).
    #[error("data error: {0}")]
    Data(String),

    /// A training run failed; `step` is the epoch or cycle at which it did.
    #[error("training failed at step {step}: {msg}")]
    Training { step: usize, msg: String },

    /// The objective produced a non-finite value for this position.
    #[error("objective returned a non-finite value at {position:?}")]
    ObjectiveNotFinite { position: Vec<f64> },

    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),
}

/// Distinct ingestion failures, kept apart so tests and callers can tell
/// a structural problem from a value problem.
#[derive(Debug, PartialEq, Eq)]
pub enum CsvErrorKind {
    WrongArity { expected: usize, got: usize },
    BadNumber { column: usize, token: String },
}

impl std::fmt::Display for CsvErrorKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CsvErrorKind::WrongArity { expected, got } => {
                write!(f, "expected {expected} columns, got {got}")
            }
            CsvErrorKind::BadNumber { column, token } => {
                write!(f, "column {column}: cannot parse '{token}' as a number")
            }
        }
    }
}
