//! File formats and commands behind the `colorconn` binary.

pub mod commands;
pub mod dimacs;
pub mod document;
pub mod dot;
pub mod report;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("malformed graph document: {0}")]
    Json(#[from] serde_json::Error),
    #[error("line {line}: {message}")]
    Dimacs { line: usize, message: String },
    #[error("graph document: {0}")]
    Document(String),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] colorconn::Error),
}

pub type CliResult<T> = Result<T, CliError>;

/// Process exit status: success or property holds, property fails, error.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exit {
    Yes = 0,
    No = 1,
    Error = 2,
}
