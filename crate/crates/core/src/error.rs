use thiserror::Error;

/// Malformed textual input. `token` is the offending piece of the input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid input `{token}`: {reason}")]
pub struct ParseError {
    pub token: String,
    pub reason: String,
}

impl ParseError {
    pub fn new(token: impl Into<String>, reason: impl Into<String>) -> Self {
        ParseError { token: token.into(), reason: reason.into() }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("row {row} does not fit in a {n}x{n} grid")]
    RowOutOfRange { row: usize, n: usize },

    #[error("{columns} columns do not fit in a {n}x{n} grid")]
    TooManyColumns { columns: usize, n: usize },

    #[error("({row}, {col}) is not a box of the diagram")]
    NotABox { row: usize, col: usize },

    #[error("column {col}: sets of sizes {left} and {right} cannot be compared")]
    CardinalityMismatch { col: usize, left: usize, right: usize },

    #[error("enumeration cap of {cap} diagrams exceeded")]
    CapExceeded { cap: u64 },

    #[error("no patterns supplied")]
    NoPatterns,

    #[error("invalid family: {0}")]
    Family(String),

    #[error("I/O error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
