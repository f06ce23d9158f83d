use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed JSON text.
    #[error("parse error at line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },

    /// Well-formed JSON that violates a schema; `path` locates the offending value.
    #[error("schema error at {path}: {message}")]
    Schema { path: String, message: String },

    #[error("invalid index: {0}")]
    InvalidIndex(String),

    /// A constructed object failed a property it is guaranteed to have.
    #[error("postcondition violated: {0}")]
    Postcondition(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Syntax { line: e.line(), column: e.column(), message: e.to_string() }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
