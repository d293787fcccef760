use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Input outside the domain of an operation (wrong sector, bad index, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// A construction would exceed the desk-scale size guard.
    #[error("resource limit: {0}")]
    Resource(String),

    /// Malformed state file. `line` is 1-based; 0 means the file as a whole.
    #[error("{}", parse_message(*line, msg))]
    Parse { line: usize, msg: String },

    #[error("indeterminate: {0}")]
    Indeterminate(String),

    #[error("mismatch: {0}")]
    Mismatch(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse { line, msg: msg.into() }
    }
}

fn parse_message(line: usize, msg: &str) -> String {
    if line == 0 {
        format!("state file: {msg}")
    } else {
        format!("line {line}: {msg}")
    }
}
