use thiserror::Error;

/// Crate-wide error type. Domain errors name the violated precondition so
/// that the CLI can surface it verbatim.
#[derive(Debug, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("range error: {0}")]
    Range(String),
    #[error("resource limit exceeded: {0}")]
    Resource(String),
    #[error("did not converge: {0}")]
    NonConvergence(String),
    #[error("no root bracketed: {0}")]
    NoRoot(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("zero table does not cover t = {t}")]
    Coverage { t: f64 },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
