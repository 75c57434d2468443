use thiserror::Error;

use crate::complex::Diagnostic;

#[derive(Debug, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("malformed complex: {}", .0.iter().map(|d| d.to_string()).collect::<Vec<_>>().join("; "))]
    Structural(Vec<Diagnostic>),

    #[error("unknown name `{0}`")]
    Name(String),

    #[error("no defining relator for generator `{0}`")]
    Elimination(String),

    #[error("capacity exceeded: {0}")]
    Capacity(String),

    #[error("unsupported quotient: {0}")]
    UnsupportedQuotient(String),

    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;
