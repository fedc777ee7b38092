use thiserror::Error;

/// Errors produced by solvers, generators and instance I/O.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    Input(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("infeasible instance: {0}")]
    Infeasible(String),

    #[error("instance too large for exhaustive oracle: n={n} exceeds cap {cap}")]
    CapExceeded { n: usize, cap: usize },

    #[error("arithmetic overflow: {0}")]
    Overflow(String),

    #[error("degenerate instance: {0}")]
    Degenerate(String),
}

pub type Result<T> = std::result::Result<T, Error>;
