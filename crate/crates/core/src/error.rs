use thiserror::Error;

use crate::budget::BudgetKind;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid generator spec: {0}")]
    InvalidGenerator(String),

    #[error("{kind} budget exceeded: {detail}")]
    Budget { kind: BudgetKind, detail: String },

    #[error("infeasible: {0}")]
    Infeasible(String),

    #[error("degenerate coefficients: {0}")]
    Degenerate(String),

    #[error("length mismatch: expected {expected}, got {got}")]
    Length { expected: usize, got: usize },

    #[error("consistency check failed: {0}")]
    Consistency(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn budget(kind: BudgetKind, detail: impl Into<String>) -> Self {
        Error::Budget {
            kind,
            detail: detail.into(),
        }
    }
}
