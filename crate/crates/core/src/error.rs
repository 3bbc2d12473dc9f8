use thiserror::Error;

use crate::digraph::ParseError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("operation requires a digraph with at least one vertex")]
    EmptyDigraph,
    #[error("expected a square matrix, got {rows}x{cols}")]
    NonSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("matrix is singular")]
    Singular,
    #[error("expression does not reduce to a polynomial: {0}")]
    NotPolynomial(String),
    #[error("hypothesis not satisfied: {0}")]
    Hypothesis(String),
    #[error("invalid equitable partition: {0}")]
    InvalidPartition(String),
    #[error("root finder did not converge after {iterations} iterations")]
    NonConvergence { iterations: usize },
    #[error("input of size {size} exceeds the oracle budget of {cap}")]
    OverBudget { size: usize, cap: usize },
    #[error(transparent)]
    Parse(#[from] ParseError),
}
