use thiserror::Error;

/// Errors raised by the geometry, diagram and sampling routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("point (X = {x}, Y = {y}) is not in the diagram")]
    NotInDiagram { x: f64, y: f64 },
    #[error("bisection did not converge within {iterations} iterations")]
    Convergence { iterations: usize },
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
