use thiserror::Error;

use crate::dsl::DslError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },
    #[error("invalid vector: {0}")]
    InvalidVector(String),
    #[error("invalid space: {0}")]
    InvalidSpace(String),
    #[error("2-norm evaluator returned {value} for ({x:?}, {y:?})")]
    InvalidNorm { x: Vec<f64>, y: Vec<f64>, value: f64 },
    #[error("anchors are linearly dependent: ||y0, z0|| = {0}")]
    InvalidAnchor(f64),
    #[error("tolerance must be positive, got {0}")]
    InvalidTolerance(f64),
    #[error("neighborhood needs at least one (z, epsilon) constraint")]
    EmptyConstraints,
    #[error("invalid schedule: {0}")]
    Schedule(String),
    #[error("sequence term {index} is outside its definition: {reason}")]
    SequenceIndex { index: u64, reason: String },
    #[error("index map is not strictly increasing: map({n}) = {at}, map({next}) = {at_next}", next = n + 1)]
    IndexMap { n: u64, at: u64, at_next: u64 },
    #[error("term {index} has max-basis norm {norm} above the bound {bound}")]
    BoundViolation { index: u64, norm: f64, bound: f64 },
    #[error("invalid function: {0}")]
    InvalidFunction(String),
    #[error("invalid probe parameters: {0}")]
    Probe(String),
    #[error("config `{field}`: {message}")]
    Config { field: String, message: String },
    #[error(transparent)]
    Dsl(#[from] DslError),
}
