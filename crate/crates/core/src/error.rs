//! Crate-wide error type.

use thiserror::Error;

use crate::diagram::DiagramError;
use crate::exactmath::MathError;
use crate::report::Report;

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error(transparent)]
    Math(#[from] MathError),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error("malformed structure tensors: {0}")]
    Shape(String),
    #[error("verification failed: {}", .0.summary())]
    Verification(Report),
    #[error("the bialgebra has no antipode")]
    NoAntipode,
    #[error("the antipode is not invertible")]
    NotInvertible,
    #[error("the pairing is degenerate")]
    Degenerate,
    #[error("structure map leaves the coinvariant subspace: {0}")]
    ClosureViolation(String),
    #[error("not a Hopf projection: {0}")]
    NotAProjection(String),
    #[error("not a section of the projection: {0}")]
    NotASection(String),
    #[error("degenerate pairing in dualization datum: {0}")]
    DegeneratePairing(String),
    #[error("degree cutoff {0} reached before the computation stabilized")]
    CutoffReached(usize),
    #[error("Nichols truncation is not complete")]
    NotComplete,
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("schema error: {0}")]
    Schema(String),
    #[error("incompatible objects: {0}")]
    Incompatible(String),
}

pub type Result<T> = std::result::Result<T, Error>;
