//! Exact arithmetic: rationals, cyclotomic fields, sparse matrices and linear algebra.

pub mod cyclo;
pub mod linalg;
pub mod matrix;
pub mod morphism;
pub mod poly;
pub mod rational;
pub mod sparse;

pub use cyclo::{cyc_canonicalize, cyc_inv, CycScalar};
pub use linalg::{inverse, kernel, left_inverse, rank, rref_kernel, solve_in_span};
pub use matrix::Matrix;
pub use morphism::{kron, Space, TypedMorphism};
pub use poly::cyclotomic_polynomial;
pub use sparse::SparseVec;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MathError {
    #[error("inverse of zero")]
    ZeroInverse,
    #[error("target vector is not in the span of the given basis")]
    NotInSpan,
    #[error("matrix is not invertible")]
    NotInvertible,
    #[error("cannot parse scalar literal `{0}`")]
    Parse(String),
    #[error("shape mismatch: {0}")]
    Shape(String),
}
