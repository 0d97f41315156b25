//! A small language for string diagrams in braided monoidal categories.
//!
//! Expressions are parsed, checked against an [`Environment`] that binds
//! spaces, generators and a braiding, and evaluated to exact matrices.
//! Textual composition `f . g` applies `g` first.

pub mod ast;
pub mod braiding;
pub mod env;
pub mod eval;
pub mod parser;

pub use ast::DiagramExpr;
pub use braiding::{BaseCategory, BraidingProvider};
pub use env::Environment;
pub use eval::{check_equal, eval_expr, typecheck_expr, Equality, TypedExpr, Witness};
pub use parser::parse_expr;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("syntax error at line {line}, column {col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("type error in `{node}`: expected wires {expected}, found {actual}")]
    Type {
        node: String,
        expected: String,
        actual: String,
    },
    #[error("unbound name `{0}`")]
    Unbound(String),
    #[error("shape mismatch: {lhs} versus {rhs}")]
    ShapeMismatch { lhs: String, rhs: String },
    #[error("braiding error: {0}")]
    Braiding(String),
}
