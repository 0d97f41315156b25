//! Exact computations with finite-dimensional Hopf algebras in braided
//! categories of (graded) vector spaces: Yetter-Drinfeld modules, Radford
//! biproducts, partial dualization and Nichols algebras of diagonal type.

pub mod catalog;
pub mod cli;
pub mod diagram;
pub mod error;
pub mod exactmath;
pub mod hopf;
pub mod nichols;
pub mod partialdual;
pub mod radford;
pub mod report;
pub mod yd;

pub use error::{Error, Result};
pub use report::{Check, Report};
