//! Exact arithmetic kernel: rationals, sparse polynomials in `(a1, a2, z)`,
//! rational functions with cheap linear-form reduction, and small matrices
//! over both rings.

mod matrix;
mod monomial;
mod poly;
mod ratfunc;
pub mod rational;

pub use matrix::{Matrix, PolyMatrix, RatMatrix, Ring};
pub use monomial::{Monomial, Var};
pub use poly::Poly;
pub use ratfunc::RatFunc;
pub use rational::{int, parse_rational, rat, Rational};

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum ExactAlgError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("dimension mismatch: {left:?} times {right:?}")]
    DimensionMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("matrix is {rows}x{cols}, not square")]
    NotSquare { rows: usize, cols: usize },
    #[error("unsupported matrix size {0}")]
    UnsupportedSize(usize),
    #[error("singular matrix")]
    Singular,
    #[error("bad matrix shape {rows}x{cols} with {len} entries")]
    Shape { rows: usize, cols: usize, len: usize },
    #[error("parse error: {0}")]
    Parse(String),
}
