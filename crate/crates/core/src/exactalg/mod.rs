//! Exact scalars, polynomials and linear algebra.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use thiserror::Error;

mod cyclotomic;
mod matrix;
mod poly;
mod rational;
mod unipoly;

pub use cyclotomic::{cyclotomic_polynomial, totient, Cyclotomic};
pub use matrix::{exact_matrix_nullspace, exact_matrix_rank, vandermonde_general_position, ExactMatrix, LinePoint};
pub use poly::{Monomial, SparseMultiPoly};
pub use rational::Rational;
pub use unipoly::UniPoly;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExactAlgError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("exponent vector has length {got}, expected {expected}")]
    ExponentLength { expected: usize, got: usize },
    #[error("polynomial is not homogeneous (term degrees {degrees:?})")]
    NotHomogeneous { degrees: Vec<u32> },
    #[error("{entries} entries do not fill a {rows}x{cols} matrix")]
    Shape { rows: usize, cols: usize, entries: usize },
    #[error("matrix rows have different lengths")]
    RaggedRows,
    #[error("{points} points exceed the {limit} coordinates of the rational normal curve")]
    TooManyPoints { points: usize, limit: usize },
}

/// A field of characteristic zero with exact arithmetic.
pub trait Field:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self>;
    fn from_rational(r: &Rational) -> Self;
    /// The value as a rational number, when it is one.
    fn as_rational(&self) -> Option<Rational>;
}
