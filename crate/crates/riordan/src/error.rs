//! Error type shared by the whole crate.
//!
//! Every fallible operation names the precondition it found violated, so
//! CLI error messages can be emitted verbatim.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("coefficient index {index} is out of range: series truncated at order {order}")]
    Truncated { index: usize, order: usize },

    #[error("series order {order} is too small: {needed} exact coefficients are required")]
    OrderTooSmall { needed: usize, order: usize },

    #[error("{op} requires a series with zero constant term")]
    ConstantTermNonzero { op: &'static str },

    #[error("{op} requires a series with nonzero constant term")]
    ConstantTermZero { op: &'static str },

    #[error("reversion requires f(0) = 0 and f'(0) != 0")]
    NotReversible,

    #[error("series square root requires constant term 1")]
    SqrtConstantNotOne,

    #[error("not a Riordan pair: g(0) != 0, f(0) = 0 and f'(0) = 1 are required")]
    InvalidPair,

    #[error("sequence has {have} terms but {needed} are required")]
    InsufficientTerms { needed: usize, have: usize },

    #[error("leading principal minor of order {order} is zero: no LDU factorization")]
    SingularMinor { order: usize },

    #[error("triangular matrix has a zero diagonal entry at index {index}")]
    ZeroDiagonal { index: usize },

    #[error("matrix is not symmetric")]
    NotSymmetric,

    #[error("invalid matrix shape: {0}")]
    Shape(String),

    #[error("series is not normal: beta vanished, J-fraction stops at depth {attained}")]
    NotNormal { attained: usize },

    #[error("image generating function requires a0 to equal the constant term of f")]
    ImageConstantMismatch,

    #[error("recurrence requires a constant P0 and a degree-1 P1 with nonzero leading coefficients")]
    InvalidRecurrence,

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
