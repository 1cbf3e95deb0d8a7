//! Exact arithmetic for Riordan arrays and the structured matrices they
//! factor.
//!
//! Everything here runs over arbitrary-precision rationals: truncated formal
//! power series, the Riordan group of lower-triangular arrays, a rectangular
//! sequence transform with four equivalent formulas, Hankel and symmetric
//! Toeplitz-plus-Hankel matrices with exact LDU (LDL^t) factorizations,
//! Hankel transforms, J-fraction expansions, and orthogonal-polynomial
//! coefficient and moment matrices.
//!
//! ```
//! use riordan::{btransform, Seq};
//!
//! let image = btransform::transform_matrix(&Seq::fibonacci(12), 11).unwrap();
//! let first: Vec<String> = image.terms().iter().map(|t| t.to_string()).collect();
//! assert_eq!(first.join(","), "1,3,7,17,39,91,207,475,1075,2445,5515");
//! ```
//!
//! The `examples/` directory has one runnable program per capability; the
//! `riordan` binary exposes the same operations as subcommands.

pub mod btransform;
pub mod cli;
pub mod error;
pub mod factorization;
pub mod matrix;
pub mod orthopoly;
pub mod parse;
pub mod rational;
pub mod riordan;
pub mod seq;
pub mod series;

pub use error::{Error, Result};
pub use factorization::{JFraction, LduFactorization};
pub use matrix::{Mat, SymMatrix, TriMatrix};
pub use orthopoly::Recurrence;
pub use rational::{BigInt, Rational};
pub use riordan::Riordan;
pub use seq::Seq;
pub use series::{Series, DEFAULT_ORDER};
