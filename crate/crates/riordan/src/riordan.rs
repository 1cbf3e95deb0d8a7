//! The Riordan group: pairs `(g, f)` of generating functions realized as
//! exact lower-triangular matrices.
//!
//! Column `k` of the matrix of `(g, f)` is generated by `g(x) * f(x)^k`. The
//! group law is `(g, f) * (h, l) = (g * (h o f), l o f)` with identity `(1, x)`
//! and inverse `(1 / (g o rev f), rev f)`.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::TriMatrix;
use crate::rational::Rational;
use crate::series::Series;

/// A Riordan pair: `g(0) != 0`, `f(0) = 0`, `f'(0) = 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct Riordan {
    g: Series,
    f: Series,
}

impl Riordan {
    pub fn new(g: Series, f: Series) -> Result<Self> {
        let valid = g.order() >= 1
            && f.order() >= 2
            && !g.coeffs()[0].is_zero()
            && f.coeffs()[0].is_zero()
            && f.coeffs()[1].is_one();
        if !valid {
            return Err(Error::InvalidPair);
        }
        Ok(Riordan { g, f })
    }

    /// The identity element `(1, x)`.
    pub fn identity(order: usize) -> Self {
        Riordan {
            g: Series::one(order),
            f: Series::x(order),
        }
    }

    /// The binomial (Pascal) array `(1/(1-x), x/(1-x))`.
    pub fn binomial(order: usize) -> Self {
        Riordan::new(
            Series::rational_fn(&[1], &[1, -1], order).unwrap(),
            Series::rational_fn(&[0, 1], &[1, -1], order).unwrap(),
        )
        .unwrap()
    }

    /// The sequence (Appell) array `(g, x)`, whose `(n, k)` entry is `a_{n-k}`.
    pub fn sequence_array(g: Series) -> Result<Self> {
        let order = g.order();
        Riordan::new(g, Series::x(order.max(2)))
    }

    pub fn g(&self) -> &Series {
        &self.g
    }

    pub fn f(&self) -> &Series {
        &self.f
    }

    /// Coefficients available to both component series.
    pub fn order(&self) -> usize {
        self.g.order().min(self.f.order())
    }

    /// The `n x n` leading submatrix; entry `(i, k)` is `[x^i] g * f^k`.
    pub fn to_matrix(&self, n: usize) -> Result<TriMatrix> {
        if self.order() < n {
            return Err(Error::OrderTooSmall {
                needed: n,
                order: self.order(),
            });
        }
        let f = self.f.truncated(n);
        let mut col = self.g.truncated(n);
        let mut rows: Vec<Vec<Rational>> = (0..n).map(|i| vec![Rational::zero(); i + 1]).collect();
        for k in 0..n {
            for (i, row) in rows.iter_mut().enumerate().skip(k) {
                row[k] = col.coeffs()[i].clone();
            }
            if k + 1 < n {
                col = col.mul(&f);
            }
        }
        TriMatrix::from_rows(rows)
    }

    /// Group product `(g, f) * (h, l) = (g * (h o f), l o f)`.
    pub fn mul(&self, rhs: &Riordan) -> Result<Riordan> {
        let g = self.g.mul(&rhs.g.compose(&self.f)?);
        let f = rhs.f.compose(&self.f)?;
        Riordan::new(g, f)
    }

    /// Group inverse `(1 / (g o rev f), rev f)`.
    pub fn inverse(&self) -> Result<Riordan> {
        let fbar = self.f.reversion()?;
        let g = Series::one(self.g.order()).div(&self.g.compose(&fbar)?)?;
        Riordan::new(g, fbar)
    }

    /// The fundamental-theorem action: the image of `a` has g.f. `g * (A o f)`.
    ///
    /// Matches the matrix-vector product of [`Self::to_matrix`] with the
    /// coefficient vector of `a`.
    pub fn apply(&self, a: &Series) -> Series {
        let inner = a.compose(&self.f).expect("f has zero constant term");
        self.g.mul(&inner)
    }
}

/// Row reversal: entry `(i, j)` of the result is `m(i, i-j)`.
pub fn matrix_reversal(m: &TriMatrix) -> TriMatrix {
    TriMatrix::from_fn(m.dim(), |i, j| m.get(i, i - j).clone())
}

/// Matrix aeration: entry `(i, j)` is `reversal(m)((i+j)/2, (i-j)/2)` when
/// `i - j` is even, zero otherwise.
///
/// The result has the same dimension as the input: rows of the aeration past
/// that point would need rows of the infinite array that the truncation does
/// not hold.
pub fn aerate_matrix(m: &TriMatrix) -> TriMatrix {
    TriMatrix::from_fn(m.dim(), |i, j| {
        if (i - j) % 2 == 0 {
            // reversal((i+j)/2, (i-j)/2) written directly in terms of m
            m.get((i + j) / 2, j).clone()
        } else {
            Rational::zero()
        }
    })
}
