//! Exact dense, lower-triangular, and symmetric rational matrices.

use std::sync::LazyLock;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;

static ZERO: LazyLock<Rational> = LazyLock::new(Rational::zero);

/// Dense row-major matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Shape("rows have unequal lengths".into()));
        }
        Ok(Mat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        assert!(i < self.rows && j < self.cols);
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Mat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> Mat {
        Mat::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn to_row_vecs(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }
}

/// Lower-triangular square matrix; only the triangle is stored, row by row.
#[derive(Clone, Debug, PartialEq)]
pub struct TriMatrix {
    dim: usize,
    data: Vec<Rational>,
}

fn tri_offset(i: usize) -> usize {
    i * (i + 1) / 2
}

impl TriMatrix {
    pub fn identity(n: usize) -> Self {
        TriMatrix::from_fn(n, |i, j| {
            if i == j {
                Rational::one()
            } else {
                Rational::zero()
            }
        })
    }

    /// Builds from a closure invoked for every `(i, j)` with `j <= i`.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(tri_offset(n));
        for i in 0..n {
            for j in 0..=i {
                data.push(f(i, j));
            }
        }
        TriMatrix { dim: n, data }
    }

    /// Builds from packed rows; row `i` must have exactly `i + 1` entries.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().enumerate().any(|(i, row)| row.len() != i + 1) {
            return Err(Error::Shape(
                "triangular row i must have i + 1 entries".into(),
            ));
        }
        Ok(TriMatrix {
            dim: n,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        assert!(i < self.dim && j < self.dim);
        if j > i {
            &ZERO
        } else {
            &self.data[tri_offset(i) + j]
        }
    }

    /// The packed row `i`: entries for columns `0..=i`.
    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[tri_offset(i)..tri_offset(i + 1)]
    }

    pub fn is_unit_diagonal(&self) -> bool {
        (0..self.dim).all(|i| self.get(i, i).is_one())
    }

    pub fn mul(&self, other: &TriMatrix) -> TriMatrix {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        TriMatrix::from_fn(self.dim, |i, j| {
            let mut s = Rational::zero();
            for k in j..=i {
                let a = self.get(i, k);
                if !a.is_zero() {
                    s += a * other.get(k, j);
                }
            }
            s
        })
    }

    /// Exact inverse; every diagonal entry must be nonzero.
    pub fn inverse(&self) -> Result<TriMatrix> {
        let n = self.dim;
        for i in 0..n {
            if self.get(i, i).is_zero() {
                return Err(Error::ZeroDiagonal { index: i });
            }
        }
        let mut inv = TriMatrix::from_fn(n, |_, _| Rational::zero());
        for j in 0..n {
            inv.data[tri_offset(j) + j] = Rational::one() / self.get(j, j);
            for i in j + 1..n {
                let mut s = Rational::zero();
                for k in j..i {
                    let x = &inv.data[tri_offset(k) + j];
                    if !x.is_zero() {
                        s += self.get(i, k) * x;
                    }
                }
                inv.data[tri_offset(i) + j] = -s / self.get(i, i);
            }
        }
        Ok(inv)
    }

    pub fn to_mat(&self) -> Mat {
        Mat::from_fn(self.dim, self.dim, |i, j| self.get(i, j).clone())
    }

    pub fn transpose(&self) -> Mat {
        self.to_mat().transpose()
    }

    /// The conjugation `self * a * self^t`, which is symmetric by construction.
    pub fn conjugate(&self, a: &SymMatrix) -> SymMatrix {
        let m = self.to_mat();
        let p = m.mul(&a.to_mat()).mul(&m.transpose());
        SymMatrix::from_mat(&p).expect("conjugation of a symmetric matrix is symmetric")
    }
}

/// Symmetric square matrix; the lower triangle is stored, so the symmetry
/// invariant holds structurally.
#[derive(Clone, Debug, PartialEq)]
pub struct SymMatrix {
    dim: usize,
    data: Vec<Rational>,
}

impl SymMatrix {
    /// Builds from a closure invoked for every `(i, j)` with `j <= i`.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(tri_offset(n));
        for i in 0..n {
            for j in 0..=i {
                data.push(f(i, j));
            }
        }
        SymMatrix { dim: n, data }
    }

    pub fn from_mat(m: &Mat) -> Result<Self> {
        if m.rows() != m.cols() {
            return Err(Error::Shape(format!(
                "expected a square matrix, got {}x{}",
                m.rows(),
                m.cols()
            )));
        }
        for i in 0..m.rows() {
            for j in 0..i {
                if m.get(i, j) != m.get(j, i) {
                    return Err(Error::NotSymmetric);
                }
            }
        }
        Ok(SymMatrix::from_fn(m.rows(), |i, j| m.get(i, j).clone()))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        assert!(i < self.dim && j < self.dim);
        let (hi, lo) = if i >= j { (i, j) } else { (j, i) };
        &self.data[tri_offset(hi) + lo]
    }

    pub fn to_mat(&self) -> Mat {
        Mat::from_fn(self.dim, self.dim, |i, j| self.get(i, j).clone())
    }
}
