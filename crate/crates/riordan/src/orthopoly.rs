//! Coefficient arrays of orthogonal-polynomial families defined by a monic
//! three-term recurrence, their inverses as moment matrices, and the bridge
//! from J-fraction coefficients to such a family.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::factorization::JFraction;
use crate::matrix::TriMatrix;
use crate::rational::Rational;

/// A polynomial family `P_n` with explicit low-order members and the rule
/// `P_n(x) = (x - alpha_{n-1}) P_{n-1}(x) - beta_{n-1} P_{n-2}(x)` for `n >= 2`.
///
/// The per-index coefficient lists allow families whose first steps break the
/// later pattern; `alphas[0]` is only consulted through the explicit `p1`.
#[derive(Clone, Debug, PartialEq)]
pub struct Recurrence {
    p0: Vec<Rational>,
    p1: Vec<Rational>,
    alphas: Vec<Rational>,
    betas: Vec<Rational>,
}

impl Recurrence {
    /// `p0` must be a nonzero constant and `p1` of exact degree 1.
    pub fn new(
        p0: Vec<Rational>,
        p1: Vec<Rational>,
        alphas: Vec<Rational>,
        betas: Vec<Rational>,
    ) -> Result<Self> {
        let p0_ok = p0.len() == 1 && !p0[0].is_zero();
        let p1_ok = p1.len() == 2 && !p1[1].is_zero();
        if !p0_ok || !p1_ok {
            return Err(Error::InvalidRecurrence);
        }
        Ok(Recurrence {
            p0,
            p1,
            alphas,
            betas,
        })
    }

    /// Monic family with `P_0 = 1` and `P_1 = x - alphas[0]`.
    pub fn monic(alphas: Vec<Rational>, betas: Vec<Rational>) -> Result<Self> {
        let a0 = alphas
            .first()
            .ok_or(Error::InsufficientTerms { needed: 1, have: 0 })?
            .clone();
        Recurrence::new(
            vec![Rational::one()],
            vec![-a0, Rational::one()],
            alphas,
            betas,
        )
    }

    /// Family whose moment sequence is the source of the J-fraction.
    pub fn from_jfraction(j: &JFraction) -> Result<Self> {
        Recurrence::monic(j.alphas().to_vec(), j.betas().to_vec())
    }

    pub fn alphas(&self) -> &[Rational] {
        &self.alphas
    }

    pub fn betas(&self) -> &[Rational] {
        &self.betas
    }

    /// Lower-triangular array whose row `i` holds the coefficients of `P_i`
    /// in ascending powers.
    pub fn coeff_array(&self, n: usize) -> Result<TriMatrix> {
        if n >= 2 {
            // P_m for m in 2..n needs alpha_{m-1} and beta_{m-1}
            let need_alphas = n - 1;
            let need_betas = n - 2;
            if self.alphas.len() < need_alphas {
                return Err(Error::InsufficientTerms {
                    needed: need_alphas,
                    have: self.alphas.len(),
                });
            }
            if self.betas.len() < need_betas {
                return Err(Error::InsufficientTerms {
                    needed: need_betas,
                    have: self.betas.len(),
                });
            }
        }
        let mut rows: Vec<Vec<Rational>> = Vec::with_capacity(n);
        if n >= 1 {
            rows.push(self.p0.clone());
        }
        if n >= 2 {
            rows.push(self.p1.clone());
        }
        for m in 2..n {
            let alpha = &self.alphas[m - 1];
            let beta = &self.betas[m - 2];
            let prev = &rows[m - 1];
            let prev2 = &rows[m - 2];
            let mut row = vec![Rational::zero(); m + 1];
            for (i, c) in prev.iter().enumerate() {
                row[i + 1] += c; // x * P_{m-1}
                if !alpha.is_zero() {
                    row[i] -= alpha * c;
                }
            }
            if !beta.is_zero() {
                for (i, c) in prev2.iter().enumerate() {
                    row[i] -= beta * c;
                }
            }
            rows.push(row);
        }
        TriMatrix::from_rows(rows)
    }

    /// Exact inverse of the coefficient array; column 0 is the moment sequence.
    pub fn moment_matrix(&self, n: usize) -> Result<TriMatrix> {
        self.coeff_array(n)?.inverse()
    }
}
