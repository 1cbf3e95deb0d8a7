//! Truncated formal power series with exact rational coefficients.
//!
//! A `Series` stores the first `order` coefficients of a formal power series.
//! Binary operations truncate to the shorter operand, so every coefficient a
//! result carries is exact; nothing is ever rounded or zero-padded.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{int, ratio, Rational};

/// Truncation order used by convenience constructors and the CLI default.
pub const DEFAULT_ORDER: usize = 64;

/// Cap applied when an operation grows the truncation order (aeration).
pub const MAX_ORDER: usize = 1 << 14;

/// A formal power series truncated after `order()` coefficients.
#[derive(Clone, Debug)]
pub struct Series {
    coeffs: Vec<Rational>,
}

impl Series {
    /// Series with the given coefficients; the truncation order is the vector length.
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        Series { coeffs }
    }

    /// Polynomial with integer coefficients, zero-padded up to `order`.
    pub fn from_ints(poly: &[i64], order: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); order];
        for (i, &c) in poly.iter().take(order).enumerate() {
            coeffs[i] = int(c);
        }
        Series { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Series {
            coeffs: vec![Rational::zero(); order],
        }
    }

    pub fn one(order: usize) -> Self {
        Series::constant(Rational::one(), order)
    }

    /// The series `x`.
    pub fn x(order: usize) -> Self {
        Series::from_ints(&[0, 1], order)
    }

    pub fn constant(c: Rational, order: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); order];
        if order > 0 {
            coeffs[0] = c;
        }
        Series { coeffs }
    }

    /// Expansion of `num(x)/den(x)` for integer polynomials; `den(0)` must be nonzero.
    pub fn rational_fn(num: &[i64], den: &[i64], order: usize) -> Result<Self> {
        Series::from_ints(num, order).div(&Series::from_ints(den, order))
    }

    /// The Catalan generating function `c(x) = (1 - sqrt(1-4x)) / (2x)`.
    pub fn catalan(order: usize) -> Self {
        let m = order + 1;
        let root = Series::from_ints(&[1, -4], m)
            .sqrt1()
            .expect("constant term is 1");
        let num = Series::one(m).sub(&root);
        num.div_x()
            .expect("numerator is divisible by x")
            .scale(&ratio(1, 2))
    }

    /// Number of exactly known coefficients.
    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    /// Coefficient of `x^n`; indices at or past the truncation order are an error.
    pub fn coeff(&self, n: usize) -> Result<&Rational> {
        self.coeffs.get(n).ok_or(Error::Truncated {
            index: n,
            order: self.order(),
        })
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// True when every stored coefficient is zero.
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    /// Prefix of the series: `min(order, self.order())` coefficients.
    pub fn truncated(&self, order: usize) -> Series {
        Series {
            coeffs: self.coeffs[..order.min(self.order())].to_vec(),
        }
    }

    pub fn add(&self, other: &Series) -> Series {
        let n = self.order().min(other.order());
        Series {
            coeffs: (0..n).map(|i| &self.coeffs[i] + &other.coeffs[i]).collect(),
        }
    }

    pub fn sub(&self, other: &Series) -> Series {
        let n = self.order().min(other.order());
        Series {
            coeffs: (0..n).map(|i| &self.coeffs[i] - &other.coeffs[i]).collect(),
        }
    }

    pub fn neg(&self) -> Series {
        Series {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Series {
        Series {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Cauchy product, truncated to the shorter operand.
    pub fn mul(&self, other: &Series) -> Series {
        let n = self.order().min(other.order());
        let mut coeffs = vec![Rational::zero(); n];
        for i in 0..n {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..n - i {
                if !other.coeffs[j].is_zero() {
                    coeffs[i + j] += &self.coeffs[i] * &other.coeffs[j];
                }
            }
        }
        Series { coeffs }
    }

    /// Quotient `q` with `q * other == self` up to truncation; `other(0)` must be nonzero.
    pub fn div(&self, other: &Series) -> Result<Series> {
        let n = self.order().min(other.order());
        if n == 0 || other.coeffs[0].is_zero() {
            return Err(Error::ConstantTermZero { op: "division" });
        }
        let mut q = vec![Rational::zero(); n];
        for i in 0..n {
            let mut s = self.coeffs[i].clone();
            for k in 0..i {
                if !q[k].is_zero() {
                    s -= &q[k] * &other.coeffs[i - k];
                }
            }
            q[i] = s / &other.coeffs[0];
        }
        Ok(Series { coeffs: q })
    }

    /// Multiplication by `x`; the order grows by one.
    pub fn mul_x(&self) -> Series {
        let mut coeffs = Vec::with_capacity(self.order() + 1);
        coeffs.push(Rational::zero());
        coeffs.extend(self.coeffs.iter().cloned());
        Series { coeffs }
    }

    /// Division by `x`; requires a zero constant term, the order shrinks by one.
    pub fn div_x(&self) -> Result<Series> {
        match self.coeffs.first() {
            Some(c) if c.is_zero() => Ok(Series {
                coeffs: self.coeffs[1..].to_vec(),
            }),
            _ => Err(Error::ConstantTermNonzero { op: "division by x" }),
        }
    }

    /// Composition `self(inner(x))`; `inner(0)` must be zero.
    pub fn compose(&self, inner: &Series) -> Result<Series> {
        let n = self.order().min(inner.order());
        if n > 0 && !inner.coeffs[0].is_zero() {
            return Err(Error::ConstantTermNonzero { op: "composition" });
        }
        // Horner over series.
        let mut acc = Series::zero(n);
        for c in self.coeffs[..n].iter().rev() {
            acc = acc.mul(inner);
            acc.coeffs[0] += c;
        }
        Ok(acc)
    }

    /// Compositional inverse: the series `rev` with `self(rev(x)) == x` up to truncation.
    ///
    /// Requires `f(0) = 0` and `f'(0) != 0`.
    pub fn reversion(&self) -> Result<Series> {
        let n = self.order();
        if n < 2 || !self.coeffs[0].is_zero() || self.coeffs[1].is_zero() {
            return Err(Error::NotReversible);
        }
        // Solve sum_{k<=m} c_k [x^m] f^k = [m == 1] coefficient by coefficient;
        // [x^k] f^k = f1^k is nonzero, so the system is triangular.
        let mut powers: Vec<Series> = Vec::with_capacity(n);
        powers.push(Series::one(n));
        for k in 1..n {
            powers.push(powers[k - 1].mul(self));
        }
        let mut c = vec![Rational::zero(); n];
        for m in 1..n {
            let mut s = if m == 1 {
                Rational::one()
            } else {
                Rational::zero()
            };
            for k in 1..m {
                if !c[k].is_zero() {
                    s -= &c[k] * &powers[k].coeffs[m];
                }
            }
            c[m] = s / &powers[m].coeffs[m];
        }
        Ok(Series { coeffs: c })
    }

    /// Square root with constant term 1: `s` with `s * s == self` up to truncation.
    pub fn sqrt1(&self) -> Result<Series> {
        let n = self.order();
        if n == 0 || !self.coeffs[0].is_one() {
            return Err(Error::SqrtConstantNotOne);
        }
        let mut s = vec![Rational::zero(); n];
        s[0] = Rational::one();
        for i in 1..n {
            let mut acc = self.coeffs[i].clone();
            for k in 1..i {
                acc -= &s[k] * &s[i - k];
            }
            s[i] = acc / int(2);
        }
        Ok(Series { coeffs: s })
    }

    /// Interpolates zeros: the result has coefficient `a_n` at `x^{2n}`.
    ///
    /// The order doubles, capped at [`MAX_ORDER`].
    pub fn aerate(&self) -> Series {
        let n = (self.order() * 2).min(MAX_ORDER);
        let mut coeffs = vec![Rational::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            if 2 * i < n {
                coeffs[2 * i] = c.clone();
            }
        }
        Series { coeffs }
    }
}

/// Coefficientwise equality up to the shorter truncation order.
impl PartialEq for Series {
    fn eq(&self, other: &Self) -> bool {
        let n = self.order().min(other.order());
        self.coeffs[..n] == other.coeffs[..n]
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if wrote {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let mag = c.abs();
            if i == 0 {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                if i == 1 {
                    write!(f, "x")?;
                } else {
                    write!(f, "x^{i}")?;
                }
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        write!(f, " + O(x^{})", self.order())
    }
}

impl Add for &Series {
    type Output = Series;
    fn add(self, rhs: &Series) -> Series {
        Series::add(self, rhs)
    }
}

impl Sub for &Series {
    type Output = Series;
    fn sub(self, rhs: &Series) -> Series {
        Series::sub(self, rhs)
    }
}

impl Mul for &Series {
    type Output = Series;
    fn mul(self, rhs: &Series) -> Series {
        Series::mul(self, rhs)
    }
}

impl Neg for &Series {
    type Output = Series;
    fn neg(self) -> Series {
        Series::neg(self)
    }
}
