//! Integer sequences, built-in families, and the symmetric extension
//! `a_{-n} = a_n` used by the Toeplitz-plus-Hankel constructions.

use num_integer::binomial;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{BigInt, Rational};
use crate::series::Series;

/// The `n`-th Fibonacci number (`F_0 = 0`).
pub fn fibonacci(n: usize) -> BigInt {
    let (mut a, mut b) = (BigInt::zero(), BigInt::one());
    for _ in 0..n {
        let next = &a + &b;
        a = b;
        b = next;
    }
    a
}

/// The `n`-th Jacobsthal number (`J_0 = 0`).
///
/// Computed by the recurrence `J_n = J_{n-1} + 2 J_{n-2}` and checked against
/// the closed form `(2^n - (-1)^n) / 3`.
pub fn jacobsthal(n: usize) -> BigInt {
    let (mut a, mut b) = (BigInt::zero(), BigInt::one());
    for _ in 0..n {
        let next = &b + 2 * &a;
        a = b;
        b = next;
    }
    let sign = if n % 2 == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    };
    let closed = ((BigInt::one() << n) - sign) / BigInt::from(3);
    assert_eq!(a, closed, "Jacobsthal closed form disagrees at n = {n}");
    a
}

/// The `n`-th Catalan number.
pub fn catalan(n: usize) -> BigInt {
    binomial(BigInt::from(2 * n), BigInt::from(n)) / BigInt::from(n + 1)
}

/// The `n`-th term of the `r`-family `[x^n] x / (1 - x - r x^2)`.
///
/// Evaluates both the recurrence and the binomial sum
/// `sum_k binom(n-k-1, k) r^k` and checks that they agree; `r = 1` gives the
/// Fibonacci numbers and `r = 2` the Jacobsthal numbers.
pub fn gen_r(n: usize, r: i64) -> BigInt {
    let rb = BigInt::from(r);
    let (mut a, mut b) = (BigInt::zero(), BigInt::one());
    for _ in 0..n {
        let next = &b + &rb * &a;
        a = b;
        b = next;
    }
    let mut sum = BigInt::zero();
    if n >= 1 {
        let mut rpow = BigInt::one();
        for k in 0..=(n - 1) / 2 {
            sum += binomial(BigInt::from(n - k - 1), BigInt::from(k)) * &rpow;
            rpow *= &rb;
        }
    }
    assert_eq!(a, sum, "gen_r identity fails at n = {n}, r = {r}");
    a
}

/// A finite sequence of exact rational terms with symmetric-extension access.
#[derive(Clone, Debug, PartialEq)]
pub struct Seq {
    terms: Vec<Rational>,
}

impl Seq {
    pub fn from_terms(terms: Vec<Rational>) -> Self {
        Seq { terms }
    }

    pub fn from_ints(terms: &[i64]) -> Self {
        Seq {
            terms: terms.iter().map(|&t| crate::rational::int(t)).collect(),
        }
    }

    /// The coefficient sequence of a generating function.
    pub fn from_gf(s: &Series) -> Self {
        Seq {
            terms: s.coeffs().to_vec(),
        }
    }

    pub fn fibonacci(len: usize) -> Self {
        Seq {
            terms: (0..len).map(|n| Rational::from(fibonacci(n))).collect(),
        }
    }

    pub fn jacobsthal(len: usize) -> Self {
        Seq {
            terms: (0..len).map(|n| Rational::from(jacobsthal(n))).collect(),
        }
    }

    pub fn catalan(len: usize) -> Self {
        Seq {
            terms: (0..len).map(|n| Rational::from(catalan(n))).collect(),
        }
    }

    pub fn gen_r(len: usize, r: i64) -> Self {
        Seq {
            terms: (0..len).map(|n| Rational::from(gen_r(n, r))).collect(),
        }
    }

    /// The delta sequence `1, 0, 0, ...` (the sequence with `0^n = [n = 0]`).
    pub fn delta(len: usize) -> Self {
        let mut terms = vec![Rational::zero(); len];
        if len > 0 {
            terms[0] = Rational::one();
        }
        Seq { terms }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[Rational] {
        &self.terms
    }

    pub fn term(&self, n: usize) -> Result<&Rational> {
        self.terms.get(n).ok_or(Error::InsufficientTerms {
            needed: n + 1,
            have: self.len(),
        })
    }

    /// Symmetric-extension access: `ext(i) = term(|i|)`.
    pub fn ext(&self, i: i64) -> Result<&Rational> {
        let idx = usize::try_from(i.unsigned_abs()).expect("index fits in usize");
        self.term(idx)
    }
}
