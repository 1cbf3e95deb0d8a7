//! The rectangular transform matrix `B`, the four equivalent forms of the
//! induced sequence transform, and the generating function of the image.
//!
//! Row `n` of `B` has `n + 2` entries; the transform reads one term past the
//! main diagonal, so producing `count` image terms requires `count + 1` input
//! terms. The four formulas below are algebraically equivalent and are kept
//! as independent routes so they can check one another.

use num_integer::binomial;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::Mat;
use crate::rational::{BigInt, Rational};
use crate::riordan::Riordan;
use crate::seq::Seq;
use crate::series::Series;

/// `binom(n, floor(j/2))`, zero outside `0..=n`.
fn binom_floor_half(n: usize, j: i64) -> BigInt {
    let k = j.div_euclid(2);
    if k < 0 || k > n as i64 {
        BigInt::zero()
    } else {
        binomial(BigInt::from(n), BigInt::from(k))
    }
}

/// Entry `(n, k)` of the transform matrix:
/// `binom(n, floor((n-k)/2)) + binom(n, floor((n-k+1)/2)) - binom(n, floor(n/2)) * 0^k`,
/// zero for `k > n + 1`.
pub fn b_entry(n: usize, k: usize) -> BigInt {
    if k > n + 1 {
        return BigInt::zero();
    }
    let d = n as i64 - k as i64;
    let mut v = binom_floor_half(n, d) + binom_floor_half(n, d + 1);
    if k == 0 {
        v -= binomial(BigInt::from(n), BigInt::from(n / 2));
    }
    v
}

/// The `n x (n + 2)` transform matrix from the entry formula.
pub fn b_matrix(n: usize) -> Mat {
    Mat::from_fn(n, n + 2, |i, k| Rational::from(b_entry(i, k)))
}

/// Slice of the transpose of the `(1+x, x)` array: ones on the diagonal and
/// the superdiagonal.
fn shifted_pair_transpose(rows: usize, cols: usize) -> Mat {
    Mat::from_fn(rows, cols, |i, j| {
        if j == i || j == i + 1 {
            Rational::one()
        } else {
            Rational::zero()
        }
    })
}

/// The array `((1-x)/(1+x^2), x/(1+x^2))^{-1}`, whose `(n, k)` entry is
/// `binom(n, floor((n-k)/2))`.
pub fn l_pair(order: usize) -> Result<Riordan> {
    l_inverse_pair(order)?.inverse()
}

/// The coefficient-array side `((1-x)/(1+x^2), x/(1+x^2))`.
pub fn l_inverse_pair(order: usize) -> Result<Riordan> {
    Riordan::new(
        Series::rational_fn(&[1, -1], &[1, 0, 1], order)?,
        Series::rational_fn(&[0, 1], &[1, 0, 1], order)?,
    )
}

/// The aerated Catalan series `c(x^2)`.
pub fn catalan_x2(order: usize) -> Series {
    Series::catalan(order / 2 + 1).aerate().truncated(order)
}

/// The series `x * c(x^2)`, the reversion of `x/(1+x^2)`.
pub fn x_catalan_x2(order: usize) -> Series {
    Series::catalan(order / 2 + 1)
        .aerate()
        .mul_x()
        .truncated(order)
}

/// The pair `(c(x^2), x*c(x^2))`, built directly from the Catalan series.
pub fn catalan_pair(order: usize) -> Result<Riordan> {
    Riordan::new(catalan_x2(order), x_catalan_x2(order))
}

/// The matrix `(1/(1-x), x) * (1+x, x)^t` as an `n x (n + 2)` slice.
///
/// Acting on a sequence it returns `sum_{k<=n} a_k + sum_{1<=k<=n+1} a_k`.
pub fn t_matrix(n: usize) -> Result<Mat> {
    let ones = Riordan::sequence_array(Series::rational_fn(&[1], &[1, -1], n.max(2))?)?
        .to_matrix(n)?
        .to_mat();
    Ok(ones.mul(&shifted_pair_transpose(n, n + 2)))
}

/// `B` as the product `L * (1+x, x)^t`.
pub fn b_matrix_via_conjugation(n: usize) -> Result<Mat> {
    let l = l_pair(n.max(2))?.to_matrix(n)?;
    Ok(l.to_mat().mul(&shifted_pair_transpose(n, n + 2)))
}

/// `B` as the product `(1/(1+x^2), x/(1+x^2))^{-1} * T`.
pub fn b_matrix_via_catalan(n: usize) -> Result<Mat> {
    let c = catalan_pair(n.max(2))?.to_matrix(n)?;
    Ok(c.to_mat().mul(&t_matrix(n)?))
}

/// `B` via the array tied to the Chebyshev polynomials of the first kind:
/// `((1-x^2)/(1+x^2), x/(1+x^2))^{-1} * (1+x, x) * (1+x, x)^t`.
pub fn b_matrix_via_chebyshev(n: usize) -> Result<Mat> {
    let order = n.max(2);
    let w = Riordan::new(
        Series::rational_fn(&[1, 0, -1], &[1, 0, 1], order)?,
        Series::rational_fn(&[0, 1], &[1, 0, 1], order)?,
    )?
    .inverse()?
    .to_matrix(n)?;
    let shift = Riordan::new(Series::from_ints(&[1, 1], order), Series::x(order))?.to_matrix(n)?;
    Ok(w.to_mat()
        .mul(&shift.to_mat())
        .mul(&shifted_pair_transpose(n, n + 2)))
}

fn check_terms(a: &Seq, count: usize) -> Result<()> {
    if count == 0 {
        return Ok(());
    }
    let needed = count + 1;
    if a.len() < needed {
        return Err(Error::InsufficientTerms {
            needed,
            have: a.len(),
        });
    }
    Ok(())
}

/// The transform via the matrix entries: `b_n = sum_{k=0}^{n+1} b_{n,k} a_k`.
pub fn transform_matrix(a: &Seq, count: usize) -> Result<Seq> {
    check_terms(a, count)?;
    let mut out = Vec::with_capacity(count);
    for n in 0..count {
        let mut s = Rational::zero();
        for k in 0..=n + 1 {
            let b = b_entry(n, k);
            if !b.is_zero() {
                s += Rational::from(b) * a.term(k)?;
            }
        }
        out.push(s);
    }
    Ok(Seq::from_terms(out))
}

/// The symmetric-extension binomial form:
/// `b_n = sum_{k=0}^{n} binom(n, k) (a_{n-2k} + a_{n-2k+1})` with `a_{-m} = a_m`.
pub fn transform_binomial(a: &Seq, count: usize) -> Result<Seq> {
    check_terms(a, count)?;
    let mut out = Vec::with_capacity(count);
    for n in 0..count {
        let ni = n as i64;
        let mut s = Rational::zero();
        for k in 0..=n {
            let c = Rational::from(binomial(BigInt::from(n), BigInt::from(k)));
            let ki = k as i64;
            s += c * (a.ext(ni - 2 * ki)? + a.ext(ni - 2 * ki + 1)?);
        }
        out.push(s);
    }
    Ok(Seq::from_terms(out))
}

/// The gathered form:
/// `b_n = sum_{k=0}^{floor((n-1)/2)} binom(n, k) (a_{n-2k+1} + 2 a_{n-2k} + a_{n-2k-1})
///        + [n even] binom(n, floor(n/2)) (a_0 + a_1)`.
pub fn transform_gathered(a: &Seq, count: usize) -> Result<Seq> {
    check_terms(a, count)?;
    let mut out = Vec::with_capacity(count);
    for n in 0..count {
        let mut s = Rational::zero();
        if n >= 1 {
            for k in 0..=(n - 1) / 2 {
                let c = Rational::from(binomial(BigInt::from(n), BigInt::from(k)));
                let m = n - 2 * k;
                s += c * (a.term(m + 1)? + Rational::from(BigInt::from(2)) * a.term(m)?
                    + a.term(m - 1)?);
            }
        }
        if n % 2 == 0 {
            let c = Rational::from(binomial(BigInt::from(n), BigInt::from(n / 2)));
            s += c * (a.term(0)? + a.term(1)?);
        }
        out.push(s);
    }
    Ok(Seq::from_terms(out))
}

/// The Catalan-weighted form, with weights from the aerated Catalan array:
/// `b_n = sum_k binom(n+1, (n-k)/2) (k+1)/(n+1) [n-k even] (S_k + S'_k)` where
/// `S_k = sum_{j<=k} a_j` and `S'_k = sum_{1<=j<=k+1} a_j`.
///
/// Both displayed variants of the bracket (`S_k + S'_k` and
/// `2 S_k + a_{k+1} - a_0`) are evaluated and checked against each other.
pub fn transform_catalan(a: &Seq, count: usize) -> Result<Seq> {
    check_terms(a, count)?;
    let mut out = Vec::with_capacity(count);
    for n in 0..count {
        let mut s = Rational::zero();
        let mut prefix = Rational::zero(); // sum_{j=0}^{k} a_j
        for k in 0..=n {
            prefix += a.term(k)?;
            if (n - k) % 2 != 0 {
                continue;
            }
            let weight = Rational::from(binomial(BigInt::from(n + 1), BigInt::from((n - k) / 2)))
                * Rational::new(BigInt::from(k + 1), BigInt::from(n + 1));
            // S_k + S'_k, with S'_k = S_k - a_0 + a_{k+1}
            let sums = {
                let mut shifted = prefix.clone() - a.term(0)?;
                shifted += a.term(k + 1)?;
                &prefix + &shifted
            };
            let collapsed = &prefix + &prefix - a.term(0)? + a.term(k + 1)?;
            assert_eq!(sums, collapsed, "the two bracket variants must agree");
            s += weight * sums;
        }
        out.push(s);
    }
    Ok(Seq::from_terms(out))
}

/// Generating function of the image sequence:
/// `((1 + x c(x^2)) f(x c(x^2)) - a_0) / (x (1 - x c(x^2)))`.
///
/// `a0` must equal `f(0)`. The result is checked against the second route
/// `((1-x)/(1+x^2), x/(1+x^2))^{-1}` applied to `((1+x) f - a_0)/x`, and its
/// coefficients match the termwise transform of the coefficient sequence.
pub fn image_gf(f: &Series, a0: &Rational, order: usize) -> Result<Series> {
    let m = f.order();
    if m < order + 1 {
        return Err(Error::OrderTooSmall {
            needed: order + 1,
            order: m,
        });
    }
    if f.coeff(0)? != a0 {
        return Err(Error::ImageConstantMismatch);
    }
    let u = x_catalan_x2(m);
    let one = Series::one(m);
    let num = one.add(&u).mul(&f.compose(&u)?).sub(&Series::constant(a0.clone(), m));
    let direct = num.div_x()?.div(&one.sub(&u))?;

    let arg = one
        .add(&Series::x(m))
        .mul(f)
        .sub(&Series::constant(a0.clone(), m))
        .div_x()?;
    let via_l = l_pair(m)?.apply(&arg);
    assert_eq!(
        direct.truncated(order),
        via_l.truncated(order),
        "the two image g.f. routes must agree"
    );
    Ok(direct.truncated(order))
}

/// The transform computed through the image generating function.
pub fn transform_gf(a: &Seq, count: usize) -> Result<Seq> {
    check_terms(a, count)?;
    if count == 0 {
        return Ok(Seq::from_terms(vec![]));
    }
    let f = Series::from_coeffs(a.terms().to_vec());
    let a0 = f.coeff(0)?.clone();
    Ok(Seq::from_gf(&image_gf(&f, &a0, count)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn mat_rows(m: &Mat) -> Vec<Vec<i64>> {
        m.to_row_vecs()
            .iter()
            .map(|r| {
                r.iter()
                    .map(|v| i64::try_from(v.to_integer()).unwrap())
                    .collect()
            })
            .collect()
    }

    #[test]
    fn b_entry_displayed_rows() {
        let expected: Vec<Vec<i64>> = vec![
            vec![1, 1],
            vec![1, 2, 1],
            vec![2, 3, 2, 1],
            vec![3, 6, 4, 2, 1],
            vec![6, 10, 8, 5, 2, 1],
            vec![10, 20, 15, 10, 6, 2, 1],
        ];
        for (n, row) in expected.iter().enumerate() {
            let got: Vec<BigInt> = (0..n + 2).map(|k| b_entry(n, k)).collect();
            assert_eq!(got, row.iter().map(|&v| BigInt::from(v)).collect::<Vec<_>>());
        }
        assert_eq!(b_entry(0, 0), BigInt::one());
        for n in 0..12 {
            assert_eq!(b_entry(n, n + 1), BigInt::one(), "superdiagonal at {n}");
            assert_eq!(b_entry(n, n + 2), BigInt::zero());
        }
    }

    #[test]
    fn b_matrix_first_column() {
        let m = b_matrix(6);
        let col: Vec<i64> = (0..6).map(|i| i64::try_from(m.get(i, 0).to_integer()).unwrap()).collect();
        assert_eq!(col, vec![1, 1, 2, 3, 6, 10]);
    }

    #[test]
    fn b_matrix_routes_agree() {
        for n in [1usize, 2, 5, 8] {
            let direct = b_matrix(n);
            assert_eq!(b_matrix_via_conjugation(n).unwrap(), direct, "conjugation n={n}");
            assert_eq!(b_matrix_via_catalan(n).unwrap(), direct, "catalan n={n}");
            assert_eq!(b_matrix_via_chebyshev(n).unwrap(), direct, "chebyshev n={n}");
        }
    }

    #[test]
    fn t_matrix_display_and_action() {
        let t = t_matrix(5).unwrap();
        assert_eq!(
            mat_rows(&t),
            vec![
                vec![1, 1, 0, 0, 0, 0, 0],
                vec![1, 2, 1, 0, 0, 0, 0],
                vec![1, 2, 2, 1, 0, 0, 0],
                vec![1, 2, 2, 2, 1, 0, 0],
                vec![1, 2, 2, 2, 2, 1, 0],
            ]
        );
        // action: (T a)_n = 2 * sum_{k<=n} a_k + a_{n+1} - a_0
        let a = Seq::from_ints(&[3, -1, 4, 1, -5, 9, 2]);
        let col = Mat::from_fn(7, 1, |i, _| a.term(i).unwrap().clone());
        let out = t.mul(&col);
        for n in 0..5usize {
            let prefix: Rational = (0..=n).map(|k| a.term(k).unwrap().clone()).sum();
            let expect = &prefix + &prefix + a.term(n + 1).unwrap() - a.term(0).unwrap();
            assert_eq!(out.get(n, 0), &expect, "row {n}");
        }
    }

    #[test]
    fn fibonacci_image_golden() {
        let b = transform_matrix(&Seq::fibonacci(12), 11).unwrap();
        let expect = Seq::from_ints(&[1, 3, 7, 17, 39, 91, 207, 475, 1075, 2445, 5515]);
        assert_eq!(b, expect);
        assert_eq!(transform_binomial(&Seq::fibonacci(12), 11).unwrap(), expect);
        assert_eq!(transform_gathered(&Seq::fibonacci(12), 11).unwrap(), expect);
        assert_eq!(transform_catalan(&Seq::fibonacci(12), 11).unwrap(), expect);
        assert_eq!(transform_gf(&Seq::fibonacci(12), 11).unwrap(), expect);
    }

    #[test]
    fn jacobsthal_image_golden() {
        let b = transform_matrix(&Seq::jacobsthal(8), 6).unwrap();
        assert_eq!(b, Seq::from_ints(&[1, 3, 8, 21, 54, 138]));
        assert_eq!(transform_catalan(&Seq::jacobsthal(8), 6).unwrap(), b);
    }

    #[test]
    fn edge_inputs() {
        let zero = Seq::from_ints(&[0; 10]);
        assert_eq!(transform_matrix(&zero, 8).unwrap(), Seq::from_ints(&[0; 8]));
        // delta picks out the first column of B
        let delta = Seq::delta(8);
        assert_eq!(
            transform_matrix(&delta, 6).unwrap(),
            Seq::from_ints(&[1, 1, 2, 3, 6, 10])
        );
        assert_eq!(
            transform_catalan(&delta, 6).unwrap(),
            Seq::from_ints(&[1, 1, 2, 3, 6, 10])
        );
        // n = 0 term is a_0 + a_1 for the binomial form
        let a = Seq::from_ints(&[5, -3, 2]);
        assert_eq!(
            transform_binomial(&a, 1).unwrap().term(0).unwrap(),
            &int(2)
        );
        // constant sequence: b_n = c * 2^{n+1}
        let c = Seq::from_ints(&[7; 14]);
        let b = transform_binomial(&c, 12).unwrap();
        for n in 0..12usize {
            assert_eq!(b.term(n).unwrap(), &int(7 * (1i64 << (n + 1))));
        }
        assert!(matches!(
            transform_matrix(&Seq::fibonacci(5), 8),
            Err(Error::InsufficientTerms { needed: 9, have: 5 })
        ));
    }

    #[test]
    fn image_gf_fibonacci() {
        let f = Series::rational_fn(&[0, 1], &[1, -1, -1], 40).unwrap();
        let img = image_gf(&f, &int(0), 24).unwrap();
        assert_eq!(
            Seq::from_gf(&img.truncated(11)),
            Seq::from_ints(&[1, 3, 7, 17, 39, 91, 207, 475, 1075, 2445, 5515])
        );
        // closed form (1 - 4x^2 + x sqrt(1-4x^2)) / ((1-2x)(1-5x^2))
        let root = Series::from_ints(&[1, 0, -4], 40).sqrt1().unwrap();
        let num = Series::from_ints(&[1, 0, -4], 40).add(&root.mul_x().truncated(40));
        let den = Series::from_ints(&[1, -2], 40).mul(&Series::from_ints(&[1, 0, -5], 40));
        assert_eq!(num.div(&den).unwrap().truncated(24), img);
    }

    #[test]
    fn image_gf_jacobsthal() {
        let f = Series::rational_fn(&[0, 1], &[1, -1, -2], 40).unwrap();
        let img = image_gf(&f, &int(0), 24).unwrap();
        assert_eq!(
            Seq::from_gf(&img.truncated(6)),
            Seq::from_ints(&[1, 3, 8, 21, 54, 138])
        );
        // closed form (sqrt(1-4x^2) + 3(1-2x)) / (2 (2-9x+10x^2))
        let root = Series::from_ints(&[1, 0, -4], 40).sqrt1().unwrap();
        let num = root.add(&Series::from_ints(&[3, -6], 40));
        let den = Series::from_ints(&[4, -18, 20], 40);
        assert_eq!(num.div(&den).unwrap().truncated(24), img);
        // third route: (1/(1+x^2), x/(1+x^2))^{-1} applied to ((1+x) f - a0)/(x (1-x))
        let arg = Series::one(40)
            .add(&Series::x(40))
            .mul(&f)
            .div_x()
            .unwrap()
            .div(&Series::from_ints(&[1, -1], 40))
            .unwrap();
        let via_catalan = catalan_pair(39).unwrap().apply(&arg);
        assert_eq!(via_catalan.truncated(24), img);
    }

    #[test]
    fn image_gf_edges() {
        let zero = Series::zero(20);
        assert!(image_gf(&zero, &int(0), 12).unwrap().is_zero());
        assert!(matches!(
            image_gf(&Series::one(20), &int(3), 12),
            Err(Error::ImageConstantMismatch)
        ));
        assert!(matches!(
            image_gf(&Series::one(8), &int(1), 12),
            Err(Error::OrderTooSmall { needed: 13, order: 8 })
        ));
    }

    #[test]
    fn jacobsthal_closed_binomial_identity() {
        // sum_k binom(n, floor((n-k)/2)) 2^k equals the transform of J_n
        let b = transform_matrix(&Seq::jacobsthal(22), 21).unwrap();
        for n in 0..=20usize {
            let mut s = BigInt::zero();
            for k in 0..=n {
                s += binom_floor_half(n, n as i64 - k as i64) * (BigInt::one() << k);
            }
            assert_eq!(&Rational::from(s), b.term(n).unwrap(), "n = {n}");
        }
    }
}
