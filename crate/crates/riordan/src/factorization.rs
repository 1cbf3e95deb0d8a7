//! Hankel and symmetric Toeplitz-plus-Hankel matrices, exact LDU (LDL^t)
//! factorization, Hankel transforms, J-fraction expansions, and the
//! conjugation identity `H = L * A * L^t` with the induced factorization
//! `A = (L^{-1} Lc) * D * (L^{-1} Lc)^t`.

use num_traits::{One, Zero};

use crate::btransform::{l_pair, transform_binomial};
use crate::error::{Error, Result};
use crate::matrix::{Mat, SymMatrix, TriMatrix};
use crate::rational::Rational;
use crate::seq::Seq;
use crate::series::Series;

/// A factorization `M = L * diag(D) * L^t` with unit-lower-triangular `L`.
#[derive(Clone, Debug, PartialEq)]
pub struct LduFactorization {
    pub l: TriMatrix,
    pub d: Vec<Rational>,
}

impl LduFactorization {
    /// Recomputes `L * diag(D) * L^t`.
    pub fn reconstruct(&self) -> SymMatrix {
        let n = self.l.dim();
        SymMatrix::from_fn(n, |i, j| {
            let mut s = Rational::zero();
            for k in 0..=j {
                let a = self.l.get(i, k);
                let b = self.l.get(j, k);
                if !a.is_zero() && !b.is_zero() {
                    s += a * b * &self.d[k];
                }
            }
            s
        })
    }
}

/// The `n x n` Hankel matrix with entry `(i, j) = b_{i+j}`.
pub fn hankel_matrix(b: &Seq, n: usize) -> Result<SymMatrix> {
    let needed = if n == 0 { 0 } else { 2 * n - 1 };
    if b.len() < needed {
        return Err(Error::InsufficientTerms {
            needed,
            have: b.len(),
        });
    }
    Ok(SymMatrix::from_fn(n, |i, j| {
        b.term(i + j).expect("length checked").clone()
    }))
}

/// The `n x n` symmetric Toeplitz-plus-Hankel matrix with entry
/// `(i, j) = a_{|i-j|} + a_{i+j+1}` (the Toeplitz part reads the symmetric
/// extension `a_{-m} = a_m`).
pub fn tph_matrix(a: &Seq, n: usize) -> Result<SymMatrix> {
    let needed = 2 * n;
    if a.len() < needed {
        return Err(Error::InsufficientTerms {
            needed,
            have: a.len(),
        });
    }
    Ok(SymMatrix::from_fn(n, |i, j| {
        let toeplitz = a.ext(i as i64 - j as i64).expect("length checked");
        let hankel = a.term(i + j + 1).expect("length checked");
        toeplitz + hankel
    }))
}

/// Exact LDL^t factorization by symmetric Gaussian elimination, no pivoting.
///
/// `D_k` equals the ratio of consecutive leading principal minors, so the
/// factorization exists exactly when those minors are nonzero; a vanishing
/// pivot is reported with the order of the offending minor. A zero in the
/// final pivot position is allowed since nothing is divided by it.
pub fn ldu(m: &SymMatrix) -> Result<LduFactorization> {
    let n = m.dim();
    let mut l = vec![vec![Rational::zero(); n]; n];
    let mut d = vec![Rational::zero(); n];
    for j in 0..n {
        let mut pivot = m.get(j, j).clone();
        for k in 0..j {
            if !l[j][k].is_zero() {
                pivot -= &l[j][k] * &l[j][k] * &d[k];
            }
        }
        if pivot.is_zero() && j + 1 < n {
            return Err(Error::SingularMinor { order: j + 1 });
        }
        l[j][j] = Rational::one();
        for i in j + 1..n {
            let mut s = m.get(i, j).clone();
            for k in 0..j {
                if !l[i][k].is_zero() && !l[j][k].is_zero() {
                    s -= &l[i][k] * &l[j][k] * &d[k];
                }
            }
            l[i][j] = s / &pivot;
        }
        d[j] = pivot;
    }
    let l = TriMatrix::from_fn(n, |i, j| l[i][j].clone());
    Ok(LduFactorization { l, d })
}

/// Fraction-free (Bareiss) determinant of a square matrix.
pub fn det_bareiss(m: &Mat) -> Rational {
    assert_eq!(m.rows(), m.cols(), "determinant needs a square matrix");
    let n = m.rows();
    if n == 0 {
        return Rational::one();
    }
    let mut a = m.to_row_vecs();
    let mut negate = false;
    let mut prev = Rational::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return Rational::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
            }
            a[i][k] = Rational::zero();
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// Hankel transform: `h_k = det (b_{i+j})_{i,j=0..k}` for `k <= n`.
///
/// When the LDU factorization of the full matrix exists, `h_k` is the running
/// product of the pivots; otherwise each determinant is computed by the
/// fraction-free elimination, which always exists.
pub fn hankel_transform(b: &Seq, n: usize) -> Result<Vec<Rational>> {
    let needed = 2 * n + 1;
    if b.len() < needed {
        return Err(Error::InsufficientTerms {
            needed,
            have: b.len(),
        });
    }
    let h = hankel_matrix(b, n + 1)?;
    match ldu(&h) {
        Ok(fact) => {
            let mut out = Vec::with_capacity(n + 1);
            let mut prod = Rational::one();
            for dk in &fact.d {
                prod *= dk;
                out.push(prod.clone());
            }
            Ok(out)
        }
        Err(Error::SingularMinor { .. }) => {
            let full = h.to_mat();
            Ok((0..=n)
                .map(|k| {
                    let minor = Mat::from_fn(k + 1, k + 1, |i, j| full.get(i, j).clone());
                    det_bareiss(&minor)
                })
                .collect())
        }
        Err(e) => Err(e),
    }
}

/// Coefficients of the continued fraction
/// `a0 / (1 - alpha_0 x - beta_1 x^2 / (1 - alpha_1 x - beta_2 x^2 / ...))`.
#[derive(Clone, Debug, PartialEq)]
pub struct JFraction {
    a0: Rational,
    alphas: Vec<Rational>,
    betas: Vec<Rational>,
}

impl JFraction {
    pub fn new(a0: Rational, alphas: Vec<Rational>, betas: Vec<Rational>) -> Self {
        JFraction { a0, alphas, betas }
    }

    pub fn a0(&self) -> &Rational {
        &self.a0
    }

    pub fn alphas(&self) -> &[Rational] {
        &self.alphas
    }

    /// `beta_1, beta_2, ...`
    pub fn betas(&self) -> &[Rational] {
        &self.betas
    }

    pub fn depth(&self) -> usize {
        self.alphas.len()
    }

    /// Expands the truncated fraction back into a series.
    ///
    /// The expansion agrees with the source of [`jfraction`] up to order
    /// `2 * depth - 1`.
    pub fn reconstruct(&self, order: usize) -> Series {
        assert!(order > 0, "reconstruction needs a positive order");
        // 1 - alpha * x at the working order
        let linear = |alpha: &Rational| {
            let mut c = vec![Rational::zero(); order];
            c[0] = Rational::one();
            if order > 1 {
                c[1] = -alpha.clone();
            }
            Series::from_coeffs(c)
        };
        if self.alphas.is_empty() {
            return Series::constant(self.a0.clone(), order);
        }
        let one = Series::one(order);
        let last = self.alphas.len() - 1;
        let mut u = one
            .div(&linear(&self.alphas[last]))
            .expect("constant term is 1");
        for level in (0..last).rev() {
            let tail = u.scale(&self.betas[level]).mul_x().mul_x().truncated(order);
            let den = linear(&self.alphas[level]).sub(&tail);
            u = one.div(&den).expect("constant term is 1");
        }
        u.scale(&self.a0)
    }

    /// Hankel transform from the fraction coefficients:
    /// `h_n = a0^{n+1} * prod_{k=1}^{n} beta_k^{n+1-k}`.
    pub fn hankel(&self, n: usize) -> Result<Vec<Rational>> {
        if self.betas.len() < n {
            return Err(Error::InsufficientTerms {
                needed: n,
                have: self.betas.len(),
            });
        }
        let mut out = Vec::with_capacity(n + 1);
        let mut h = self.a0.clone();
        out.push(h.clone());
        for m in 1..=n {
            // h_m = h_{m-1} * a0 * beta_1 * ... * beta_m
            h *= &self.a0;
            for beta in &self.betas[..m] {
                h *= beta;
            }
            out.push(h.clone());
        }
        Ok(out)
    }
}

/// See [`JFraction::hankel`].
pub fn hankel_from_jfraction(j: &JFraction, n: usize) -> Result<Vec<Rational>> {
    j.hankel(n)
}

/// Expands `s` as a J-fraction of the given depth: `depth` alpha coefficients
/// and `depth - 1` betas.
///
/// Works by iterated series inversion: from `v_k`, set `w = 1 - 1/v_k`, read
/// `alpha_k = [x] w` and `beta_{k+1} = [x^2](w - alpha_k x)`, and continue
/// with `v_{k+1} = (w - alpha_k x) / (beta_{k+1} x^2)`. A vanishing beta means
/// the series is not normal; the error reports how deep the expansion got.
pub fn jfraction(s: &Series, depth: usize) -> Result<JFraction> {
    if s.order() == 0 || s.coeffs()[0].is_zero() {
        return Err(Error::ConstantTermZero {
            op: "J-fraction expansion",
        });
    }
    if s.order() < 2 * depth + 1 {
        return Err(Error::OrderTooSmall {
            needed: 2 * depth + 1,
            order: s.order(),
        });
    }
    let a0 = s.coeffs()[0].clone();
    let mut alphas = Vec::with_capacity(depth);
    let mut betas = Vec::with_capacity(depth.saturating_sub(1));
    let mut v = s.scale(&(Rational::one() / &a0));
    for k in 0..depth {
        let w = Series::one(v.order()).sub(&Series::one(v.order()).div(&v)?);
        alphas.push(w.coeffs()[1].clone());
        if k + 1 == depth {
            break;
        }
        let beta = w.coeffs()[2].clone();
        if beta.is_zero() {
            return Err(Error::NotNormal { attained: k + 1 });
        }
        // (w - alpha x) / (beta x^2): drop the two known-zero coefficients
        let tail = Series::from_coeffs(w.coeffs()[2..].to_vec());
        v = tail.scale(&(Rational::one() / &beta));
        betas.push(beta);
    }
    Ok(JFraction { a0, alphas, betas })
}

/// Witness for a failed conjugation check: the first differing entry.
#[derive(Clone, Debug, PartialEq)]
pub struct ConjugationWitness {
    pub row: usize,
    pub col: usize,
    /// Entry of `L * A * L^t`.
    pub product: Rational,
    /// Entry of the Hankel matrix `H`.
    pub hankel: Rational,
}

/// Checks `H = L * A * L^t` exactly, where `b` is the binomial-form transform
/// of `a`, `H` its Hankel matrix, `A` the Toeplitz-plus-Hankel matrix of `a`,
/// and `L` the array with entries `binom(i, floor((i-k)/2))`.
///
/// Returns `None` when the identity holds and the first differing entry
/// otherwise.
pub fn verify_conjugation(a: &Seq, n: usize) -> Result<Option<ConjugationWitness>> {
    let b = transform_binomial(a, if n == 0 { 0 } else { 2 * n - 1 })?;
    let h = hankel_matrix(&b, n)?;
    let a_mat = tph_matrix(a, n)?;
    let l = l_pair(n.max(2))?.to_matrix(n)?;
    let product = l.conjugate(&a_mat);
    Ok(first_mismatch(&product, &h))
}

fn first_mismatch(product: &SymMatrix, hankel: &SymMatrix) -> Option<ConjugationWitness> {
    let n = product.dim();
    for i in 0..n {
        for j in 0..n {
            if product.get(i, j) != hankel.get(i, j) {
                return Some(ConjugationWitness {
                    row: i,
                    col: j,
                    product: product.get(i, j).clone(),
                    hankel: hankel.get(i, j).clone(),
                });
            }
        }
    }
    None
}

/// LDU factorization of the Toeplitz-plus-Hankel matrix of `a`:
/// factor the Hankel matrix of the transform as `Lc * D * Lc^t` and return
/// `(L^{-1} Lc, D)`, which reconstructs `tph_matrix(a, n)` exactly.
pub fn tph_ldu(a: &Seq, n: usize) -> Result<LduFactorization> {
    let b = transform_binomial(a, if n == 0 { 0 } else { 2 * n - 1 })?;
    let h = hankel_matrix(&b, n)?;
    let fact = ldu(&h)?;
    let l_inv = l_pair(n.max(2))?.to_matrix(n)?.inverse()?;
    let result = LduFactorization {
        l: l_inv.mul(&fact.l),
        d: fact.d,
    };
    assert_eq!(
        result.reconstruct(),
        tph_matrix(a, n)?,
        "factorization must reconstruct the Toeplitz-plus-Hankel matrix"
    );
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::btransform::{catalan_x2, transform_matrix};
    use crate::rational::int;
    use crate::riordan::Riordan;

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| int(x)).collect()
    }

    fn fib_image(len: usize) -> Seq {
        transform_matrix(&Seq::fibonacci(len + 1), len).unwrap()
    }

    fn jac_image(len: usize) -> Seq {
        transform_matrix(&Seq::jacobsthal(len + 1), len).unwrap()
    }

    fn tri_rows(m: &TriMatrix) -> Vec<Vec<i64>> {
        (0..m.dim())
            .map(|i| {
                m.row(i)
                    .iter()
                    .map(|v| i64::try_from(v.to_integer()).unwrap())
                    .collect()
            })
            .collect()
    }

    #[test]
    fn hankel_matrix_golden() {
        let h = hankel_matrix(&fib_image(11), 6).unwrap();
        assert_eq!(h.to_mat().row(0), &ints(&[1, 3, 7, 17, 39, 91])[..]);
        assert_eq!(h.to_mat().row(1), &ints(&[3, 7, 17, 39, 91, 207])[..]);
        assert_eq!(h.get(5, 5), &int(5515));
        let hj = hankel_matrix(&jac_image(11), 6).unwrap();
        assert_eq!(hj.to_mat().row(0), &ints(&[1, 3, 8, 21, 54, 138])[..]);
        assert_eq!(hj.get(5, 5), &int(14088));
        let ones = hankel_matrix(&Seq::from_ints(&[1; 9]), 5).unwrap();
        assert!(ones.to_mat().to_row_vecs().iter().flatten().all(|v| v.is_one()));
        assert!(matches!(
            hankel_matrix(&Seq::fibonacci(4), 6),
            Err(Error::InsufficientTerms { needed: 11, have: 4 })
        ));
    }

    #[test]
    fn tph_matrix_golden() {
        let a = tph_matrix(&Seq::fibonacci(12), 6).unwrap();
        assert_eq!(a.to_mat().row(0), &ints(&[1, 2, 3, 5, 8, 13])[..]);
        // row 1 ends in 16 (= F_4 + F_7), forced by symmetry with entry (5, 1)
        assert_eq!(a.to_mat().row(1), &ints(&[2, 2, 4, 6, 10, 16])[..]);
        assert_eq!(a.to_mat().row(2), &ints(&[3, 4, 5, 9, 14, 23])[..]);
        let aj = tph_matrix(&Seq::jacobsthal(12), 6).unwrap();
        assert_eq!(aj.to_mat().row(0), &ints(&[1, 2, 4, 8, 16, 32])[..]);
        assert_eq!(aj.to_mat().row(1), &ints(&[2, 3, 6, 12, 24, 48])[..]);
        assert_eq!(aj.to_mat().row(2), &ints(&[4, 6, 11, 22, 44, 88])[..]);
        // delta: a_{|i-j|} + a_{i+j+1} = [i = j]
        let d = tph_matrix(&Seq::delta(12), 6).unwrap();
        assert_eq!(d.to_mat(), Mat::identity(6));
    }

    #[test]
    fn ldu_golden_diagonals() {
        let h = hankel_matrix(&fib_image(11), 6).unwrap();
        let fact = ldu(&h).unwrap();
        assert_eq!(fact.d, ints(&[1, -2, -2, -2, -2, -2]));
        assert!(fact.l.is_unit_diagonal());
        assert_eq!(fact.reconstruct(), h);

        let hj = hankel_matrix(&jac_image(11), 6).unwrap();
        let fj = ldu(&hj).unwrap();
        assert_eq!(fj.d, ints(&[1, -1, -1, -1, -1, -1]));
        assert_eq!(fj.reconstruct(), hj);

        let diag = SymMatrix::from_fn(1, |_, _| int(5));
        let f1 = ldu(&diag).unwrap();
        assert_eq!(f1.l, TriMatrix::identity(1));
        assert_eq!(f1.d, ints(&[5]));
    }

    #[test]
    fn ldu_reports_failing_minor() {
        // leading 2x2 minor of [[0, 1], [1, 0]] fails at order 1
        let m = SymMatrix::from_fn(2, |i, j| if i == j { int(0) } else { int(1) });
        assert!(matches!(ldu(&m), Err(Error::SingularMinor { order: 1 })));
    }

    #[test]
    fn curly_l_derived_rows() {
        // Derived LDU factor for the Fibonacci image. The printed row 3 in the
        // source material starts with 12; the factorization forces 17 since
        // column 0 must be the image sequence itself.
        let h = hankel_matrix(&fib_image(15), 8).unwrap();
        let fact = ldu(&h).unwrap();
        assert_eq!(
            tri_rows(&fact.l)[..6],
            vec![
                vec![1],
                vec![3, 1],
                vec![7, 2, 1],
                vec![17, 6, 2, 1],
                vec![39, 13, 7, 2, 1],
                vec![91, 33, 15, 8, 2, 1],
            ]
        );
        // Jacobsthal: the printed row 5 reads 138, 64, 27, 3, 1, 1; the
        // factorization gives 138, 64, 27, 11, 3, 1.
        let hj = hankel_matrix(&jac_image(15), 8).unwrap();
        let fj = ldu(&hj).unwrap();
        assert_eq!(
            tri_rows(&fj.l)[..6],
            vec![
                vec![1],
                vec![3, 1],
                vec![8, 3, 1],
                vec![21, 9, 3, 1],
                vec![54, 24, 10, 3, 1],
                vec![138, 64, 27, 11, 3, 1],
            ]
        );
    }

    #[test]
    fn jacobsthal_curly_l_is_riordan() {
        // ((1-3x+2x^2)/(1+x^2), x/(1+x^2))^{-1} equals the LDU factor of the
        // Jacobsthal image Hankel matrix.
        let pair = Riordan::new(
            Series::rational_fn(&[1, -3, 2], &[1, 0, 1], 24).unwrap(),
            Series::rational_fn(&[0, 1], &[1, 0, 1], 24).unwrap(),
        )
        .unwrap()
        .inverse()
        .unwrap();
        let hj = hankel_matrix(&jac_image(15), 8).unwrap();
        let fj = ldu(&hj).unwrap();
        assert_eq!(pair.to_matrix(8).unwrap(), fj.l);
    }

    #[test]
    fn hankel_transform_golden() {
        let hf = hankel_transform(&fib_image(17), 8).unwrap();
        for (n, h) in hf.iter().enumerate() {
            let expect = if n % 2 == 0 { 1i64 << n } else { -(1i64 << n) };
            assert_eq!(h, &int(expect), "(-2)^{n}");
        }
        let hj = hankel_transform(&jac_image(17), 8).unwrap();
        for (n, h) in hj.iter().enumerate() {
            assert_eq!(h, &int(if n % 2 == 0 { 1 } else { -1 }), "(-1)^{n}");
        }
        // delta: pivots vanish, the fraction-free fallback still answers
        let hd = hankel_transform(&Seq::delta(9), 3).unwrap();
        assert_eq!(hd, ints(&[1, 0, 0, 0]));
    }

    #[test]
    fn pivot_minor_identity() {
        // running pivot products equal the fraction-free minors
        let b = fib_image(17);
        let h = hankel_matrix(&b, 7).unwrap();
        let fact = ldu(&h).unwrap();
        let full = h.to_mat();
        let mut prod = Rational::one();
        for (k, dk) in fact.d.iter().enumerate() {
            prod *= dk;
            let minor = Mat::from_fn(k + 1, k + 1, |i, j| full.get(i, j).clone());
            assert_eq!(prod, det_bareiss(&minor), "minor order {}", k + 1);
        }
    }

    #[test]
    fn det_bareiss_matches_cofactor_expansion() {
        // 4x4 oracle by Laplace expansion
        fn laplace(m: &Mat) -> Rational {
            let n = m.rows();
            if n == 1 {
                return m.get(0, 0).clone();
            }
            let mut det = Rational::zero();
            for j in 0..n {
                if m.get(0, j).is_zero() {
                    continue;
                }
                let sub = Mat::from_fn(n - 1, n - 1, |r, c| {
                    m.get(r + 1, if c < j { c } else { c + 1 }).clone()
                });
                let term = m.get(0, j) * laplace(&sub);
                if j % 2 == 0 {
                    det += term;
                } else {
                    det -= term;
                }
            }
            det
        }
        let vals = [3i64, -1, 4, 1, -5, 9, 2, -6, 5, 3, 0, 5, 8, -9, 7, 9];
        let m = Mat::from_fn(4, 4, |i, j| int(vals[4 * i + j]));
        assert_eq!(det_bareiss(&m), laplace(&m));
        // singular matrix
        let sing = Mat::from_fn(3, 3, |i, j| int((i + j) as i64));
        assert_eq!(det_bareiss(&sing), laplace(&sing));
    }

    #[test]
    fn jfraction_golden() {
        // c(x^2): a0 = 1, all alphas 0, all betas 1
        let j = jfraction(&catalan_x2(24), 9).unwrap();
        assert_eq!(j.a0(), &int(1));
        assert!(j.alphas().iter().all(|a| a.is_zero()));
        assert!(j.betas().iter().all(|b| b.is_one()));

        // Fibonacci image: 3, -2, -1, 1, then 0s and 1s
        let f = Series::from_coeffs(fib_image(25).terms().to_vec());
        let jf = jfraction(&f, 9).unwrap();
        assert_eq!(jf.alphas()[..4], ints(&[3, -1, 0, 0]));
        assert_eq!(jf.betas()[..4], ints(&[-2, 1, 1, 1]));

        // Jacobsthal image: alpha_0 = 3, beta_1 = -1, then 0s and 1s
        let g = Series::from_coeffs(jac_image(25).terms().to_vec());
        let jg = jfraction(&g, 9).unwrap();
        assert_eq!(jg.alphas()[..3], ints(&[3, 0, 0]));
        assert_eq!(jg.betas()[..3], ints(&[-1, 1, 1]));
    }

    #[test]
    fn jfraction_reconstruction() {
        let f = Series::from_coeffs(fib_image(25).terms().to_vec());
        let j = jfraction(&f, 9).unwrap();
        let rec = j.reconstruct(25);
        assert_eq!(rec.truncated(17), f.truncated(17));
    }

    #[test]
    fn jfraction_errors() {
        assert!(matches!(
            jfraction(&Series::x(24), 3),
            Err(Error::ConstantTermZero { .. })
        ));
        assert!(matches!(
            jfraction(&Series::one(4), 3),
            Err(Error::OrderTooSmall { needed: 7, order: 4 })
        ));
        // 1/(1-x^2) is not normal: its second beta vanishes
        let s = Series::rational_fn(&[1], &[1, 0, -1], 24).unwrap();
        assert!(matches!(
            jfraction(&s, 5),
            Err(Error::NotNormal { attained: 2 })
        ));
    }

    #[test]
    fn hankel_from_jfraction_golden() {
        let f = Series::from_coeffs(fib_image(25).terms().to_vec());
        let j = jfraction(&f, 9).unwrap();
        let via_fraction = hankel_from_jfraction(&j, 8).unwrap();
        let via_minors = hankel_transform(&fib_image(25), 8).unwrap();
        assert_eq!(via_fraction, via_minors);

        // all betas 1, a0 = 1: Hankel transform is constantly 1
        let ones = JFraction::new(int(1), vec![int(0); 9], vec![int(1); 8]);
        assert_eq!(ones.hankel(8).unwrap(), ints(&[1; 9]));

        let g = Series::from_coeffs(jac_image(25).terms().to_vec());
        let jg = jfraction(&g, 9).unwrap();
        let hs = jg.hankel(8).unwrap();
        for (n, h) in hs.iter().enumerate() {
            assert_eq!(h, &int(if n % 2 == 0 { 1 } else { -1 }));
        }
        assert!(matches!(
            jg.hankel(99),
            Err(Error::InsufficientTerms { .. })
        ));
    }

    #[test]
    fn conjugation_golden() {
        for n in [6usize, 12] {
            assert_eq!(verify_conjugation(&Seq::fibonacci(2 * n), n).unwrap(), None);
            assert_eq!(verify_conjugation(&Seq::jacobsthal(2 * n), n).unwrap(), None);
            assert_eq!(verify_conjugation(&Seq::delta(2 * n), n).unwrap(), None);
        }
        // delta: A = I, so H = L * L^t
        let b = transform_binomial(&Seq::delta(12), 11).unwrap();
        let h = hankel_matrix(&b, 6).unwrap();
        let l = l_pair(6).unwrap().to_matrix(6).unwrap();
        assert_eq!(l.conjugate(&SymMatrix::from_mat(&Mat::identity(6)).unwrap()), h);
    }

    #[test]
    fn witness_reports_first_difference() {
        let good = SymMatrix::from_fn(3, |i, j| int((i * j) as i64));
        let mut doctored = good.to_mat();
        doctored.set(1, 2, int(99));
        doctored.set(2, 1, int(99));
        let doctored = SymMatrix::from_mat(&doctored).unwrap();
        let w = first_mismatch(&good, &doctored).unwrap();
        assert_eq!((w.row, w.col), (1, 2));
        assert_eq!(w.product, int(2));
        assert_eq!(w.hankel, int(99));
        assert_eq!(first_mismatch(&good, &good), None);
    }

    #[test]
    fn tph_ldu_golden() {
        // Jacobsthal: L^{-1} Lc is the sequence array of 2^n
        let fact = tph_ldu(&Seq::jacobsthal(12), 6).unwrap();
        assert_eq!(
            tri_rows(&fact.l)[..4],
            vec![vec![1], vec![2, 1], vec![4, 2, 1], vec![8, 4, 2, 1]]
        );
        let seq_array = Riordan::sequence_array(Series::rational_fn(&[1], &[1, -2], 8).unwrap())
            .unwrap()
            .to_matrix(6)
            .unwrap();
        assert_eq!(fact.l, seq_array);
        assert_eq!(fact.d, ints(&[1, -1, -1, -1, -1, -1]));

        // Fibonacci rows
        let ff = tph_ldu(&Seq::fibonacci(12), 6).unwrap();
        assert_eq!(
            tri_rows(&ff.l),
            vec![
                vec![1],
                vec![2, 1],
                vec![3, 1, 1],
                vec![5, 2, 1, 1],
                vec![8, 3, 2, 1, 1],
                vec![13, 5, 3, 2, 1, 1],
            ]
        );

        // delta: A = I factors trivially
        let fd = tph_ldu(&Seq::delta(12), 6).unwrap();
        assert_eq!(fd.l, TriMatrix::identity(6));
        assert_eq!(fd.d, ints(&[1; 6]));
    }
}
