//! J-fraction expansions and the product formula for Hankel transforms:
//! h_n = a0^{n+1} * beta_1^n * beta_2^{n-1} * ... * beta_n.

use riordan::btransform::{catalan_x2, transform_matrix};
use riordan::factorization::{hankel_from_jfraction, hankel_transform, jfraction};
use riordan::{Seq, Series};

fn csv(v: &[riordan::Rational]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn main() -> riordan::Result<()> {
    let fib_image = Series::from_coeffs(
        transform_matrix(&Seq::fibonacci(21), 20)?.terms().to_vec(),
    );
    let jac_image = Series::from_coeffs(
        transform_matrix(&Seq::jacobsthal(21), 20)?.terms().to_vec(),
    );
    let inputs = [
        ("c(x^2)", catalan_x2(21)),
        ("fibonacci image", fib_image),
        ("jacobsthal image", jac_image),
    ];
    for (name, series) in inputs {
        let j = jfraction(&series, 9)?;
        println!("{name}:");
        println!("  a0     = {}", j.a0());
        println!("  alphas = {}", csv(j.alphas()));
        println!("  betas  = {}", csv(j.betas()));

        // the expansion reproduces the series
        assert_eq!(j.reconstruct(21).truncated(17), series.truncated(17));

        // and its betas determine the Hankel transform
        let from_betas = hankel_from_jfraction(&j, 8)?;
        let from_minors = hankel_transform(&Seq::from_gf(&series.truncated(17)), 8)?;
        assert_eq!(from_betas, from_minors);
        println!("  hankel = {}\n", csv(&from_betas));
    }
    Ok(())
}
