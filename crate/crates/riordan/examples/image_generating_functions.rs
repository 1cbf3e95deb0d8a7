//! Closed generating functions for transformed sequences.
//!
//! The image of a sequence with g.f. f(x) has g.f.
//! ((1 + x c(x^2)) f(x c(x^2)) - a_0) / (x (1 - x c(x^2))), and for the
//! Fibonacci and Jacobsthal inputs this simplifies to algebraic expressions
//! in sqrt(1 - 4x^2).

use riordan::btransform::image_gf;
use riordan::rational::int;
use riordan::{Seq, Series};

fn main() -> riordan::Result<()> {
    const ORDER: usize = 40;

    let fib_gf = Series::rational_fn(&[0, 1], &[1, -1, -1], ORDER)?;
    let fib_image = image_gf(&fib_gf, &int(0), 24)?;
    println!("fibonacci image: {}", fib_image.truncated(8));

    // (1 - 4x^2 + x sqrt(1-4x^2)) / ((1-2x)(1-5x^2))
    let root = Series::from_ints(&[1, 0, -4], ORDER).sqrt1()?;
    let closed = Series::from_ints(&[1, 0, -4], ORDER)
        .add(&root.mul_x().truncated(ORDER))
        .div(&Series::from_ints(&[1, -2], ORDER).mul(&Series::from_ints(&[1, 0, -5], ORDER)))?;
    assert_eq!(closed.truncated(24), fib_image);
    println!("matches (1-4x^2+x*sqrt(1-4x^2)) / ((1-2x)(1-5x^2)) exactly.\n");

    let jac_gf = Series::rational_fn(&[0, 1], &[1, -1, -2], ORDER)?;
    let jac_image = image_gf(&jac_gf, &int(0), 24)?;
    println!("jacobsthal image: {}", jac_image.truncated(8));

    // (sqrt(1-4x^2) + 3(1-2x)) / (2 (2-9x+10x^2))
    let closed = root
        .add(&Series::from_ints(&[3, -6], ORDER))
        .div(&Series::from_ints(&[4, -18, 20], ORDER))?;
    assert_eq!(closed.truncated(24), jac_image);
    println!("matches (sqrt(1-4x^2)+3(1-2x)) / (2(2-9x+10x^2)) exactly.\n");

    // the coefficients are exactly the termwise transform
    let terms = riordan::btransform::transform_matrix(&Seq::jacobsthal(25), 24)?;
    assert_eq!(Seq::from_gf(&jac_image), terms);
    println!("coefficients equal the termwise transform, checked to 24 terms.");
    Ok(())
}
