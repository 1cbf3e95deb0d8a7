//! Tour of the Riordan group: matrices, products, inverses, and the
//! fundamental-theorem action on a sequence.

use riordan::riordan::{aerate_matrix, matrix_reversal};
use riordan::{Riordan, Series, TriMatrix};

fn print_tri(label: &str, m: &TriMatrix) {
    println!("{label}");
    for i in 0..m.dim() {
        let row: Vec<String> = (0..m.dim()).map(|j| m.get(i, j).to_string()).collect();
        println!("  {}", row.join(" "));
    }
}

fn main() -> riordan::Result<()> {
    const ORDER: usize = 16;

    // Pascal's triangle is the pair (1/(1-x), x/(1-x))
    let pascal = Riordan::binomial(ORDER);
    print_tri("Pascal = (1/(1-x), x/(1-x)):", &pascal.to_matrix(6)?);

    // the group inverse changes the sign pattern
    print_tri("its inverse:", &pascal.inverse()?.to_matrix(6)?);

    // squaring in the group doubles the parameter: B * B = (1/(1-2x), x/(1-2x))
    let squared = pascal.mul(&pascal)?;
    let expected = Riordan::new(
        Series::rational_fn(&[1], &[1, -2], ORDER)?,
        Series::rational_fn(&[0, 1], &[1, -2], ORDER)?,
    )?;
    assert_eq!(squared, expected);
    println!("B*B = (1/(1-2x), x/(1-2x)) checked.\n");

    // the action on 1/(1-x) sums the rows: 2^n
    let row_sums = pascal.apply(&Series::rational_fn(&[1], &[1, -1], ORDER)?);
    println!("row sums of Pascal: {}\n", row_sums.truncated(8));

    // aeration interleaves zeros; (c(x), x c(x)) aerates to (c(x^2), x c(x^2))
    let c = Series::catalan(ORDER);
    let catalan_pair = Riordan::new(c.clone(), c.mul_x().truncated(ORDER))?;
    let m = catalan_pair.to_matrix(6)?;
    print_tri("(c(x), x c(x)):", &m);
    print_tri("its reversal:", &matrix_reversal(&m));
    print_tri("its aeration:", &aerate_matrix(&m));

    let direct = Riordan::new(
        Series::rational_fn(&[1], &[1, 0, 1], ORDER)?,
        Series::rational_fn(&[0, 1], &[1, 0, 1], ORDER)?,
    )?
    .inverse()?;
    assert_eq!(aerate_matrix(&m), direct.to_matrix(6)?);
    println!("aeration equals (1/(1+x^2), x/(1+x^2))^-1, checked.");
    Ok(())
}
