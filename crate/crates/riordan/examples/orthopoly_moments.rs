//! Orthogonal-polynomial coefficient arrays from three-term recurrences and
//! their inverses, whose first column is the moment sequence.

use riordan::btransform::transform_matrix;
use riordan::factorization::{hankel_matrix, jfraction, ldu};
use riordan::orthopoly::Recurrence;
use riordan::rational::int;
use riordan::{Seq, Series};

fn main() -> riordan::Result<()> {
    // the family P_1 = x - 1, P_n = x P_{n-1} - P_{n-2} has coefficient array
    // ((1-x)/(1+x^2), x/(1+x^2))
    let cheb = Recurrence::new(
        vec![int(1)],
        vec![int(-1), int(1)],
        vec![int(0); 10],
        vec![int(1); 10],
    )?;
    let arr = cheb.coeff_array(6)?;
    println!("generalized Chebyshev coefficient array:");
    for i in 0..6 {
        let row: Vec<String> = arr.row(i).iter().map(|v| v.to_string()).collect();
        println!("  {}", row.join(" "));
    }

    // the transformed Jacobsthal sequence is a moment sequence: its J-fraction
    // pins a recurrence whose moment matrix has the sequence as column 0
    let image = transform_matrix(&Seq::jacobsthal(21), 20)?;
    let j = jfraction(&Series::from_coeffs(image.terms().to_vec()), 9)?;
    let family = Recurrence::from_jfraction(&j)?;
    println!("\njacobsthal-image family: P_1 = x - {}, P_2 coefficients {:?}", j.alphas()[0],
        family.coeff_array(3)?.row(2).iter().map(|v| v.to_string()).collect::<Vec<_>>());

    let moments = family.moment_matrix(8)?;
    let col0: Vec<String> = (0..8).map(|i| moments.get(i, 0).to_string()).collect();
    println!("moment matrix column 0: {}", col0.join(","));

    // the moment matrix is exactly the LDU factor of the image Hankel matrix
    let fact = ldu(&hankel_matrix(&image, 8)?)?;
    assert_eq!(moments, fact.l);
    println!("moment matrix equals the Hankel LDU factor, checked at n = 8.");
    Ok(())
}
