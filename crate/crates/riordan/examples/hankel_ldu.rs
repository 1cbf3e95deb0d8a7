//! Hankel matrices of transformed sequences, their exact LDU factorizations,
//! and the conjugation that factors the Toeplitz-plus-Hankel matrix of the
//! original sequence.

use riordan::btransform::transform_matrix;
use riordan::factorization::{hankel_matrix, ldu, tph_ldu, tph_matrix, verify_conjugation};
use riordan::{Seq, TriMatrix};

fn print_tri(label: &str, m: &TriMatrix, rows: usize) {
    println!("{label}");
    for i in 0..rows.min(m.dim()) {
        let row: Vec<String> = m.row(i).iter().map(|v| v.to_string()).collect();
        println!("  {}", row.join(" "));
    }
}

fn main() -> riordan::Result<()> {
    for (name, seq) in [("fibonacci", Seq::fibonacci(16)), ("jacobsthal", Seq::jacobsthal(16))] {
        println!("== {name} ==");
        let image = transform_matrix(&seq, 15)?;
        let h = hankel_matrix(&image, 8)?;
        let fact = ldu(&h)?;
        let d: Vec<String> = fact.d.iter().map(|v| v.to_string()).collect();
        println!("H pivots D: {}", d.join(","));
        print_tri("unit-lower factor of H:", &fact.l, 6);
        assert_eq!(fact.reconstruct(), h);

        // H = L * A * L^t connects H to the Toeplitz-plus-Hankel matrix A
        assert_eq!(verify_conjugation(&seq, 8)?, None);
        println!("H = L*A*L^t holds exactly (n = 8).");

        // and A inherits an LDU factorization with the same diagonal
        let a_fact = tph_ldu(&seq, 6)?;
        print_tri("unit-lower factor of A:", &a_fact.l, 6);
        assert_eq!(a_fact.reconstruct(), tph_matrix(&seq, 6)?);
        println!();
    }
    Ok(())
}
