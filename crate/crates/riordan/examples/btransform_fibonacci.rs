//! The sequence transform computed four different ways, applied to the
//! Fibonacci numbers. All four formulas are exactly equivalent; each route is
//! an independent implementation.

use riordan::btransform::{
    b_entry, transform_binomial, transform_catalan, transform_gathered, transform_matrix,
};
use riordan::Seq;

fn line(s: &Seq) -> String {
    s.terms()
        .iter()
        .map(|t| t.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn main() -> riordan::Result<()> {
    println!("transform matrix rows (row n has n + 2 entries):");
    for n in 0..6 {
        let row: Vec<String> = (0..n + 2).map(|k| b_entry(n, k).to_string()).collect();
        println!("  {}", row.join(" "));
    }

    let fib = Seq::fibonacci(12);
    println!("\nfibonacci:        {}", line(&fib));

    let routes: [(&str, fn(&Seq, usize) -> riordan::Result<Seq>); 4] = [
        ("matrix rows    ", transform_matrix),
        ("binomial (ext) ", transform_binomial),
        ("gathered terms ", transform_gathered),
        ("catalan weights", transform_catalan),
    ];
    let mut all = Vec::new();
    for (name, route) in routes {
        let image = route(&fib, 11)?;
        println!("via {name}:  {}", line(&image));
        all.push(image);
    }
    assert!(all.windows(2).all(|w| w[0] == w[1]));
    println!("\nall four routes agree exactly.");
    Ok(())
}
