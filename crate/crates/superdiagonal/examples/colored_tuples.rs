//! Spell out colored superdiagonal compositions tuple by tuple for a
//! small weight, then show why materializing colors stops scaling: the
//! counts c(n) grow much faster than the underlying composition counts.

use superdiagonal::{brute_c, enumerate_colored_superdiagonal, enumerate_superdiagonal};

fn main() {
    let n = 4u64;
    let tuples = enumerate_colored_superdiagonal(n);
    println!(
        "colored superdiagonal compositions of {n} ({} total):",
        tuples.len()
    );
    for t in &tuples {
        println!("  {t}");
    }

    println!("\nuncolored shapes vs colored counts:");
    println!("{:>3} {:>10} {:>14}", "n", "shapes", "colored");
    for n in 0..=12u64 {
        println!(
            "{:>3} {:>10} {:>14}",
            n,
            enumerate_superdiagonal(n).len(),
            brute_c(n)
        );
    }
}
