//! List the superdiagonal, palindromic superdiagonal, and palindromic
//! compositions of a weight (default 10).
//!
//! Usage: cargo run --example enumerate [n]

use superdiagonal::{
    enumerate_palindromic, enumerate_palindromic_superdiagonal, enumerate_superdiagonal,
};

fn main() {
    let n: u64 = std::env::args()
        .nth(1)
        .map(|arg| arg.parse().expect("n must be a non-negative integer"))
        .unwrap_or(10);

    let superdiagonal = enumerate_superdiagonal(n);
    println!(
        "superdiagonal compositions of {n} ({} total):",
        superdiagonal.len()
    );
    for c in &superdiagonal {
        println!("  {c}");
    }

    let palindromic_superdiagonal = enumerate_palindromic_superdiagonal(n);
    println!(
        "\npalindromic superdiagonal compositions of {n} ({} total):",
        palindromic_superdiagonal.len()
    );
    for c in &palindromic_superdiagonal {
        println!("  {c}");
    }

    if (1..=24).contains(&n) {
        let palindromic = enumerate_palindromic(n);
        println!(
            "\npalindromic compositions of {n} ({} total, = 2^floor(n/2)):",
            palindromic.len()
        );
        for c in &palindromic {
            println!("  {c}");
        }
    }
}
