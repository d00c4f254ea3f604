//! The integer machinery behind the colored count: unsigned Stirling
//! numbers of the first kind, the polynomials Q_m(x) = prod (l - (l-1)x),
//! and the coefficient triangle T(m,k) computed two independent ways.

use superdiagonal::{q_polynomial, triangle_t_stirling, StirlingTable, TriangleT};

fn main() {
    let max = 8usize;

    println!("unsigned Stirling numbers of the first kind, rows 0..={max}:");
    let stirling = StirlingTable::build(max);
    for n in 0..=max {
        let row: Vec<String> = (0..=n).map(|k| stirling.get(n, k).to_string()).collect();
        println!(
            "  n={n}: {}  (row sum {})",
            row.join(" "),
            stirling.row_sum(n)
        );
    }

    println!("\nQ_m(x) as exact products:");
    for m in 0..=max {
        println!("  Q_{m}(x) = {}", q_polynomial(m));
    }

    println!("\nT(m,k) triangle: recurrence row vs alternating Stirling sum:");
    let triangle = TriangleT::build(max);
    for m in 0..=max {
        let by_recurrence: Vec<String> = (0..=m).map(|k| triangle.get(m, k).to_string()).collect();
        let by_stirling: Vec<String> = (0..=m)
            .map(|k| triangle_t_stirling(m, k).to_string())
            .collect();
        assert_eq!(by_recurrence, by_stirling, "routes disagree at m = {m}");
        println!("  m={m}: {}", by_recurrence.join(" "));
    }
    println!("(both routes agree on every entry)");
}
