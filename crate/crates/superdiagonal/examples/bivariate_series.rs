//! Expand the bivariate generating function of palindromic superdiagonal
//! compositions, S(x,y) = sum x^weight y^parts, and print it one x power
//! per term, the way series expansions are usually displayed:
//!
//!   x^10 (2y^3 + y^2 + y)
//!
//! means there are 2 such compositions of 10 with three parts, one with
//! two, and one with one.

use num_traits::{One, Zero};
use superdiagonal::s_series_bivariate;

fn main() {
    let max_weight = 16;
    let max_parts = 6;
    let series = s_series_bivariate(max_weight, max_parts);

    println!("S(x,y) through x^{max_weight}:");
    for n in 0..=max_weight {
        // collect the y polynomial attached to x^n, highest power first
        let mut terms = Vec::new();
        for k in (0..=max_parts).rev() {
            let coeff = series.coeff(n, k).unwrap();
            if coeff.is_zero() {
                continue;
            }
            let body = match k {
                0 => "1".to_string(),
                1 => "y".to_string(),
                _ => format!("y^{k}"),
            };
            if coeff.is_one() && k > 0 {
                terms.push(body);
            } else {
                terms.push(format!(
                    "{coeff}{}",
                    if k > 0 { body } else { String::new() }
                ));
            }
        }
        if terms.is_empty() {
            continue;
        }
        let y_poly = terms.join(" + ");
        match n {
            0 => println!("  {y_poly}"),
            _ if terms.len() == 1 => println!("+ x^{n} {y_poly}"),
            _ => println!("+ x^{n} ({y_poly})"),
        }
    }
}
