//! Print the counting sequences s(n) (palindromic superdiagonal) and
//! c(n) (colored superdiagonal) side by side with their independent
//! routes: generating-function coefficients, closed forms, and raw
//! enumeration. The three columns must always agree.

use superdiagonal::{brute_c, brute_s, c_closed, c_series, s_series};

fn main() {
    let n_max = 28usize;
    let s = s_series(n_max);
    let c = c_series(n_max);

    println!(
        "{:>3} {:>12} {:>12} | {:>12} {:>12} {:>12}",
        "n", "s series", "s brute", "c series", "c closed", "c brute"
    );
    for n in 0..=n_max {
        println!(
            "{:>3} {:>12} {:>12} | {:>12} {:>12} {:>12}",
            n,
            s.coeff(n),
            brute_s(n as u64),
            c.coeff(n),
            c_closed(n as u64),
            brute_c(n as u64),
        );
    }
}
