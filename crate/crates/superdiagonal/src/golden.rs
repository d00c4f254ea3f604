//! Published reference values for the sequences and tables this crate
//! computes, transcribed by hand from the literature on palindromic and
//! colored superdiagonal compositions.
//!
//! Every block below is a literal constant. Tests and the verification
//! harness compare computed values against these bit-exactly; nothing in
//! this module is derived at runtime.

/// s(n,k) = number of palindromic superdiagonal compositions of n with
/// exactly k parts, for 1 <= n <= 26 (columns) and 1 <= k <= 5 (rows).
/// `SNK_GRID[k - 1][n - 1]` holds s(n,k).
pub const SNK_GRID: [[u64; 26]; 5] = [
    [
        1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1,
    ],
    [
        0, 0, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1,
    ],
    [
        0, 0, 0, 0, 0, 0, 0, 1, 1, 2, 2, 3, 3, 4, 4, 5, 5, 6, 6, 7, 7, 8, 8, 9, 9, 10,
    ],
    [
        0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 2, 0, 3, 0, 4, 0, 5, 0, 6, 0, 7,
    ],
    [
        0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 3, 3, 6, 6,
    ],
];

/// The same grid rendered as CSV: a header row of n indices followed by
/// the five k rows. `table snk 5 26 --format csv` must reproduce these
/// bytes exactly.
pub const SNK_GRID_CSV: &str = "\
1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20,21,22,23,24,25,26
1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1
0,0,0,1,0,1,0,1,0,1,0,1,0,1,0,1,0,1,0,1,0,1,0,1,0,1
0,0,0,0,0,0,0,1,1,2,2,3,3,4,4,5,5,6,6,7,7,8,8,9,9,10
0,0,0,0,0,0,0,0,0,0,0,0,0,1,0,2,0,3,0,4,0,5,0,6,0,7
0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,1,1,3,3,6,6
";

/// s(n) = total number of palindromic superdiagonal compositions of n,
/// for 0 <= n <= 28.
pub const S_VALUES: [u64; 29] = [
    1, 1, 1, 1, 2, 1, 2, 1, 3, 2, 4, 3, 5, 4, 7, 5, 9, 6, 11, 7, 13, 9, 16, 12, 20, 16, 25, 21, 31,
];

/// c(n) = number of colored superdiagonal compositions of n, for
/// 0 <= n <= 10.
pub const C_VALUES: [u64; 11] = [1, 1, 2, 5, 11, 21, 42, 86, 171, 322, 596];

/// Coefficients of the polynomials Q_0(x) .. Q_6(x) in ascending order,
/// where Q_m(x) = prod_{l=1..m} (l - (l-1) x).
pub const Q_ROWS: [&[i64]; 7] = [
    &[1],
    &[1],
    &[2, -1],
    &[6, -7, 2],
    &[24, -46, 29, -6],
    &[120, -326, 329, -146, 24],
    &[720, -2556, 3604, -2521, 874, -120],
];

/// Leading terms of the bivariate generating function
/// S(x,y) = sum over palindromic superdiagonal compositions of
/// x^weight y^parts. `S_BIVARIATE[n][k]` holds the coefficient of
/// x^n y^k for 0 <= n <= 12 and 0 <= k <= 3; no coefficient with
/// n <= 12 lies outside this k range.
pub const S_BIVARIATE: [[u64; 4]; 13] = [
    [1, 0, 0, 0],
    [0, 1, 0, 0],
    [0, 1, 0, 0],
    [0, 1, 0, 0],
    [0, 1, 1, 0],
    [0, 1, 0, 0],
    [0, 1, 1, 0],
    [0, 1, 0, 0],
    [0, 1, 1, 1],
    [0, 1, 0, 1],
    [0, 1, 1, 2],
    [0, 1, 0, 2],
    [0, 1, 1, 3],
];

/// The four palindromic superdiagonal compositions of 10, in descending
/// lexicographic order.
pub const PALINDROMIC_SUPERDIAGONAL_10: [&[u64]; 4] = [&[10], &[5, 5], &[4, 2, 4], &[3, 4, 3]];

/// The four palindromic compositions of 4, in descending lexicographic
/// order.
pub const PALINDROMIC_4: [&[u64]; 4] = [&[4], &[2, 2], &[1, 2, 1], &[1, 1, 1, 1]];

/// The three superdiagonal compositions of 4, in descending lexicographic
/// order.
pub const SUPERDIAGONAL_4: [&[u64]; 3] = [&[4], &[2, 2], &[1, 3]];

/// The eleven colored superdiagonal compositions of 4 as (size, color)
/// pairs, ordered with the underlying compositions descending
/// lexicographically and colors ascending within each composition.
pub const COLORED_SUPERDIAGONAL_4: [&[(u64, u64)]; 11] = [
    &[(4, 1)],
    &[(4, 2)],
    &[(4, 3)],
    &[(4, 4)],
    &[(2, 1), (2, 1)],
    &[(2, 1), (2, 2)],
    &[(2, 2), (2, 1)],
    &[(2, 2), (2, 2)],
    &[(1, 1), (3, 1)],
    &[(1, 1), (3, 2)],
    &[(1, 1), (3, 3)],
];
