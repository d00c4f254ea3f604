//! Closed forms and generating functions for palindromic and colored
//! superdiagonal compositions, all in exact integer arithmetic.
//!
//! Notation used throughout:
//! - s(n) / s(n,k): palindromic superdiagonal compositions of n (with k
//!   parts);
//! - c(n): colored superdiagonal compositions of n;
//! - `[n brack k]`: unsigned Stirling numbers of the first kind, the
//!   connection constants in x(x+1)...(x+n-1) = sum_k [n brack k] x^k;
//! - Q_m(x) = prod_{l=1..m} (l - (l-1) x), whose coefficients form the
//!   triangle T(m,k).
//!
//! Every function here is a hypothesis under test: the enumerators in
//! [`crate::compositions`] are the ground truth, and
//! [`crate::verify`] checks the two agree.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::series::{expand_rational, BiSeries, IntPolynomial, UniSeries};

/// Binomial coefficient C(top, bottom) over the integers with the
/// conventions used by the closed forms in this crate:
/// - C(a, b) = 0 for b < 0;
/// - C(a, 0) = 1 for every a, including negative a (choosing nothing
///   always counts once);
/// - C(a, b) = 0 for a < 0 < b (no generalized negative-argument
///   binomials) and for 0 <= a < b.
pub fn binomial(top: i64, bottom: i64) -> BigInt {
    if bottom < 0 {
        return BigInt::zero();
    }
    if bottom == 0 {
        return BigInt::one();
    }
    if top < 0 || top < bottom {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 1..=bottom {
        acc = acc * BigInt::from(top - bottom + i) / BigInt::from(i);
    }
    acc
}

/// Triangular table of unsigned Stirling numbers of the first kind,
/// built once from the recurrence
/// `[n brack k] = (n-1) [n-1 brack k] + [n-1 brack k-1]`
/// with `[0 brack 0] = 1` and `[n brack 0] = [0 brack n] = 0` for n >= 1.
#[derive(Debug, Clone)]
pub struct StirlingTable {
    rows: Vec<Vec<BigInt>>,
}

impl StirlingTable {
    pub fn build(max_n: usize) -> Self {
        let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(max_n + 1);
        rows.push(vec![BigInt::one()]);
        for n in 1..=max_n {
            let prev = &rows[n - 1];
            let mut row = vec![BigInt::zero(); n + 1];
            for (k, entry) in row.iter_mut().enumerate().skip(1) {
                let mut v = prev[k - 1].clone();
                if k < prev.len() {
                    v += BigInt::from(n as u64 - 1) * &prev[k];
                }
                *entry = v;
            }
            rows.push(row);
        }
        Self { rows }
    }

    pub fn max_n(&self) -> usize {
        self.rows.len() - 1
    }

    /// `[n brack k]`; zero for k > n. Panics if n exceeds the table.
    pub fn get(&self, n: usize, k: usize) -> BigInt {
        assert!(
            n <= self.max_n(),
            "Stirling table built only up to {}",
            self.max_n()
        );
        self.rows[n].get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Sum of row n, which equals n!.
    pub fn row_sum(&self, n: usize) -> BigInt {
        self.rows[n].iter().sum()
    }

    /// Row n as the polynomial sum_k [n brack k] x^k; equals the rising
    /// factorial x(x+1)...(x+n-1).
    pub fn row_polynomial(&self, n: usize) -> IntPolynomial {
        IntPolynomial::new(self.rows[n].clone())
    }
}

/// `[n brack k]` computed from a fresh table; use [`StirlingTable`]
/// directly inside loops.
pub fn stirling1(n: usize, k: usize) -> BigInt {
    StirlingTable::build(n).get(n, k)
}

/// Q_m(x) = prod_{l=1..m} (l - (l-1) x), with Q_0 = 1, as an exact
/// polynomial product.
pub fn q_polynomial(m: usize) -> IntPolynomial {
    let mut q = IntPolynomial::one();
    for l in 1..=m as i64 {
        q = &q * &IntPolynomial::from_coeffs(&[l, -(l - 1)]);
    }
    q
}

/// Triangle of the coefficients T(m,k) of Q_m(x), built from the
/// recurrence T(m,k) = m T(m-1,k) - (m-1) T(m-1,k-1) with T(0,0) = 1.
#[derive(Debug, Clone)]
pub struct TriangleT {
    rows: Vec<Vec<BigInt>>,
}

impl TriangleT {
    pub fn build(max_m: usize) -> Self {
        let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(max_m + 1);
        rows.push(vec![BigInt::one()]);
        for m in 1..=max_m {
            let prev = &rows[m - 1];
            let at = |k: usize| prev.get(k).cloned().unwrap_or_else(BigInt::zero);
            let row = (0..=m)
                .map(|k| {
                    let mut v = BigInt::from(m as u64) * at(k);
                    if k > 0 {
                        v -= BigInt::from(m as u64 - 1) * at(k - 1);
                    }
                    v
                })
                .collect();
            rows.push(row);
        }
        Self { rows }
    }

    pub fn max_m(&self) -> usize {
        self.rows.len() - 1
    }

    /// T(m,k), taken as zero outside 0 <= k <= m. Panics if m exceeds
    /// the table.
    pub fn get(&self, m: usize, k: usize) -> BigInt {
        assert!(
            m <= self.max_m(),
            "T triangle built only up to {}",
            self.max_m()
        );
        self.rows[m].get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Row m as the polynomial sum_k T(m,k) x^k; must equal
    /// [`q_polynomial`]`(m)` up to trailing zero coefficients.
    pub fn row_polynomial(&self, m: usize) -> IntPolynomial {
        IntPolynomial::new(self.rows[m].clone())
    }
}

/// T(m,k) through the recurrence route. Panics if k > m; use
/// [`TriangleT::get`] for the zero-outside-the-triangle convention.
pub fn triangle_t_recurrence(m: usize, k: usize) -> BigInt {
    assert!(k <= m, "T({m},{k}) lies outside the triangle");
    TriangleT::build(m).get(m, k)
}

/// T(m,k) through the independent alternating Stirling sum
/// `sum_{i=0..m} C(i, m-k) [m+1 brack m+1-i] (-1)^(m+i+k)`.
///
/// This is a second route kept deliberately separate from the
/// recurrence; the two must agree everywhere. Panics if k > m.
pub fn triangle_t_stirling(m: usize, k: usize) -> BigInt {
    assert!(k <= m, "T({m},{k}) lies outside the triangle");
    let stirling = StirlingTable::build(m + 1);
    let mut acc = BigInt::zero();
    for i in 0..=m {
        let term = binomial(i as i64, (m - k) as i64) * stirling.get(m + 1, m + 1 - i);
        if (m + i + k).is_multiple_of(2) {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// s(2n, 2k), the number of palindromic superdiagonal compositions of
/// even weight 2n with an even number 2k of parts:
/// C(n - C(k+1,2) - 2 C(k,2) - 1, k - 1), taken as zero below the
/// minimum weight 3k^2 + k where the underlying series has no term.
pub fn s_even(half_weight: u64, half_parts: u64) -> BigInt {
    assert!(half_parts >= 1, "part count must be positive");
    let (n, k) = (half_weight as i64, half_parts as i64);
    let shifted = n - (3 * k * k + k) / 2;
    if shifted < 0 {
        return BigInt::zero();
    }
    binomial(shifted + k - 1, k - 1)
}

/// s(n, 2k-1), the number of palindromic superdiagonal compositions of
/// weight n (either parity) with an odd number 2k-1 of parts:
/// C(floor((n - 3k^2)/2) + 2k - 1, k - 1), zero below the minimum
/// weight.
pub fn s_odd(weight: u64, k: u64) -> BigInt {
    assert!(k >= 1, "part count must be positive");
    let (n, k) = (weight as i64, k as i64);
    let top = (n - 3 * k * k).div_euclid(2) + 2 * k - 1;
    if top < 0 {
        return BigInt::zero();
    }
    binomial(top, k - 1)
}

/// s(n, k) for any weight and part count, dispatching on parity:
/// even part counts require even weight (a palindrome with 2k parts
/// has even weight), odd part counts go through [`s_odd`].
pub fn s_closed(weight: u64, parts: u64) -> BigInt {
    if parts == 0 {
        return if weight == 0 {
            BigInt::one()
        } else {
            BigInt::zero()
        };
    }
    if parts.is_multiple_of(2) {
        if weight % 2 == 1 {
            return BigInt::zero();
        }
        s_even(weight / 2, parts / 2)
    } else {
        s_odd(weight, parts.div_ceil(2))
    }
}

fn one_minus_x() -> IntPolynomial {
    IntPolynomial::from_coeffs(&[1, -1])
}

fn one_minus_x2() -> IntPolynomial {
    IntPolynomial::from_coeffs(&[1, 0, -1])
}

fn x_power(exp: usize) -> IntPolynomial {
    IntPolynomial::monomial(BigInt::one(), exp)
}

/// The bivariate generating function of palindromic superdiagonal
/// compositions, sum over compositions of x^weight y^parts, truncated to
/// x^max_weight y^max_parts:
///
/// S(x,y) = sum_{m >= 0} ( x^(3m^2+m) / (1-x^2)^m * y^(2m)
///                       + x^(3m^2+4m+1) / ((1-x)(1-x^2)^m) * y^(2m+1) ).
///
/// The sum over m stops as soon as the leading x exponent of a term
/// exceeds the truncation; every later term only contributes above it.
pub fn s_series_bivariate(max_weight: usize, max_parts: usize) -> BiSeries {
    let mut out = BiSeries::zero(max_weight, max_parts);
    let mut m = 0usize;
    loop {
        let even_lead = 3 * m * m + m;
        if even_lead > max_weight {
            break;
        }
        if 2 * m <= max_parts {
            let term = expand_rational(
                &x_power(even_lead),
                &[(one_minus_x2(), m as u32)],
                max_weight,
            )
            .expect("denominators have constant term 1");
            out.add_x_series(2 * m, &term);
        }
        let odd_lead = 3 * m * m + 4 * m + 1;
        if odd_lead <= max_weight && 2 * m < max_parts {
            let term = expand_rational(
                &x_power(odd_lead),
                &[(one_minus_x(), 1), (one_minus_x2(), m as u32)],
                max_weight,
            )
            .expect("denominators have constant term 1");
            out.add_x_series(2 * m + 1, &term);
        }
        m += 1;
    }
    out
}

/// The univariate generating function sum_n s(n) x^n, computed from the
/// one-variable form
///
/// S(x,1) = sum_{m >= 0} x^(3m^2+m) (1 - x + x^(3m+1))
///                       / ((1-x)(1-x^2)^m),
///
/// not by summing the bivariate grid (that substitution is a separate
/// verification).
pub fn s_series(max_weight: usize) -> UniSeries {
    let mut out = UniSeries::zero(max_weight);
    let mut m = 0usize;
    loop {
        let lead = 3 * m * m + m;
        if lead > max_weight {
            break;
        }
        let numerator =
            &x_power(lead) * &(&(&IntPolynomial::one() - &x_power(1)) + &x_power(3 * m + 1));
        let term = expand_rational(
            &numerator,
            &[(one_minus_x(), 1), (one_minus_x2(), m as u32)],
            max_weight,
        )
        .expect("denominators have constant term 1");
        out = &out + &term;
        m += 1;
    }
    out
}

/// The generating function sum_n c(n) x^n of colored superdiagonal
/// compositions:
///
/// C(x) = sum_{m >= 0} x^C(m+1,2) Q_m(x) / (1-x)^(2m),
///
/// truncated to x^max_weight, stopping once the leading exponent
/// m(m+1)/2 exceeds the truncation.
pub fn c_series(max_weight: usize) -> UniSeries {
    let mut out = UniSeries::zero(max_weight);
    let mut m = 0usize;
    loop {
        let lead = m * (m + 1) / 2;
        if lead > max_weight {
            break;
        }
        let numerator = &x_power(lead) * &q_polynomial(m);
        let term = expand_rational(&numerator, &[(one_minus_x(), 2 * m as u32)], max_weight)
            .expect("denominators have constant term 1");
        out = &out + &term;
        m += 1;
    }
    out
}

/// c(n) through the closed double sum
/// `sum_{m, l >= 0} C(2m + l - 1, l) T(m, n - C(m+1,2) - l)`,
/// with T zero outside its triangle. Both sums are finite: m is bounded
/// by m(m+1)/2 <= n and l by the remaining weight.
pub fn c_closed(n: u64) -> BigInt {
    let n = n as i64;
    let mut max_m = 0usize;
    while ((max_m + 1) * (max_m + 2) / 2) as i64 <= n {
        max_m += 1;
    }
    let triangle = TriangleT::build(max_m);
    let mut acc = BigInt::zero();
    for m in 0..=max_m {
        let lead = (m * (m + 1) / 2) as i64;
        for l in 0..=(n - lead) {
            let j = n - lead - l;
            if j > m as i64 {
                continue;
            }
            let t = triangle.get(m, j as usize);
            if t.is_zero() {
                continue;
            }
            acc += binomial(2 * m as i64 + l - 1, l) * t;
        }
    }
    acc
}

/// Total number of superdiagonal compositions of n (no symmetry or color
/// constraint): `sum_{k >= 1} C(n - C(k,2) - 1, k - 1)`. The k = 1 term
/// is C(n-1, 0) = 1 even at n = 0, which counts the empty composition.
pub fn superdiagonal_total(n: u64) -> BigInt {
    let n = n as i64;
    let mut acc = BigInt::zero();
    let mut k = 1i64;
    while k * (k - 1) / 2 <= n {
        acc += binomial(n - k * (k - 1) / 2 - 1, k - 1);
        k += 1;
    }
    acc
}

/// Total number of palindromic compositions of n >= 1: 2^floor(n/2).
pub fn palindromic_total(n: u64) -> BigInt {
    BigInt::one() << (n / 2)
}
