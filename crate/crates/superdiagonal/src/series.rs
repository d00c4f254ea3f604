//! Exact truncated formal power series arithmetic.
//!
//! Everything here is dense and carries arbitrary-precision integer
//! coefficients; there is no floating point and no rounding anywhere.
//!
//! Invariants:
//! - [`IntPolynomial`] stores its highest coefficient nonzero, except the
//!   zero polynomial which stores exactly one coefficient `0`.
//! - [`UniSeries`] with truncation order N stores exactly N+1 coefficients;
//!   binary operations truncate to the minimum of the two orders.
//! - [`BiSeries`] coefficient lookup outside the stored grid is an error,
//!   never an implicit zero.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Errors from series construction and coefficient access.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SeriesError {
    /// A denominator factor of a rational function has constant term 0,
    /// so no power series expansion exists.
    ZeroConstantTerm,
    /// A rational function expansion left the integers (the denominator's
    /// constant term does not divide some intermediate coefficient).
    NonIntegralCoefficient { exponent: usize },
    /// A bivariate coefficient was requested outside the stored grid.
    OutOfTruncation {
        x_exp: usize,
        y_exp: usize,
        x_order: usize,
        y_order: usize,
    },
}

impl fmt::Display for SeriesError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeriesError::ZeroConstantTerm => {
                write!(f, "denominator factor has constant term 0")
            }
            SeriesError::NonIntegralCoefficient { exponent } => {
                write!(f, "expansion coefficient of x^{exponent} is not an integer")
            }
            SeriesError::OutOfTruncation {
                x_exp,
                y_exp,
                x_order,
                y_order,
            } => write!(
                f,
                "coefficient of x^{x_exp} y^{y_exp} lies outside the stored \
                 grid ({x_order} x {y_order})"
            ),
        }
    }
}

impl std::error::Error for SeriesError {}

/// A dense integer polynomial; index i holds the coefficient of x^i.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    /// Build a polynomial from ascending coefficients, trimming trailing
    /// zeros so the invariant holds.
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.len() > 1 && coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(BigInt::zero());
        }
        Self { coeffs }
    }

    /// Convenience constructor from machine integers, ascending order.
    pub fn from_coeffs(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self::new(vec![])
    }

    pub fn one() -> Self {
        Self::from_coeffs(&[1])
    }

    /// c * x^degree.
    pub fn monomial(c: BigInt, degree: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        coeffs[degree] = c;
        Self::new(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_zero()
    }

    /// Degree of the polynomial; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of x^i, zero beyond the stored degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Ascending coefficients; the last entry is nonzero unless the
    /// polynomial is zero.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn constant_term(&self) -> &BigInt {
        &self.coeffs[0]
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    /// Exact convolution product.
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.degree() + rhs.degree() + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPolynomial::new(coeffs)
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        IntPolynomial::new(coeffs)
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;

    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        self + &(-rhs)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;

    fn neg(self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for IntPolynomial {
    /// Ascending-power rendering, e.g. `6 - 7x + 2x^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.abs();
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}")?;
                    }
                    if i == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// A univariate power series truncated at an explicit order: the
/// coefficients of x^0 .. x^N are exact, everything above is unknown.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniSeries {
    coeffs: Vec<BigInt>,
}

impl UniSeries {
    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![BigInt::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = BigInt::one();
        s
    }

    /// Truncate a polynomial to a series of the given order.
    pub fn from_polynomial(p: &IntPolynomial, order: usize) -> Self {
        let mut s = Self::zero(order);
        for (i, c) in p.coeffs().iter().enumerate().take(order + 1) {
            s.coeffs[i] = c.clone();
        }
        s
    }

    /// Truncation order N; coefficients of x^0..x^N are stored.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of x^n. Panics beyond the truncation order, where the
    /// coefficient is unknown rather than zero.
    pub fn coeff(&self, n: usize) -> &BigInt {
        assert!(
            n <= self.order(),
            "coefficient of x^{n} requested from a series truncated at x^{}",
            self.order()
        );
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Shorten the series to a lower truncation order.
    pub fn truncated(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot extend a truncated series");
        Self {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }
}

impl Add for &UniSeries {
    type Output = UniSeries;

    /// Coefficientwise sum at the minimum of the two truncation orders.
    fn add(self, rhs: &UniSeries) -> UniSeries {
        let order = self.order().min(rhs.order());
        let coeffs = (0..=order)
            .map(|i| &self.coeffs[i] + &rhs.coeffs[i])
            .collect();
        UniSeries { coeffs }
    }
}

impl Mul for &UniSeries {
    type Output = UniSeries;

    /// Truncated convolution at the minimum of the two truncation orders.
    fn mul(self, rhs: &UniSeries) -> UniSeries {
        let order = self.order().min(rhs.order());
        let mut out = UniSeries::zero(order);
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                if !b.is_zero() {
                    out.coeffs[i + j] += a * b;
                }
            }
        }
        out
    }
}

/// A bivariate series truncated independently in each variable; the
/// coefficient of x^n y^k is stored for all n <= x_order, k <= y_order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiSeries {
    x_order: usize,
    y_order: usize,
    // dense row-major grid, row n holds y_order + 1 entries
    coeffs: Vec<BigInt>,
}

impl BiSeries {
    pub fn zero(x_order: usize, y_order: usize) -> Self {
        Self {
            x_order,
            y_order,
            coeffs: vec![BigInt::zero(); (x_order + 1) * (y_order + 1)],
        }
    }

    pub fn x_order(&self) -> usize {
        self.x_order
    }

    pub fn y_order(&self) -> usize {
        self.y_order
    }

    /// Exact coefficient of x^n y^k, or `OutOfTruncation` if the indices
    /// exceed the stored grid.
    pub fn coeff(&self, x_exp: usize, y_exp: usize) -> Result<&BigInt, SeriesError> {
        if x_exp > self.x_order || y_exp > self.y_order {
            return Err(SeriesError::OutOfTruncation {
                x_exp,
                y_exp,
                x_order: self.x_order,
                y_order: self.y_order,
            });
        }
        Ok(&self.coeffs[x_exp * (self.y_order + 1) + y_exp])
    }

    /// Add a univariate series in x, scaled by y^y_exp, into the grid.
    /// Panics if `y_exp` exceeds the y truncation.
    pub fn add_x_series(&mut self, y_exp: usize, series: &UniSeries) {
        assert!(y_exp <= self.y_order, "y^{y_exp} exceeds the stored grid");
        let n_max = self.x_order.min(series.order());
        for n in 0..=n_max {
            self.coeffs[n * (self.y_order + 1) + y_exp] += series.coeff(n);
        }
    }

    /// Sum of the coefficients of x^n y^k over all stored k: the
    /// coefficient of x^n after setting y = 1.
    pub fn row_sum(&self, x_exp: usize) -> BigInt {
        assert!(x_exp <= self.x_order);
        let base = x_exp * (self.y_order + 1);
        self.coeffs[base..base + self.y_order + 1].iter().sum()
    }
}

/// Expand `numerator / prod factor^exponent` as a power series truncated
/// at `order`.
///
/// Every denominator factor must have a nonzero constant term, and the
/// expansion must stay integral (all factors used in this crate have
/// constant term 1). Division is exact long division of series: the
/// result r satisfies r * denominator = numerator up to x^order.
pub fn expand_rational(
    numerator: &IntPolynomial,
    denominator_factors: &[(IntPolynomial, u32)],
    order: usize,
) -> Result<UniSeries, SeriesError> {
    let mut result = UniSeries::from_polynomial(numerator, order);
    for (factor, exponent) in denominator_factors {
        for _ in 0..*exponent {
            result = divide_by_polynomial(&result, factor)?;
        }
    }
    Ok(result)
}

/// Long division of a truncated series by a polynomial with nonzero
/// constant term, exact over the integers.
fn divide_by_polynomial(
    series: &UniSeries,
    divisor: &IntPolynomial,
) -> Result<UniSeries, SeriesError> {
    let c0 = divisor.constant_term();
    if c0.is_zero() {
        return Err(SeriesError::ZeroConstantTerm);
    }
    let order = series.order();
    let mut out = UniSeries::zero(order);
    for n in 0..=order {
        // c_n = (u_n - sum_{t=1..n} d_t c_{n-t}) / d_0
        let mut acc = series.coeff(n).clone();
        for t in 1..=n.min(divisor.degree()) {
            let d = divisor.coeff(t);
            if !d.is_zero() {
                acc -= d * &out.coeffs[n - t];
            }
        }
        if !(&acc % c0).is_zero() {
            return Err(SeriesError::NonIntegralCoefficient { exponent: n });
        }
        out.coeffs[n] = acc / c0;
    }
    Ok(out)
}
