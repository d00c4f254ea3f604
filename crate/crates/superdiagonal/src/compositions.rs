//! Brute-force enumeration of compositions under the superdiagonal and
//! palindromic constraints, plus exact colored counts.
//!
//! These enumerators are the ground truth the closed forms and series in
//! [`crate::formulas`] are verified against. All listings come out in
//! descending lexicographic order of the part lists, so output is stable
//! enough for golden-file tests.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

/// A composition: an ordered sequence of positive integer parts.
///
/// The empty composition (of weight 0) is allowed; it is palindromic and
/// superdiagonal, and its colored weight is 1 (the empty product).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Composition {
    parts: Vec<u64>,
}

impl Composition {
    /// Panics if any part is zero.
    pub fn new(parts: Vec<u64>) -> Self {
        assert!(
            parts.iter().all(|&p| p >= 1),
            "composition parts must be positive"
        );
        Self { parts }
    }

    pub fn empty() -> Self {
        Self { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    /// Sum of the parts.
    pub fn weight(&self) -> u64 {
        self.parts.iter().sum()
    }

    /// Number of parts.
    pub fn part_count(&self) -> usize {
        self.parts.len()
    }

    /// True iff the part list reads the same in both directions.
    pub fn is_palindromic(&self) -> bool {
        self.parts.iter().eq(self.parts.iter().rev())
    }

    /// True iff the i-th part (1-based) is at least i, at every position.
    pub fn is_superdiagonal(&self) -> bool {
        self.parts.iter().enumerate().all(|(i, &p)| p > i as u64)
    }

    /// Number of ways to color this composition when a part of size i may
    /// carry any of i colors: the product of the parts.
    pub fn colored_weight(&self) -> BigInt {
        self.parts
            .iter()
            .fold(BigInt::one(), |acc, &p| acc * BigInt::from(p))
    }
}

impl fmt::Display for Composition {
    /// Parts separated by single spaces; the empty composition prints `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "()");
        }
        let mut first = true;
        for p in &self.parts {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

/// All compositions of `n` with the i-th part at least i, in descending
/// lexicographic order. For n = 0 the listing is exactly the empty
/// composition.
pub fn enumerate_superdiagonal(n: u64) -> Vec<Composition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    extend_superdiagonal(n, 1, &mut current, &mut out);
    out
}

/// Recursive enumeration. At `position` (1-based) the part must be at
/// least `position`; a branch only continues when the remaining weight can
/// host a part of at least `position + 1`, so every branch completes and
/// the part count never exceeds the triangular bound l(l+1)/2 <= n.
fn extend_superdiagonal(
    remaining: u64,
    position: u64,
    current: &mut Vec<u64>,
    out: &mut Vec<Composition>,
) {
    if remaining == 0 {
        out.push(Composition {
            parts: current.clone(),
        });
        return;
    }
    if remaining < position {
        return;
    }
    // Largest candidate first: closing the composition with one part of
    // the full remaining weight precedes every continuation.
    current.push(remaining);
    extend_superdiagonal(0, position + 1, current, out);
    current.pop();
    if remaining > 2 * position {
        let mut part = remaining - (position + 1);
        while part >= position {
            current.push(part);
            extend_superdiagonal(remaining - part, position + 1, current, out);
            current.pop();
            part -= 1;
        }
    }
}

/// The palindromic members of [`enumerate_superdiagonal`], order preserved.
pub fn enumerate_palindromic_superdiagonal(n: u64) -> Vec<Composition> {
    enumerate_superdiagonal(n)
        .into_iter()
        .filter(Composition::is_palindromic)
        .collect()
}

/// All palindromic compositions of `n` (no superdiagonal constraint), in
/// descending lexicographic order. There are 2^floor(n/2) of them, so keep
/// `n` modest.
pub fn enumerate_palindromic(n: u64) -> Vec<Composition> {
    palindromic_parts(n)
        .into_iter()
        .map(|parts| Composition { parts })
        .collect()
}

/// A palindrome is either a single part (n) or a ++ w ++ a with w a
/// palindrome of n - 2a; emitting (n) first and then a descending keeps
/// the whole listing in descending lexicographic order.
fn palindromic_parts(n: u64) -> Vec<Vec<u64>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = vec![vec![n]];
    for a in (1..=n / 2).rev() {
        for inner in palindromic_parts(n - 2 * a) {
            let mut parts = Vec::with_capacity(inner.len() + 2);
            parts.push(a);
            parts.extend(inner);
            parts.push(a);
            out.push(parts);
        }
    }
    out
}

/// Number of palindromic superdiagonal compositions of `n`.
pub fn brute_s(n: u64) -> BigInt {
    BigInt::from(enumerate_palindromic_superdiagonal(n).len())
}

/// Number of palindromic superdiagonal compositions of `n` with exactly
/// `parts` parts.
pub fn brute_s_nk(n: u64, parts: usize) -> BigInt {
    BigInt::from(
        enumerate_palindromic_superdiagonal(n)
            .iter()
            .filter(|c| c.part_count() == parts)
            .count(),
    )
}

/// Number of colored superdiagonal compositions of `n`: the sum of the
/// colored weights over all superdiagonal compositions. Colors are counted
/// through the product rule, never materialized.
pub fn brute_c(n: u64) -> BigInt {
    enumerate_superdiagonal(n)
        .iter()
        .map(Composition::colored_weight)
        .sum()
}

/// One part of a colored composition: a size together with a color drawn
/// from 1..=size.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct ColoredPart {
    pub size: u64,
    pub color: u64,
}

/// A colored superdiagonal composition with every coloring spelled out.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct ColoredComposition {
    pub parts: Vec<ColoredPart>,
}

impl fmt::Display for ColoredComposition {
    /// Subscript-style rendering, e.g. `(2_1, 2_2)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}_{}", p.size, p.color)?;
        }
        write!(f, ")")
    }
}

/// Maximum weight for which colored compositions are materialized one
/// tuple at a time; beyond this the counts explode and only
/// [`brute_c`] / [`Composition::colored_weight`] make sense.
pub const COLORED_ENUMERATION_LIMIT: u64 = 8;

/// Every colored superdiagonal composition of `n` as explicit tuples:
/// underlying compositions in descending lexicographic order, colors in
/// ascending lexicographic order within each composition.
///
/// Panics if `n` exceeds [`COLORED_ENUMERATION_LIMIT`].
pub fn enumerate_colored_superdiagonal(n: u64) -> Vec<ColoredComposition> {
    assert!(
        n <= COLORED_ENUMERATION_LIMIT,
        "colored enumeration is limited to n <= {COLORED_ENUMERATION_LIMIT}"
    );
    let mut out = Vec::new();
    for composition in enumerate_superdiagonal(n) {
        let sizes = composition.parts();
        let mut colors: Vec<u64> = vec![1; sizes.len()];
        loop {
            out.push(ColoredComposition {
                parts: sizes
                    .iter()
                    .zip(&colors)
                    .map(|(&size, &color)| ColoredPart { size, color })
                    .collect(),
            });
            // odometer: bump the rightmost color that has room, reset the rest
            let mut i = colors.len();
            while i > 0 && colors[i - 1] == sizes[i - 1] {
                i -= 1;
            }
            if i == 0 {
                break;
            }
            colors[i - 1] += 1;
            for c in &mut colors[i..] {
                *c = 1;
            }
        }
    }
    out
}

/// An enumeration bundled with its per-part-count tallies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationReport {
    pub n: u64,
    pub compositions: Vec<Composition>,
    pub by_part_count: BTreeMap<usize, u64>,
}

impl EnumerationReport {
    pub fn new(n: u64, compositions: Vec<Composition>) -> Self {
        let mut by_part_count = BTreeMap::new();
        for c in &compositions {
            *by_part_count.entry(c.part_count()).or_insert(0) += 1;
        }
        Self {
            n,
            compositions,
            by_part_count,
        }
    }

    pub fn count(&self) -> usize {
        self.compositions.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::golden;

    /// Independent oracle: every composition of n by unconstrained
    /// recursion, used only to cross-check the filtered enumerators.
    fn all_compositions(n: u64) -> Vec<Vec<u64>> {
        if n == 0 {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for first in 1..=n {
            for mut rest in all_compositions(n - first) {
                rest.insert(0, first);
                out.push(rest);
            }
        }
        out
    }

    fn parts_of(list: &[Composition]) -> Vec<Vec<u64>> {
        list.iter().map(|c| c.parts().to_vec()).collect()
    }

    #[test]
    fn superdiagonal_matches_unconstrained_filter() {
        for n in 0..=12 {
            let mut expected: Vec<Vec<u64>> = all_compositions(n)
                .into_iter()
                .filter(|parts| parts.iter().enumerate().all(|(i, &p)| p > i as u64))
                .collect();
            expected.sort();
            expected.reverse();
            assert_eq!(parts_of(&enumerate_superdiagonal(n)), expected, "n = {n}");
        }
    }

    #[test]
    fn palindromic_matches_unconstrained_filter() {
        for n in 1..=12 {
            let mut expected: Vec<Vec<u64>> = all_compositions(n)
                .into_iter()
                .filter(|parts| parts.iter().eq(parts.iter().rev()))
                .collect();
            expected.sort();
            expected.reverse();
            assert_eq!(parts_of(&enumerate_palindromic(n)), expected, "n = {n}");
        }
    }

    #[test]
    fn superdiagonal_of_4() {
        assert_eq!(
            parts_of(&enumerate_superdiagonal(4)),
            golden::SUPERDIAGONAL_4
        );
    }

    #[test]
    fn superdiagonal_of_0_is_empty_composition() {
        assert_eq!(enumerate_superdiagonal(0), vec![Composition::empty()]);
    }

    #[test]
    fn superdiagonal_count_of_10() {
        // 1 + 8 + 15 + 1 compositions with 1..=4 parts
        assert_eq!(enumerate_superdiagonal(10).len(), 25);
    }

    #[test]
    fn palindromic_superdiagonal_of_10() {
        assert_eq!(
            parts_of(&enumerate_palindromic_superdiagonal(10)),
            golden::PALINDROMIC_SUPERDIAGONAL_10
        );
    }

    #[test]
    fn palindromic_superdiagonal_small_counts() {
        assert_eq!(enumerate_palindromic_superdiagonal(4).len(), 2); // (4), (2 2)
        assert_eq!(enumerate_palindromic_superdiagonal(5).len(), 1); // (5)
    }

    #[test]
    fn palindromic_of_4_and_small_counts() {
        assert_eq!(parts_of(&enumerate_palindromic(4)), golden::PALINDROMIC_4);
        assert_eq!(enumerate_palindromic(1).len(), 1);
        assert_eq!(enumerate_palindromic(9).len(), 16); // 2^4
    }

    #[test]
    fn palindromic_predicate() {
        assert!(Composition::new(vec![4, 2, 4]).is_palindromic());
        assert!(Composition::empty().is_palindromic());
        assert!(!Composition::new(vec![1, 3]).is_palindromic());
    }

    #[test]
    fn colored_weight_examples() {
        assert_eq!(
            Composition::new(vec![1, 3]).colored_weight(),
            BigInt::from(3)
        );
        assert_eq!(Composition::empty().colored_weight(), BigInt::from(1));
        assert_eq!(
            Composition::new(vec![3, 2, 5, 5, 6]).colored_weight(),
            BigInt::from(900)
        );
    }

    #[test]
    fn brute_counts() {
        assert_eq!(brute_s(10), BigInt::from(4));
        assert_eq!(brute_s_nk(10, 3), BigInt::from(2));
        assert_eq!(brute_s(0), BigInt::from(1));
        assert_eq!(brute_c(4), BigInt::from(11));
    }

    #[test]
    fn colored_tuples_of_4_match_reference() {
        let tuples = enumerate_colored_superdiagonal(4);
        let expected: Vec<Vec<(u64, u64)>> = golden::COLORED_SUPERDIAGONAL_4
            .iter()
            .map(|t| t.to_vec())
            .collect();
        let got: Vec<Vec<(u64, u64)>> = tuples
            .iter()
            .map(|c| c.parts.iter().map(|p| (p.size, p.color)).collect())
            .collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn colored_tuple_counts_match_products() {
        for n in 0..=COLORED_ENUMERATION_LIMIT {
            assert_eq!(
                BigInt::from(enumerate_colored_superdiagonal(n).len()),
                brute_c(n),
                "n = {n}"
            );
        }
    }

    #[test]
    #[should_panic(expected = "colored enumeration is limited")]
    fn colored_enumeration_rejects_large_weights() {
        enumerate_colored_superdiagonal(9);
    }

    #[test]
    fn report_tallies_sum_to_count() {
        for n in [0u64, 4, 10, 17] {
            let report = EnumerationReport::new(n, enumerate_superdiagonal(n));
            let tally: u64 = report.by_part_count.values().sum();
            assert_eq!(tally as usize, report.count());
        }
    }

    #[test]
    fn display_forms() {
        assert_eq!(Composition::new(vec![4, 2, 4]).to_string(), "4 2 4");
        assert_eq!(Composition::empty().to_string(), "()");
        let colored = ColoredComposition {
            parts: vec![
                ColoredPart { size: 2, color: 1 },
                ColoredPart { size: 2, color: 2 },
            ],
        };
        assert_eq!(colored.to_string(), "(2_1, 2_2)");
    }
}
