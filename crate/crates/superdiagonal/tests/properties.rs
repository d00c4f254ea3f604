//! Property tests for the series engine's algebraic laws and for the
//! structural guarantees of the enumerators.

use num_bigint::BigInt;
use proptest::prelude::*;

use superdiagonal::{
    brute_s, brute_s_nk, enumerate_palindromic, enumerate_superdiagonal, expand_rational,
    palindromic_total, superdiagonal_total, IntPolynomial, UniSeries,
};

/// Polynomials with constant term +-1, whose series inverse stays in the
/// integers.
fn unit_constant_poly() -> impl Strategy<Value = IntPolynomial> {
    (any::<bool>(), prop::collection::vec(-6i64..=6, 0..5)).prop_map(|(negative, tail)| {
        let mut coeffs = vec![if negative { -1 } else { 1 }];
        coeffs.extend(tail);
        IntPolynomial::from_coeffs(&coeffs)
    })
}

fn any_poly() -> impl Strategy<Value = IntPolynomial> {
    prop::collection::vec(-6i64..=6, 1..6).prop_map(|coeffs| IntPolynomial::from_coeffs(&coeffs))
}

fn any_series() -> impl Strategy<Value = UniSeries> {
    (any_poly(), 0usize..=20).prop_map(|(poly, order)| UniSeries::from_polynomial(&poly, order))
}

proptest! {
    #[test]
    fn series_inverse_law(p in unit_constant_poly(), order in 0usize..=24) {
        let inverse = expand_rational(&IntPolynomial::one(), &[(p.clone(), 1)], order)
            .expect("unit constant term inverts over the integers");
        let product = &inverse * &UniSeries::from_polynomial(&p, order);
        prop_assert_eq!(product, UniSeries::one(order));
    }

    #[test]
    fn series_mul_commutes(a in any_series(), b in any_series()) {
        prop_assert_eq!(&a * &b, &b * &a);
    }

    #[test]
    fn series_mul_associates(a in any_series(), b in any_series(), c in any_series()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn expand_rational_powers_factor(
        numerator in any_poly(),
        denominator in unit_constant_poly(),
        exponent in 1u32..=4,
        order in 0usize..=16,
    ) {
        let direct = expand_rational(&numerator, &[(denominator.clone(), exponent)], order)
            .unwrap();
        // peel one power at a time: p/q^e = (p/q^(e-1)) * (1/q)
        let inverse = expand_rational(&IntPolynomial::one(), &[(denominator.clone(), 1)], order)
            .unwrap();
        let mut stepwise = UniSeries::from_polynomial(&numerator, order);
        for _ in 0..exponent {
            stepwise = &stepwise * &inverse;
        }
        prop_assert_eq!(direct, stepwise);
    }

    #[test]
    fn poly_mul_degree_additivity(a in any_poly(), b in any_poly()) {
        prop_assume!(!a.is_zero() && !b.is_zero());
        prop_assert_eq!((&a * &b).degree(), a.degree() + b.degree());
    }
}

#[test]
fn superdiagonal_enumeration_is_valid_and_duplicate_free() {
    for n in 0..=30u64 {
        let listing = enumerate_superdiagonal(n);
        for pair in listing.windows(2) {
            assert!(
                pair[0] > pair[1],
                "listing not strictly descending at n = {n}"
            );
        }
        for c in &listing {
            assert_eq!(c.weight(), n);
            assert!(c.is_superdiagonal(), "{c} violates the diagonal at n = {n}");
            let l = c.part_count() as u64;
            assert!(l * (l + 1) / 2 <= n, "part bound broken at n = {n}");
        }
        assert_eq!(
            BigInt::from(listing.len()),
            superdiagonal_total(n),
            "count mismatch at n = {n}"
        );
    }
}

#[test]
fn palindromic_enumeration_is_valid_and_counted() {
    for n in 1..=18u64 {
        let listing = enumerate_palindromic(n);
        for pair in listing.windows(2) {
            assert!(
                pair[0] > pair[1],
                "listing not strictly descending at n = {n}"
            );
        }
        for c in &listing {
            assert_eq!(c.weight(), n);
            assert!(c.is_palindromic());
        }
        assert_eq!(BigInt::from(listing.len()), palindromic_total(n));
    }
}

#[test]
fn part_count_tallies_sum_to_total() {
    for n in 0..=30u64 {
        let by_parts: BigInt = (0..=12).map(|k| brute_s_nk(n, k)).sum();
        assert_eq!(by_parts, brute_s(n), "n = {n}");
    }
}
