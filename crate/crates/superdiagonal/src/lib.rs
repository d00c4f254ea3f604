//! Exact enumeration of palindromic and colored superdiagonal
//! compositions.
//!
//! A composition of n is an ordered sequence of positive integers
//! summing to n. It is *superdiagonal* when its i-th part is at least i,
//! *palindromic* when the part list reads the same in both directions,
//! and *colored* when a part of size i may carry any of i colors. This
//! crate counts and lists these objects three independent ways:
//!
//! - [`compositions`]: brute-force enumerators — the ground truth;
//! - [`formulas`]: closed forms and generating functions, including the
//!   Stirling-number machinery behind the colored count;
//! - [`series`]: the exact truncated power series engine the generating
//!   functions are expanded with;
//! - [`verify`]: a harness that demands bit-exact agreement between all
//!   routes and the published reference data in [`golden`];
//! - [`cli`]: the `superdiagonal` binary with `enumerate`, `sequence`,
//!   `table`, and `verify` subcommands.
//!
//! All arithmetic is arbitrary-precision integer; there is no floating
//! point anywhere. Every value is immutable once built and every
//! operation is a pure function, so anything here can be shared across
//! threads freely.

pub mod cli;
pub mod compositions;
pub mod formulas;
pub mod golden;
pub mod series;
pub mod verify;

pub use compositions::{
    brute_c, brute_s, brute_s_nk, enumerate_colored_superdiagonal, enumerate_palindromic,
    enumerate_palindromic_superdiagonal, enumerate_superdiagonal, ColoredComposition, ColoredPart,
    Composition, EnumerationReport,
};
pub use formulas::{
    binomial, c_closed, c_series, palindromic_total, q_polynomial, s_closed, s_even, s_odd,
    s_series, s_series_bivariate, stirling1, superdiagonal_total, triangle_t_recurrence,
    triangle_t_stirling, StirlingTable, TriangleT,
};
pub use series::{expand_rational, BiSeries, IntPolynomial, SeriesError, UniSeries};
pub use verify::{
    verify_all, verify_colored, verify_cross_checks, verify_q_triangle, verify_snk_grid, Profile,
    VerificationReport,
};
