//! Cross-verification harness: every quantity this crate computes is
//! reachable by at least two independent routes (brute-force enumeration,
//! closed forms, series coefficients), and the checks here demand exact
//! agreement between all of them, plus agreement with the transcribed
//! reference data in [`crate::golden`].
//!
//! Brute force is the arbiter: when routes disagree, the enumeration is
//! ground truth and everything else is a hypothesis that failed.

use std::fmt::Write as _;

use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::compositions::{
    brute_c, enumerate_palindromic, enumerate_palindromic_superdiagonal, enumerate_superdiagonal,
    EnumerationReport,
};
use crate::formulas::{
    c_closed, c_series, palindromic_total, q_polynomial, s_closed, s_series_bivariate,
    superdiagonal_total, triangle_t_recurrence, triangle_t_stirling,
};
use crate::golden;

/// One disagreement between two routes: the input, then the two values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub input: String,
    pub left: String,
    pub right: String,
}

/// Outcome of one check. `passed` is true exactly when no mismatches
/// were recorded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub check_name: String,
    pub range_checked: String,
    mismatches: Vec<Mismatch>,
}

impl VerificationReport {
    fn new(check_name: &str, range_checked: String) -> Self {
        Self {
            check_name: check_name.to_string(),
            range_checked,
            mismatches: Vec::new(),
        }
    }

    fn check(&mut self, input: impl Fn() -> String, left: &BigInt, right: &BigInt) {
        if left != right {
            self.mismatches.push(Mismatch {
                input: input(),
                left: left.to_string(),
                right: right.to_string(),
            });
        }
    }

    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }

    pub fn mismatches(&self) -> &[Mismatch] {
        &self.mismatches
    }

    /// JSON object with fields `check_name`, `range_checked`,
    /// `mismatches` (list of `[input, left, right]` triples) and
    /// `passed`.
    pub fn to_json(&self) -> Value {
        json!({
            "check_name": self.check_name,
            "range_checked": self.range_checked,
            "mismatches": self
                .mismatches
                .iter()
                .map(|m| json!([m.input, m.left, m.right]))
                .collect::<Vec<_>>(),
            "passed": self.passed(),
        })
    }

    /// One human-readable line, e.g. `PASS snk_grid (1 <= n <= 26, ...)`.
    pub fn summary_line(&self) -> String {
        format!(
            "{} {} ({})",
            if self.passed() { "PASS" } else { "FAIL" },
            self.check_name,
            self.range_checked
        )
    }
}

/// Render a batch of reports as a text summary: one line per check, any
/// mismatches indented under it, and a final verdict line.
pub fn render_text(reports: &[VerificationReport]) -> String {
    let mut out = String::new();
    for report in reports {
        let _ = writeln!(out, "{}", report.summary_line());
        for m in report.mismatches() {
            let _ = writeln!(out, "  {}: {} != {}", m.input, m.left, m.right);
        }
    }
    let verdict = if all_passed(reports) {
        "all checks passed"
    } else {
        "FAILURES DETECTED"
    };
    let _ = writeln!(out, "{verdict}");
    out
}

/// JSON array of the individual report objects.
pub fn reports_to_json(reports: &[VerificationReport]) -> Value {
    Value::Array(reports.iter().map(VerificationReport::to_json).collect())
}

pub fn all_passed(reports: &[VerificationReport]) -> bool {
    reports.iter().all(VerificationReport::passed)
}

/// Compare s(n,k) over 1 <= n <= n_max, 1 <= k <= k_max through three
/// routes (enumeration, closed forms, bivariate series) pairwise, and
/// compare the published 26 x 5 grid against the enumeration.
pub fn verify_snk_grid(n_max: u64, k_max: usize) -> VerificationReport {
    verify_snk_grid_with(n_max, k_max, s_closed)
}

/// Same as [`verify_snk_grid`] but with an arbitrary candidate closed form
/// in place of the built-in one; useful for demonstrating that the
/// harness actually rejects wrong formulas.
pub fn verify_snk_grid_with(
    n_max: u64,
    k_max: usize,
    closed: impl Fn(u64, u64) -> BigInt,
) -> VerificationReport {
    let mut report = VerificationReport::new(
        "snk_grid",
        format!("1 <= n <= {n_max}, 1 <= k <= {k_max}, three routes + published grid"),
    );
    let series = s_series_bivariate(n_max as usize, k_max);
    for n in 1..=n_max {
        let brute = EnumerationReport::new(n, enumerate_palindromic_superdiagonal(n)).by_part_count;
        for k in 1..=k_max {
            let by_enumeration = BigInt::from(brute.get(&k).copied().unwrap_or(0));
            let by_closed_form = closed(n, k as u64);
            let by_series = series
                .coeff(n as usize, k)
                .expect("grid covers the checked range")
                .clone();
            report.check(
                || format!("s({n},{k}) enumeration vs closed form"),
                &by_enumeration,
                &by_closed_form,
            );
            report.check(
                || format!("s({n},{k}) enumeration vs series"),
                &by_enumeration,
                &by_series,
            );
            report.check(
                || format!("s({n},{k}) closed form vs series"),
                &by_closed_form,
                &by_series,
            );
        }
    }
    for (row, values) in golden::SNK_GRID.iter().enumerate() {
        let k = row + 1;
        for (col, &value) in values.iter().enumerate() {
            let n = col as u64 + 1;
            let by_enumeration = crate::compositions::brute_s_nk(n, k);
            report.check(
                || format!("s({n},{k}) published vs enumeration"),
                &BigInt::from(value),
                &by_enumeration,
            );
        }
    }
    report
}

/// Compare c(n) over 0 <= n <= n_max through three routes, plus the
/// published first eleven values.
pub fn verify_colored(n_max: u64) -> VerificationReport {
    verify_colored_with(n_max, c_closed)
}

/// [`verify_colored`] with a candidate closed form substituted.
pub fn verify_colored_with(n_max: u64, closed: impl Fn(u64) -> BigInt) -> VerificationReport {
    let mut report = VerificationReport::new(
        "colored",
        format!("0 <= n <= {n_max}, three routes + published values"),
    );
    let order = (n_max as usize).max(golden::C_VALUES.len() - 1);
    let series = c_series(order);
    for n in 0..=n_max {
        let by_enumeration = brute_c(n);
        let by_closed_form = closed(n);
        let by_series = series.coeff(n as usize).clone();
        report.check(
            || format!("c({n}) enumeration vs closed form"),
            &by_enumeration,
            &by_closed_form,
        );
        report.check(
            || format!("c({n}) enumeration vs series"),
            &by_enumeration,
            &by_series,
        );
        report.check(
            || format!("c({n}) closed form vs series"),
            &by_closed_form,
            &by_series,
        );
    }
    for (n, &value) in golden::C_VALUES.iter().enumerate() {
        report.check(
            || format!("c({n}) published vs enumeration"),
            &BigInt::from(value),
            &brute_c(n as u64),
        );
    }
    report
}

/// Check that the T(m,k) recurrence, the alternating Stirling sum, and
/// the coefficients of Q_m(x) agree for all 0 <= k <= m <= m_max, and
/// that Q_0 .. Q_6 match the published coefficient lists.
pub fn verify_q_triangle(m_max: usize) -> VerificationReport {
    let mut report = VerificationReport::new(
        "q_triangle",
        format!("0 <= k <= m <= {m_max}, two T routes + Q coefficients + published rows"),
    );
    for m in 0..=m_max {
        let q = q_polynomial(m);
        for k in 0..=m {
            let by_recurrence = triangle_t_recurrence(m, k);
            let by_stirling_sum = triangle_t_stirling(m, k);
            let by_product = q.coeff(k);
            report.check(
                || format!("T({m},{k}) recurrence vs Stirling sum"),
                &by_recurrence,
                &by_stirling_sum,
            );
            report.check(
                || format!("T({m},{k}) recurrence vs Q coefficient"),
                &by_recurrence,
                &by_product,
            );
        }
    }
    for (m, row) in golden::Q_ROWS.iter().enumerate() {
        let q = q_polynomial(m);
        for (k, &value) in row.iter().enumerate() {
            report.check(
                || format!("Q_{m} coefficient of x^{k} published vs product"),
                &BigInt::from(value),
                &q.coeff(k),
            );
        }
    }
    report
}

/// Check the enumeration counts against the two independent published
/// totals: the superdiagonal binomial sum for 0 <= n <= n_max and the
/// palindromic power 2^floor(n/2) for 1 <= n <= min(n_max, 18) (the
/// palindromic family grows exponentially).
pub fn verify_cross_checks(n_max: u64) -> VerificationReport {
    const PALINDROMIC_CAP: u64 = 18;
    let pal_max = n_max.min(PALINDROMIC_CAP);
    let mut report = VerificationReport::new(
        "cross_checks",
        format!("superdiagonal 0 <= n <= {n_max}, palindromic 1 <= n <= {pal_max}"),
    );
    for n in 0..=n_max {
        report.check(
            || format!("superdiagonal count({n}) enumeration vs binomial sum"),
            &BigInt::from(enumerate_superdiagonal(n).len()),
            &superdiagonal_total(n),
        );
    }
    for n in 1..=pal_max {
        report.check(
            || format!("palindromic count({n}) enumeration vs 2^floor(n/2)"),
            &BigInt::from(enumerate_palindromic(n).len()),
            &palindromic_total(n),
        );
    }
    report
}

/// How much of the input space [`verify_all`] sweeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Profile {
    /// n <= 26, k <= 5, m <= 10: covers everything published.
    #[default]
    Quick,
    /// n <= 40, k <= 8, m <= 25: extends well past the published data,
    /// with the enumeration as the only oracle out there.
    Full,
}

impl Profile {
    fn bounds(self) -> (u64, usize, usize) {
        match self {
            Profile::Quick => (26, 5, 10),
            Profile::Full => (40, 8, 25),
        }
    }
}

/// Run every check at the profile's bounds. The checks are independent
/// and run concurrently; the report order is fixed regardless of which
/// thread finishes first.
pub fn verify_all(profile: Profile) -> Vec<VerificationReport> {
    let (n_max, k_max, m_max) = profile.bounds();
    std::thread::scope(|scope| {
        let snk_grid = scope.spawn(move || verify_snk_grid(n_max, k_max));
        let colored = scope.spawn(move || verify_colored(n_max));
        let triangle = scope.spawn(move || verify_q_triangle(m_max));
        let crosses = scope.spawn(move || verify_cross_checks(n_max));
        vec![
            snk_grid.join().expect("check panicked"),
            colored.join().expect("check panicked"),
            triangle.join().expect("check panicked"),
            crosses.join().expect("check panicked"),
        ]
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn quick_profile_passes() {
        let reports = verify_all(Profile::Quick);
        assert_eq!(reports.len(), 4);
        for report in &reports {
            assert!(report.passed(), "{}", report.summary_line());
        }
    }

    #[test]
    fn single_cell_check_passes() {
        let report = verify_snk_grid(1, 1);
        assert!(report.passed());
    }

    #[test]
    fn colored_small_profile_passes() {
        assert!(verify_colored(0).passed());
        assert!(verify_colored(10).passed());
    }

    #[test]
    fn proposition_small_profiles_pass() {
        assert!(verify_q_triangle(0).passed());
        assert!(verify_q_triangle(6).passed());
    }

    #[test]
    fn cross_checks_pass() {
        assert!(verify_cross_checks(18).passed());
    }

    #[test]
    fn reports_are_deterministic() {
        let a = verify_all(Profile::Quick);
        let b = verify_all(Profile::Quick);
        assert_eq!(a, b);
        assert_eq!(reports_to_json(&a), reports_to_json(&b));
    }

    #[test]
    fn injected_off_by_one_is_caught() {
        let report = verify_snk_grid_with(12, 3, |n, k| {
            let mut v = crate::formulas::s_closed(n, k);
            if n == 10 && k == 3 {
                v += BigInt::one();
            }
            v
        });
        assert!(!report.passed());
        assert!(report
            .mismatches()
            .iter()
            .any(|m| m.input.contains("s(10,3)")));

        let report = verify_colored_with(8, |n| crate::formulas::c_closed(n) + BigInt::one());
        assert!(!report.passed());
    }

    #[test]
    fn json_shape() {
        let report = verify_snk_grid(2, 2);
        let value = report.to_json();
        assert_eq!(value["check_name"], "snk_grid");
        assert_eq!(value["passed"], true);
        assert!(value["mismatches"].as_array().unwrap().is_empty());
    }

    #[test]
    fn text_summary_mentions_every_check() {
        let reports = verify_all(Profile::Quick);
        let text = render_text(&reports);
        for name in ["snk_grid", "colored", "q_triangle", "cross_checks"] {
            assert!(text.contains(name), "missing {name}");
        }
        assert!(text.contains("all checks passed"));
    }
}
