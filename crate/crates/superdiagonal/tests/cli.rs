//! End-to-end tests of the command-line surface: rendered listings,
//! golden CSV bytes, JSON round-trips, and exit codes.

use std::process::Command;

use serde_json::{json, Value};

use superdiagonal::cli::run_from;
use superdiagonal::golden;

fn run(args: &[&str]) -> (i32, String) {
    let mut full = vec!["superdiagonal"];
    full.extend(args);
    let mut buf = Vec::new();
    let code = run_from(full, &mut buf);
    (code, String::from_utf8(buf).expect("utf8 output"))
}

#[test]
fn table_snk_csv_is_byte_identical_to_reference() {
    let (code, out) = run(&["table", "snk", "5", "26", "--format", "csv"]);
    assert_eq!(code, 0);
    assert_eq!(out, golden::SNK_GRID_CSV);
}

#[test]
fn table_t_rows_match_q_polynomials() {
    let (code, out) = run(&["table", "T", "6", "6"]);
    assert_eq!(code, 0);
    let rows: Vec<&str> = out.lines().collect();
    assert_eq!(rows.len(), 7);
    for (m, reference) in golden::Q_ROWS.iter().enumerate() {
        let mut expected: Vec<i64> = reference.to_vec();
        expected.resize(7, 0);
        let got: Vec<i64> = rows[m]
            .split(' ')
            .map(|cell| cell.parse().unwrap())
            .collect();
        assert_eq!(got, expected, "row m = {m}");
    }
}

#[test]
fn sequence_s_prints_published_prefix() {
    let (code, out) = run(&["sequence", "s", "28"]);
    assert_eq!(code, 0);
    let values: Vec<u64> = out.lines().map(|l| l.parse().unwrap()).collect();
    assert_eq!(values, golden::S_VALUES);
}

#[test]
fn sequence_c_ends_at_596() {
    let (code, out) = run(&["sequence", "c", "10"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().last(), Some("596"));
}

#[test]
fn enumerate_json_count_matches_binomial_sum() {
    let (code, out) = run(&["enumerate", "20", "superdiagonal", "--format", "json"]);
    assert_eq!(code, 0);
    let value: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(value["count"], json!(551)); // sum_k C(20 - C(k,2) - 1, k-1)
    assert_eq!(
        value["count"].as_u64().unwrap() as usize,
        value["compositions"].as_array().unwrap().len()
    );
}

#[test]
fn enumerate_json_count_always_equals_listing_length() {
    for family in ["superdiagonal", "palindromic-superdiagonal", "palindromic"] {
        for n in 0..=12u64 {
            let (code, out) = run(&["enumerate", &n.to_string(), family, "--format", "json"]);
            assert_eq!(code, 0, "{family} n = {n}");
            let value: Value = serde_json::from_str(&out).unwrap();
            assert_eq!(value["n"], json!(n));
            assert_eq!(
                value["count"].as_u64().unwrap() as usize,
                value["compositions"].as_array().unwrap().len(),
                "{family} n = {n}"
            );
        }
    }
}

#[test]
fn enumerate_json_of_zero() {
    let (code, out) = run(&["enumerate", "0", "superdiagonal", "--format", "json"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), r#"{"n":0,"compositions":[[]],"count":1}"#);
}

#[test]
fn json_outputs_round_trip_byte_identically() {
    let commands: &[&[&str]] = &[
        &[
            "enumerate",
            "12",
            "palindromic-superdiagonal",
            "--format",
            "json",
        ],
        &["sequence", "s", "20", "--format", "json"],
        &["table", "snk", "5", "26", "--format", "json"],
        &["table", "stirling", "28", "8", "--format", "json"],
        &["verify", "--profile", "quick", "--format", "json"],
    ];
    for args in commands {
        let (code, out) = run(args);
        assert_eq!(code, 0, "{args:?}");
        let parsed: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(parsed.to_string(), out.trim_end(), "{args:?}");
    }
}

#[test]
fn enumerate_csv_has_index_header() {
    let (code, out) = run(&[
        "enumerate",
        "10",
        "palindromic-superdiagonal",
        "--format",
        "csv",
    ]);
    assert_eq!(code, 0);
    assert_eq!(out, "1,2,3\n10\n5,5\n4,2,4\n3,4,3\n");
}

#[test]
fn verify_quick_text_passes() {
    let (code, out) = run(&["verify"]);
    assert_eq!(code, 0);
    assert!(out.contains("all checks passed"));
    assert!(out.contains("PASS snk_grid"));
}

#[test]
fn verify_json_reports_all_passed() {
    let (code, out) = run(&["verify", "--profile", "quick", "--format", "json"]);
    assert_eq!(code, 0);
    let reports: Value = serde_json::from_str(&out).unwrap();
    let reports = reports.as_array().unwrap();
    assert_eq!(reports.len(), 4);
    for report in reports {
        assert_eq!(report["passed"], json!(true));
        assert!(report["mismatches"].as_array().unwrap().is_empty());
    }
}

#[test]
fn verify_csv_summarizes_checks() {
    let (code, out) = run(&["verify", "--format", "csv"]);
    assert_eq!(code, 0);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("check,passed,mismatches"));
    assert_eq!(lines.next(), Some("snk_grid,1,0"));
}

#[test]
fn usage_errors_exit_2() {
    let (code, _) = run(&["verify", "--profile", "nope"]);
    assert_eq!(code, 2);
    let (code, _) = run(&["unknown-subcommand"]);
    assert_eq!(code, 2);
    let (code, _) = run(&["sequence", "fibonacci", "5"]);
    assert_eq!(code, 2);
}

#[test]
fn binary_end_to_end() {
    let exe = env!("CARGO_BIN_EXE_superdiagonal");

    let output = Command::new(exe)
        .args(["enumerate", "10", "palindromic-superdiagonal"])
        .output()
        .expect("binary runs");
    assert_eq!(output.status.code(), Some(0));
    assert_eq!(
        String::from_utf8_lossy(&output.stdout),
        "10\n5 5\n4 2 4\n3 4 3\n"
    );

    let output = Command::new(exe)
        .args(["enumerate", "100", "superdiagonal"])
        .output()
        .expect("binary runs");
    assert_eq!(output.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&output.stderr).contains("limit"));

    let output = Command::new(exe)
        .args(["--definitely-not-a-flag"])
        .output()
        .expect("binary runs");
    assert_eq!(output.status.code(), Some(2));
}
