//! Run the full cross-verification harness and print its text report.
//! Exits nonzero if any route disagrees with any other.
//!
//! Usage: cargo run --example verify_all [quick|full]

use std::process::ExitCode;

use superdiagonal::verify::{all_passed, render_text, verify_all, Profile};

fn main() -> ExitCode {
    let profile = match std::env::args().nth(1).as_deref() {
        None | Some("quick") => Profile::Quick,
        Some("full") => Profile::Full,
        Some(other) => {
            eprintln!("unknown profile '{other}' (expected quick or full)");
            return ExitCode::from(2);
        }
    };
    let reports = verify_all(profile);
    print!("{}", render_text(&reports));
    if all_passed(&reports) {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
