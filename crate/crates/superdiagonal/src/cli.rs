//! Command-line front end: enumeration listings, sequence and table
//! emission, and the verification harness.
//!
//! Exit codes: 0 on success, 1 when verification finds a mismatch, 2 for
//! usage errors (including enumeration limits hit without `--force`).

use std::ffi::OsString;
use std::fmt;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use crate::compositions::{
    enumerate_palindromic, enumerate_palindromic_superdiagonal, enumerate_superdiagonal,
    Composition,
};
use crate::formulas::{
    c_series, palindromic_total, s_closed, s_series, superdiagonal_total, StirlingTable, TriangleT,
};
use crate::verify::{self, Profile};

/// Listings larger than these blow up combinatorially; `--force`
/// overrides them.
pub const SUPERDIAGONAL_LIMIT: u64 = 60;
pub const PALINDROMIC_LIMIT: u64 = 24;

/// Largest integer JSON emits as a native number; anything bigger goes
/// out as a decimal string so ordinary double-based parsers stay exact.
pub const JSON_SAFE_MAX: i64 = (1 << 53) - 1;

#[derive(Debug)]
pub enum CliError {
    LimitExceeded {
        family: &'static str,
        n: u64,
        limit: u64,
    },
    Io(std::io::Error),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::LimitExceeded { family, n, limit } => write!(
                f,
                "n = {n} exceeds the {family} enumeration limit of {limit}; \
                 pass --force to override"
            ),
            CliError::Io(err) => write!(f, "{err}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<std::io::Error> for CliError {
    fn from(err: std::io::Error) -> Self {
        CliError::Io(err)
    }
}

#[derive(Parser)]
#[command(
    name = "superdiagonal",
    about = "Exact enumeration of palindromic and colored superdiagonal compositions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List every composition of n in a family, one per record
    Enumerate {
        /// Weight to enumerate
        n: u64,
        /// Which family of compositions to list
        #[arg(value_enum)]
        family: Family,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
        /// Override the enumeration size limits
        #[arg(long)]
        force: bool,
    },
    /// Print the values of a sequence for 0 <= n <= n_max
    Sequence {
        /// Which sequence to print
        #[arg(value_enum)]
        name: SequenceName,
        /// Largest index to print
        n_max: u64,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// Print a table of values
    ///
    /// snk counts rows/columns from 1 (k rows, n columns); T and
    /// stirling treat rows/cols as inclusive maximum indices from 0.
    Table {
        /// Which table to print
        #[arg(value_enum)]
        name: TableName,
        rows: usize,
        cols: usize,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// Cross-verify enumeration, closed forms, series, and published data
    Verify {
        #[arg(long, value_enum, default_value_t)]
        profile: ProfileArg,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    Superdiagonal,
    PalindromicSuperdiagonal,
    Palindromic,
}

impl Family {
    fn label(self) -> &'static str {
        match self {
            Family::Superdiagonal => "superdiagonal",
            Family::PalindromicSuperdiagonal => "palindromic-superdiagonal",
            Family::Palindromic => "palindromic",
        }
    }

    fn limit(self) -> u64 {
        match self {
            Family::Superdiagonal | Family::PalindromicSuperdiagonal => SUPERDIAGONAL_LIMIT,
            Family::Palindromic => PALINDROMIC_LIMIT,
        }
    }

    fn enumerate(self, n: u64) -> Vec<Composition> {
        match self {
            Family::Superdiagonal => enumerate_superdiagonal(n),
            Family::PalindromicSuperdiagonal => enumerate_palindromic_superdiagonal(n),
            Family::Palindromic => enumerate_palindromic(n),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SequenceName {
    /// s(n): palindromic superdiagonal compositions of n
    S,
    /// c(n): colored superdiagonal compositions of n
    C,
    /// All superdiagonal compositions of n
    SuperdiagonalTotal,
    /// All palindromic compositions of n
    PalindromicTotal,
}

impl SequenceName {
    fn label(self) -> &'static str {
        match self {
            SequenceName::S => "s",
            SequenceName::C => "c",
            SequenceName::SuperdiagonalTotal => "superdiagonal-total",
            SequenceName::PalindromicTotal => "palindromic-total",
        }
    }

    /// Values for 0 <= n <= n_max; s and c go through the series route.
    fn values(self, n_max: u64) -> Vec<BigInt> {
        match self {
            SequenceName::S => s_series(n_max as usize).coeffs().to_vec(),
            SequenceName::C => c_series(n_max as usize).coeffs().to_vec(),
            SequenceName::SuperdiagonalTotal => (0..=n_max).map(superdiagonal_total).collect(),
            SequenceName::PalindromicTotal => (0..=n_max).map(palindromic_total).collect(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableName {
    /// s(n,k) grid, k rows and n columns counted from 1
    Snk,
    /// Coefficients T(m,k) of the polynomials Q_m, indices from 0
    #[value(name = "T", alias = "t")]
    T,
    /// Unsigned Stirling numbers of the first kind, indices from 0
    Stirling,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
enum OutputFormat {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
enum ProfileArg {
    #[default]
    Quick,
    Full,
}

impl From<ProfileArg> for Profile {
    fn from(arg: ProfileArg) -> Self {
        match arg {
            ProfileArg::Quick => Profile::Quick,
            ProfileArg::Full => Profile::Full,
        }
    }
}

/// Parse real process arguments and run, writing to stdout.
pub fn run() -> i32 {
    run_from(std::env::args_os(), &mut std::io::stdout().lock())
}

/// Parse `args` (including the binary name) and run, writing the report
/// to `out`. Returns the process exit code; usage errors print through
/// clap to the standard streams.
pub fn run_from<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            let code = err.exit_code();
            let _ = err.print();
            return code;
        }
    };
    match execute(&cli.command, out) {
        Ok(code) => code,
        Err(err @ CliError::LimitExceeded { .. }) => {
            eprintln!("error: {err}");
            2
        }
        Err(CliError::Io(err)) => {
            eprintln!("error: {err}");
            1
        }
    }
}

fn execute(command: &Command, out: &mut dyn Write) -> Result<i32, CliError> {
    match *command {
        Command::Enumerate {
            n,
            family,
            format,
            force,
        } => {
            if n > family.limit() && !force {
                return Err(CliError::LimitExceeded {
                    family: family.label(),
                    n,
                    limit: family.limit(),
                });
            }
            let compositions = family.enumerate(n);
            render_enumeration(n, &compositions, format, out)?;
            Ok(0)
        }
        Command::Sequence {
            name,
            n_max,
            format,
        } => {
            let values = name.values(n_max);
            render_sequence(name.label(), n_max, &values, format, out)?;
            Ok(0)
        }
        Command::Table {
            name,
            rows,
            cols,
            format,
        } => {
            let (header, grid) = build_table(name, rows, cols);
            render_table(name, &header, &grid, format, out)?;
            Ok(0)
        }
        Command::Verify { profile, format } => {
            let reports = verify::verify_all(profile.into());
            render_verify(&reports, format, out)?;
            Ok(if verify::all_passed(&reports) { 0 } else { 1 })
        }
    }
}

fn render_enumeration(
    n: u64,
    compositions: &[Composition],
    format: OutputFormat,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    match format {
        OutputFormat::Text => {
            for c in compositions {
                writeln!(out, "{c}")?;
            }
        }
        OutputFormat::Json => {
            let value = json!({
                "n": n,
                "compositions": compositions
                    .iter()
                    .map(|c| c.parts().to_vec())
                    .collect::<Vec<_>>(),
                "count": compositions.len(),
            });
            writeln!(out, "{value}")?;
        }
        OutputFormat::Csv => {
            let widest = compositions
                .iter()
                .map(Composition::part_count)
                .max()
                .unwrap_or(0);
            writeln!(out, "{}", join_indices(1..=widest))?;
            for c in compositions {
                let row: Vec<String> = c.parts().iter().map(u64::to_string).collect();
                writeln!(out, "{}", row.join(","))?;
            }
        }
    }
    Ok(())
}

fn render_sequence(
    name: &str,
    n_max: u64,
    values: &[BigInt],
    format: OutputFormat,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    match format {
        OutputFormat::Text => {
            for v in values {
                writeln!(out, "{v}")?;
            }
        }
        OutputFormat::Json => {
            let value = json!({
                "name": name,
                "n_max": n_max,
                "values": values.iter().map(json_int).collect::<Vec<_>>(),
            });
            writeln!(out, "{value}")?;
        }
        OutputFormat::Csv => {
            writeln!(out, "n,value")?;
            for (n, v) in values.iter().enumerate() {
                writeln!(out, "{n},{v}")?;
            }
        }
    }
    Ok(())
}

/// Header of column indices plus the value grid for one table.
fn build_table(name: TableName, rows: usize, cols: usize) -> (Vec<usize>, Vec<Vec<BigInt>>) {
    match name {
        TableName::Snk => {
            let header = (1..=cols).collect();
            let grid = (1..=rows)
                .map(|k| (1..=cols).map(|n| s_closed(n as u64, k as u64)).collect())
                .collect();
            (header, grid)
        }
        TableName::T => {
            let triangle = TriangleT::build(rows);
            let header = (0..=cols).collect();
            let grid = (0..=rows)
                .map(|m| (0..=cols).map(|k| triangle.get(m, k)).collect())
                .collect();
            (header, grid)
        }
        TableName::Stirling => {
            let table = StirlingTable::build(rows);
            let header = (0..=cols).collect();
            let grid = (0..=rows)
                .map(|n| (0..=cols).map(|k| table.get(n, k)).collect())
                .collect();
            (header, grid)
        }
    }
}

fn render_table(
    name: TableName,
    header: &[usize],
    grid: &[Vec<BigInt>],
    format: OutputFormat,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    match format {
        OutputFormat::Text => {
            for row in grid {
                let cells: Vec<String> = row.iter().map(BigInt::to_string).collect();
                writeln!(out, "{}", cells.join(" "))?;
            }
        }
        OutputFormat::Json => {
            let label = match name {
                TableName::Snk => "snk",
                TableName::T => "T",
                TableName::Stirling => "stirling",
            };
            let value = json!({
                "name": label,
                "columns": header,
                "rows": grid
                    .iter()
                    .map(|row| row.iter().map(json_int).collect::<Vec<_>>())
                    .collect::<Vec<_>>(),
            });
            writeln!(out, "{value}")?;
        }
        OutputFormat::Csv => {
            writeln!(out, "{}", join_indices(header.iter().copied()))?;
            for row in grid {
                let cells: Vec<String> = row.iter().map(BigInt::to_string).collect();
                writeln!(out, "{}", cells.join(","))?;
            }
        }
    }
    Ok(())
}

fn render_verify(
    reports: &[verify::VerificationReport],
    format: OutputFormat,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    match format {
        OutputFormat::Text => {
            write!(out, "{}", verify::render_text(reports))?;
        }
        OutputFormat::Json => {
            writeln!(out, "{}", verify::reports_to_json(reports))?;
        }
        OutputFormat::Csv => {
            writeln!(out, "check,passed,mismatches")?;
            for report in reports {
                writeln!(
                    out,
                    "{},{},{}",
                    report.check_name,
                    u8::from(report.passed()),
                    report.mismatches().len()
                )?;
            }
        }
    }
    Ok(())
}

fn join_indices(indices: impl Iterator<Item = usize>) -> String {
    indices.map(|i| i.to_string()).collect::<Vec<_>>().join(",")
}

/// A JSON value for an exact integer: native when it fits in a double
/// exactly, a decimal string otherwise.
fn json_int(v: &BigInt) -> Value {
    match v.to_i64() {
        Some(i) if i.abs() <= JSON_SAFE_MAX => json!(i),
        _ => json!(v.to_string()),
    }
}
