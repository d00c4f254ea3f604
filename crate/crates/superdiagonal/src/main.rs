use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(superdiagonal::cli::run() as u8)
}
