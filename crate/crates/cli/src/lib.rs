//! Command-line surface over `crossfam-core`: argument parsing, command
//! dispatch, reports, and the acceptance suite.

pub mod cli;
pub mod commands;
pub mod report;
pub mod suite;
mod values;

pub use cli::{Cli, Command};
pub use commands::{run, CliError};
pub use report::{Check, Format, Report, Status};

/// Exit status for a finished run.
pub fn exit_code(report: &Report) -> i32 {
    if report.passed() {
        0
    } else {
        1
    }
}

/// Exit status for usage and validation errors.
pub const USAGE_EXIT: i32 = 2;
