use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;

use crossfam::{exit_code, run, Cli, CliError, USAGE_EXIT};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let started = Instant::now();
    let outcome = run(&cli.command).and_then(|mut report| {
        report.timing_ms = started.elapsed().as_millis() as u64;
        let bytes = report.emit(cli.format);
        match &cli.output {
            Some(path) => std::fs::write(path, &bytes).map_err(|source| CliError::Output {
                path: path.display().to_string(),
                source,
            })?,
            None => {
                let _ = std::io::stdout().write_all(&bytes);
            }
        }
        Ok(exit_code(&report))
    });
    match outcome {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(USAGE_EXIT as u8)
        }
    }
}
