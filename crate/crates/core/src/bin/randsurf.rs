use std::process::ExitCode;

use clap::Parser;
use randsurf::harness::{execute, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = execute(&cli.command).and_then(|text| match &cli.command.output().out {
        Some(path) => std::fs::write(path, text).map_err(Into::into),
        None => {
            print!("{text}");
            Ok(())
        }
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_precondition() { 2 } else { 1 })
        }
    }
}
