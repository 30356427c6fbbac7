use std::io::{self, BufWriter};
use std::process::ExitCode;

use clap::Parser;

use klr_cli::{run, validate, Cli, Failure};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout().lock();
    match validate(&cli).and_then(|()| run(&cli, BufWriter::new(stdout))) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::CheckFailed) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
