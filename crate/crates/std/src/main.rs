use std::process::ExitCode;

use clap::Parser;
use pathrsk::app::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(pathrsk::CliError::Verification(report)) => {
            print!("{report}");
            eprintln!("verification failed");
            ExitCode::from(pathrsk::CliError::VERIFICATION)
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
