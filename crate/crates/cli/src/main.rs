use std::process::ExitCode;

use clap::Parser;
use clifford_cli::{cmd_approx, cmd_table, cmd_verify, Cli, Command};

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    match cli.command {
        Command::Verify(args) => {
            let reports = cmd_verify(&args)?;
            let failed = reports.iter().filter(|r| !r.pass).count();
            eprintln!("{} checks, {} failed", reports.len(), failed);
            Ok(if failed == 0 { ExitCode::SUCCESS } else { ExitCode::FAILURE })
        }
        Command::Approx(args) => {
            cmd_approx(&args)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Table(args) => {
            cmd_table(&args)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
