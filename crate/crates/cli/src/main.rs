mod args;
mod ff;
mod rep;
mod report;
mod wf;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};

const EXIT_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;

fn run(cli: &Cli) -> anyhow::Result<report::Report> {
    let tol = cli.common.tolerance;
    if !(tol > 0.0) {
        anyhow::bail!("--tolerance must be positive, got {tol}");
    }
    match &cli.command {
        Command::Rep(cmd) => rep::run_rep(cmd, tol),
        Command::Ladder(cmd) => rep::run_ladder(cmd, tol),
        Command::Ff(cmd) => ff::run(cmd),
        Command::Wf(cmd) => wf::run(cmd),
    }
}

fn emit(cli: &Cli, text: &str) -> anyhow::Result<()> {
    match &cli.common.out {
        Some(path) => std::fs::write(path, text)?,
        None => std::io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn main() -> ExitCode {
    // clap exits with status 2 on usage errors
    let cli = Cli::parse();
    let outcome = run(&cli).and_then(|report| {
        let config = serde_json::to_value(&cli)?;
        emit(&cli, &report.render(cli.common.format, &config)?)?;
        Ok(report.failure)
    });
    match outcome {
        Ok(None) => ExitCode::SUCCESS,
        Ok(Some(failure)) => {
            eprint!("verification failed: {failure}");
            ExitCode::from(EXIT_FAILED)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
