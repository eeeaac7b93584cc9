use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use qset_core::computability::HARNESS_MAX_N;
use qset_core::dsl::{format_script, run_repl, run_script};
use qset_core::{exhaustive_undecidability_check, Universe};

const EXIT_DIAGNOSTIC: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Debug, Parser)]
#[command(name = "qset", version, about = "Finite quasi-set calculus")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Interactive read-eval-print loop.
    Repl {
        #[arg(long)]
        universe: PathBuf,
    },
    /// Evaluate a script line by line.
    Run {
        script: PathBuf,
        #[arg(long)]
        universe: PathBuf,
        /// Report every diagnostic instead of stopping at the first.
        #[arg(long)]
        keep_going: bool,
    },
    /// Play every membership strategy against every hidden configuration.
    CheckUndecidability {
        #[arg(long, default_value_t = HARNESS_MAX_N,
              value_parser = clap::value_parser!(u64).range(0..=HARNESS_MAX_N))]
        max_n: u64,
    },
    /// Print a script in canonical form.
    Fmt { script: PathBuf },
}

enum Failure {
    Usage(String),
    Diagnostic(String),
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))
}

fn load_universe(path: &Path) -> Result<Universe, Failure> {
    read(path)?
        .parse()
        .map_err(|e| Failure::Diagnostic(format!("{}:{e}", path.display())))
}

fn io_failure(e: io::Error) -> Failure {
    Failure::Usage(format!("output error: {e}"))
}

fn run(cli: Cli) -> Result<(), Failure> {
    let stdout = io::stdout();
    match cli.command {
        Command::Repl { universe } => {
            let universe = load_universe(&universe)?;
            let stdin = io::stdin();
            run_repl(&universe, stdin.lock(), &mut stdout.lock()).map_err(io_failure)
        }
        Command::Run {
            script,
            universe,
            keep_going,
        } => {
            let universe = load_universe(&universe)?;
            let source = read(&script)?;
            let name = script.display().to_string();
            let outcome = run_script(
                &name,
                &source,
                &universe,
                keep_going,
                &mut stdout.lock(),
                &mut io::stderr().lock(),
            )
            .map_err(io_failure)?;
            if outcome.success() {
                Ok(())
            } else {
                Err(Failure::Diagnostic(String::new()))
            }
        }
        Command::CheckUndecidability { max_n } => {
            let report = exhaustive_undecidability_check(max_n)
                .map_err(|e| Failure::Usage(e.to_string()))?;
            write!(stdout.lock(), "{report}").map_err(io_failure)?;
            if report.confirmed() {
                Ok(())
            } else {
                Err(Failure::Diagnostic(String::new()))
            }
        }
        Command::Fmt { script } => {
            let source = read(&script)?;
            let formatted = format_script(&source)
                .map_err(|d| Failure::Diagnostic(format!("{}:{d}", script.display())))?;
            stdout
                .lock()
                .write_all(formatted.as_bytes())
                .map_err(io_failure)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("qset: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Diagnostic(msg)) => {
            if !msg.is_empty() {
                eprintln!("{msg}");
            }
            ExitCode::from(EXIT_DIAGNOSTIC)
        }
    }
}
