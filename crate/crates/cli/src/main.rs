use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use abmink_cli::checks::{run_checks, tolerance_from_env};
use abmink_cli::{emit, parse_config, run, Format, ScenarioKind};
use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(name = "abmink", version, about = "Abraham and Minkowski momentum scenarios for light in media")]
struct Cli {
    /// List the available scenarios and exit.
    #[arg(long)]
    list: bool,
    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate the scenario described by a TOML config.
    Run {
        config: PathBuf,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
        /// Write to this file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List the available scenarios.
    List,
    /// Run the built-in cross-check suite.
    Check,
}

fn list() -> ExitCode {
    for k in ScenarioKind::ALL {
        println!("{:<18} {}", k.name(), k.summary());
    }
    ExitCode::SUCCESS
}

fn run_config(path: &PathBuf, format: Format, out: Option<&PathBuf>) -> ExitCode {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", path.display());
            return ExitCode::from(2);
        }
    };
    let request = match parse_config(&text) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {}: {e}", path.display());
            return ExitCode::from(2);
        }
    };
    let report = match run(&request) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::FAILURE;
        }
    };
    let bytes = emit(&report, format);
    let written = match out {
        Some(p) => std::fs::write(p, &bytes),
        None => std::io::stdout().lock().write_all(&bytes),
    };
    if let Err(e) = written {
        eprintln!("error: writing output: {e}");
        return ExitCode::FAILURE;
    }
    ExitCode::SUCCESS
}

fn check() -> ExitCode {
    let tol = match tolerance_from_env() {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let items = run_checks(tol);
    for item in &items {
        println!("{item}");
    }
    if items.iter().all(|i| i.passed) {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.list {
        return list();
    }
    match cli.command {
        Some(Command::Run { config, format, out }) => run_config(&config, format, out.as_ref()),
        Some(Command::List) => list(),
        Some(Command::Check) => check(),
        None => {
            eprintln!("error: no command given (try `abmink --help`)");
            ExitCode::from(2)
        }
    }
}
