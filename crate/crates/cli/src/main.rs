//! `paretoplace`: simulation harness, grid oracle and session server.

use std::io::{self, Write};
use std::net::{Ipv4Addr, SocketAddr};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use paretoplace_core::harness::{run_simulation, sweep_weights, SimulationConfig};
use paretoplace_core::pareto::{brute_force_front, io::write_csv};
use paretoplace_core::Error;

#[derive(Debug, Parser)]
#[command(name = "paretoplace", version, about = "Pareto-optimal placement of a floating UI element")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Simulation harness.
    Sim {
        #[command(subcommand)]
        command: SimCommand,
    },
    /// Brute-force grid front as CSV.
    Oracle {
        #[arg(long, default_value_t = 96)]
        resolution: usize,
        /// Pose and bounds come from this simulation config; defaults otherwise.
        #[arg(long)]
        config: Option<PathBuf>,
        /// Output file; stdout if omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// HTTP session service.
    Serve {
        #[arg(long, default_value_t = 8080)]
        port: u16,
        #[arg(long, default_value = "data")]
        data: PathBuf,
    },
}

#[derive(Debug, Subcommand)]
enum SimCommand {
    /// Oracle vs NSGA-III vs weighted sum; writes CSV/JSON into --out.
    Run {
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Which oracle members a sweep of scalarization weights can reach.
    Sweep {
        #[arg(long, default_value_t = 11)]
        steps: usize,
        #[arg(long)]
        config: Option<PathBuf>,
    },
}

enum Failure {
    Validation(String),
    Runtime(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_validation() {
            Failure::Validation(e.to_string())
        } else {
            Failure::Runtime(e.to_string())
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Runtime(e.to_string())
    }
}

fn load_config(path: Option<&Path>) -> Result<SimulationConfig, Failure> {
    let config = match path {
        Some(p) => SimulationConfig::load(p)?,
        None => SimulationConfig::default(),
    };
    config.validate()?;
    Ok(config)
}

fn print_json<T: serde::Serialize>(value: &T) -> Result<(), Failure> {
    let mut out = io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, value).map_err(|e| Failure::Runtime(e.to_string()))?;
    writeln!(out)?;
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Sim {
            command: SimCommand::Run { config, out },
        } => {
            let config = load_config(config.as_deref())?;
            let report = run_simulation(&config, &out)?;
            print_json(&report)
        }
        Command::Sim {
            command: SimCommand::Sweep { steps, config },
        } => {
            let config = load_config(config.as_deref())?;
            print_json(&sweep_weights(&config, steps)?)
        }
        Command::Oracle {
            resolution,
            config,
            out,
        } => {
            let config = load_config(config.as_deref())?;
            let front = brute_force_front(&config.problem(), resolution)?;
            match out {
                Some(path) => paretoplace_core::pareto::io::save_csv(&front, &path)?,
                None => write_csv(&front, io::stdout().lock())?,
            }
            Ok(())
        }
        Command::Serve { port, data } => {
            let runtime = tokio::runtime::Runtime::new()?;
            let addr = SocketAddr::from((Ipv4Addr::LOCALHOST, port));
            eprintln!("listening on http://{addr}, sessions in {}", data.display());
            runtime.block_on(paretoplace_service::serve(addr, data))?;
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Validation(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Runtime(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
