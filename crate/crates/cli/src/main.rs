//! Command-line front end: ingest point data, run the reconstruction
//! experiments, emit CSV or JSON for external plotting.

mod commands;
mod dataset;
mod emit;

use std::fmt;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

#[derive(Parser)]
#[command(
    name = "pph",
    version,
    about = "Nonlinear piecewise-cubic reconstruction on non-uniform grids"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sample the reconstruction curves over the grid span.
    Reconstruct(RunArgs),
    /// Approximation-order table under dyadic grid refinement.
    OrderStudy(RunArgs),
    /// Convexity thresholds and second-derivative curves for one stencil.
    Convexity(RunArgs),
    /// Reconstruction behaviour around a jump discontinuity.
    Singularity(RunArgs),
}

#[derive(Args)]
pub struct RunArgs {
    /// Point data file: two-column CSV `x,f` or JSON {"x": [...], "f": [...]}.
    #[arg(long, conflicts_with = "dataset")]
    input: Option<PathBuf>,
    /// Built-in dataset: fig1, sine-nonuniform, jump, quadratic.
    #[arg(long)]
    dataset: Option<String>,
    /// Comma-separated operator set.
    #[arg(long, default_value = "lagrange,pph,translated")]
    operators: String,
    /// Comma-separated shift constants for the translated operator.
    #[arg(long, default_value = "0.5,0.05")]
    epsilon: String,
    /// Number of dyadic refinements for order studies.
    #[arg(long, default_value_t = 5)]
    levels: usize,
    /// Sample points per interval; the PPH_SAMPLES environment variable
    /// overrides the built-in default of 20.
    #[arg(long)]
    samples: Option<usize>,
    /// Output format: csv or json.
    #[arg(long, default_value = "csv")]
    format: String,
    /// Output path; stdout when omitted.
    #[arg(long)]
    output: Option<PathBuf>,
}

/// Failure classes mapped onto exit codes: input and configuration
/// problems exit 2, numeric failures exit 3.
#[derive(Debug)]
pub enum CliError {
    Config(String),
    Parse(String),
    Io(String),
    Numeric(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Config(_) | CliError::Parse(_) | CliError::Io(_) => 2,
            CliError::Numeric(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Config(msg) => write!(f, "configuration error: {msg}"),
            CliError::Parse(msg) => write!(f, "input error: {msg}"),
            CliError::Io(msg) => write!(f, "io error: {msg}"),
            CliError::Numeric(msg) => write!(f, "numeric failure: {msg}"),
        }
    }
}

/// Output format selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

impl Format {
    fn parse(s: &str) -> Result<Self, CliError> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(CliError::Config(format!("unknown format {other:?} (csv|json)"))),
        }
    }
}

fn resolve_samples(args: &RunArgs) -> Result<usize, CliError> {
    let samples = match args.samples {
        Some(s) => s,
        None => match std::env::var("PPH_SAMPLES") {
            Ok(raw) => raw.parse().map_err(|_| {
                CliError::Config(format!("PPH_SAMPLES must be an integer, got {raw:?}"))
            })?,
            Err(_) => 20,
        },
    };
    if samples < 2 {
        return Err(CliError::Config(format!("need at least 2 samples per interval, got {samples}")));
    }
    Ok(samples)
}

fn run(cli: Cli) -> Result<(), CliError> {
    let (args, text) = match &cli.command {
        Command::Reconstruct(args) => (args, commands::reconstruct(args)?),
        Command::OrderStudy(args) => (args, commands::order_study(args)?),
        Command::Convexity(args) => (args, commands::convexity(args)?),
        Command::Singularity(args) => (args, commands::singularity(args)?),
    };
    match &args.output {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}
