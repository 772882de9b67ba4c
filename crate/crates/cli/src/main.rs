mod commands;
mod config;

use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use edv_core::enumeration::{ClassError, EnumerationError};
use edv_core::families::ExpressionError;
use edv_core::indices::IndexError;
use edv_core::verify::VerifyError;
use edv_core::ParseError;
use thiserror::Error;

use config::{Format, Partial};

/// Edge division vectors of trees: compare trees, evaluate indices and
/// check the extremal results exhaustively at small orders.
#[derive(Debug, Parser)]
#[command(name = "edv", version)]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, env = "EDV_FORMAT")]
    format: Option<Format>,
    /// Largest order the enumerator will sweep
    #[arg(long, global = true, env = "EDV_CAP")]
    cap: Option<usize>,
    /// Worker threads for sweeps
    #[arg(long, global = true, env = "EDV_WORKERS")]
    workers: Option<usize>,
    /// Absolute tolerance for floating index comparisons
    #[arg(long, global = true)]
    tolerance: Option<f64>,
    /// key=value file with defaults for the options above
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

/// Trees are given as a family expression such as `CP(7,4)^2`, as `@path` to
/// an edge-list file, as a canonical code starting with `(`, or as
/// `levels:0 1 2 ..`.
#[derive(Debug, Subcommand)]
enum Command {
    /// Print the edge division vector of a tree
    Edv { tree: String },
    /// Print the component split and mu value of every edge
    Mu { tree: String },
    /// Compare two trees of the same order
    Compare { left: String, right: String },
    /// Evaluate an index, e.g. `wiener`, `mwiener:-2`, `steiner:3`
    Index { name: String, tree: String },
    /// Build a family member and print its edge list
    Construct { expression: String },
    /// Stream the trees of a class (`all:n`, `cat:n:k`, `diam:n:d`, `pend:n:q`, `maxdeg:n:D`)
    Enumerate { class: String },
    /// Run one claim check, or all with `all`; `--list` prints the identifiers
    Verify {
        #[arg(required_unless_present = "list")]
        claim: Option<String>,
        #[arg(long)]
        n_max: Option<usize>,
        #[arg(long)]
        n_min: Option<usize>,
        #[arg(long)]
        list: bool,
    },
    /// Recompute the caterpillar Wiener bounds for 5 <= n <= 11
    Table4,
    /// List non-isomorphic trees of order n with equal vectors
    EquivPairs { n: usize },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("config: {0}")]
    Config(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Expression(#[from] ExpressionError),
    #[error(transparent)]
    Class(#[from] ClassError),
    #[error(transparent)]
    Enumeration(#[from] EnumerationError),
    #[error(transparent)]
    Index(#[from] IndexError),
    #[error(transparent)]
    Verify(#[from] VerifyError),
    #[error("{path}: {source}")]
    File { path: String, source: io::Error },
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

fn run(cli: Cli, out: &mut dyn Write) -> Result<bool, CliError> {
    // clap has already merged flags over EDV_* variables
    let flags = Partial { cap: cli.cap, tolerance: cli.tolerance, workers: cli.workers, format: cli.format };
    let file = match &cli.config {
        Some(path) => Partial::from_file(path)?,
        None => Partial::default(),
    };
    let config = flags.or(file).resolve()?;
    // a second build only fails if something already installed a pool
    let _ = rayon::ThreadPoolBuilder::new().num_threads(config.workers).build_global();
    commands::dispatch(cli.command, &config, out)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let result = run(cli, &mut out).and_then(|ok| {
        out.flush()?;
        Ok(ok)
    });
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(CliError::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("edv: {e}");
            ExitCode::from(2)
        }
    }
}
