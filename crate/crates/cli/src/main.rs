//! `specx`: analyze graph files, build the extremal families, and run the
//! exhaustive or sampled verifications.

mod analyze;
mod construct;
mod output;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use specx_core::Execution;

#[derive(Parser, Debug)]
#[command(name = "specx", version, about = "Spectral radius and essential connectivity toolkit")]
struct Cli {
    /// Absolute tolerance for comparing spectral radii.
    #[arg(long, global = true, default_value_t = 1e-8)]
    tol: f64,
    /// Seed for sampled verification.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Worker threads (defaults to the available cores).
    #[arg(long, global = true, env = "SPECX_WORKERS")]
    workers: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Kv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Exhaustive,
    Sampled,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Report invariants of every graph in a graph6, digraph6 or edge-list file.
    Analyze {
        path: PathBuf,
        /// Read an edge list as arcs of a digraph.
        #[arg(long)]
        directed: bool,
    },
    /// Write a family member as graph6/digraph6 with a provenance comment.
    Construct {
        /// `g(n,kappa,delta)` or `dg(n,k,m)`.
        #[arg(long)]
        family: String,
        /// Output file (standard output when omitted).
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Verify one parameter tuple: `t1 n=7 delta=2 kappa=2` or `t2 n=5 k=1`.
    Verify {
        theorem: String,
        params: Vec<String>,
        #[arg(long, value_enum, default_value_t = Mode::Exhaustive)]
        mode: Mode,
        #[arg(long, default_value_t = 100_000)]
        trials: u64,
    },
    /// Verify every feasible tuple in a range: `t1 n=5..8` or `t2 n=6..8 k=1..2`.
    Sweep {
        theorem: String,
        params: Vec<String>,
        #[arg(long, value_enum, default_value_t = Mode::Exhaustive)]
        mode: Mode,
        #[arg(long, default_value_t = 100_000)]
        trials: u64,
    },
}

/// Settings shared by every command.
#[derive(Clone, Copy, Debug)]
pub struct RunConfig {
    pub tol: f64,
    pub seed: u64,
    pub workers: usize,
    pub format: Format,
}

impl RunConfig {
    pub fn execution(&self) -> Execution {
        if self.workers > 1 {
            Execution::Parallel
        } else {
            Execution::Sequential
        }
    }
}

#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Parse(String),
    Runtime(String),
}

impl From<specx_core::Error> for Failure {
    fn from(e: specx_core::Error) -> Self {
        match e {
            specx_core::Error::Parse { .. } => Failure::Parse(e.to_string()),
            specx_core::Error::InvalidParameters(_) | specx_core::Error::OutOfRange(_) => Failure::Usage(e.to_string()),
            _ => Failure::Runtime(e.to_string()),
        }
    }
}

/// Exit status of a successful run.
pub enum Status {
    Ok,
    Counterexample,
}

fn run(cli: Cli) -> Result<Status, Failure> {
    let workers = cli.workers.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    if cli.tol.is_nan() || cli.tol <= 0.0 {
        return Err(Failure::Usage("--tol must be positive".into()));
    }
    if workers < 1 {
        return Err(Failure::Usage("--workers must be at least 1".into()));
    }
    let cfg = RunConfig { tol: cli.tol, seed: cli.seed, workers, format: cli.format };
    specx_core::exec::with_workers(workers, move || match cli.command {
        Command::Analyze { path, directed } => analyze::run(&cfg, &path, directed).map(|()| Status::Ok),
        Command::Construct { family, output } => construct::run(&cfg, &family, output.as_deref()).map(|()| Status::Ok),
        Command::Verify { theorem, params, mode, trials } => verify::verify(&cfg, &theorem, &params, mode, trials),
        Command::Sweep { theorem, params, mode, trials } => verify::sweep(&cfg, &theorem, &params, mode, trials),
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(Status::Ok) => ExitCode::SUCCESS,
        Ok(Status::Counterexample) => ExitCode::from(3),
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Parse(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Runtime(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
    }
}
