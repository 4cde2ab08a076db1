//! Command-line front end: argument parsing and exit codes only; all work
//! happens in [`linsep::cli`].
//!
//! Exit codes: 0 success, 1 usage error, 2 I/O or parse error, 3 failed
//! verification.

use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};

use linsep::cli::{
    cmd_compare, cmd_gen, cmd_train, cmd_verify, CliError, ExperimentSpec, Method,
};
use linsep::datagen::GenConfig;
use linsep::train::{InitMode, TrainConfig};

#[derive(Parser)]
#[command(
    name = "linsep",
    about = "Linear separation benchmark harness",
    version,
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a separable labelled dataset and its reference metadata
    Gen {
        /// Number of samples
        #[arg(long)]
        n: usize,
        /// Feature dimensionality
        #[arg(long)]
        d: usize,
        /// Generator seed
        #[arg(long)]
        seed: u64,
        /// Redraw points closer than this to the hidden plane
        #[arg(long, default_value_t = 0.0)]
        min_margin: f64,
        /// Dataset CSV path; the reference JSON lands next to it
        #[arg(long)]
        out: PathBuf,
    },
    /// Train one method on a dataset file and write its per-epoch curve
    Train {
        /// Dataset CSV to load
        #[arg(long)]
        data: PathBuf,
        /// approx | perceptron
        #[arg(long)]
        method: String,
        #[command(flatten)]
        train: TrainArgs,
        /// Per-epoch curve CSV path; companion files land next to it
        #[arg(long)]
        out: PathBuf,
    },
    /// Generate per-seed datasets and run every method on each
    Compare {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        /// Comma-separated seeds, one dataset per seed
        #[arg(long, value_delimiter = ',', required = true)]
        seeds: Vec<u64>,
        /// Comma-separated methods (default: both)
        #[arg(long, value_delimiter = ',', default_value = "approx,perceptron")]
        methods: Vec<String>,
        #[arg(long, default_value_t = 0.0)]
        min_margin: f64,
        #[command(flatten)]
        train: TrainArgs,
        /// Combined curve CSV path
        #[arg(long)]
        out: PathBuf,
    },
    /// Check a stored hyperplane against a labelled dataset
    Verify {
        #[arg(long)]
        data: PathBuf,
        /// Hyperplane JSON (a generator reference file also works)
        #[arg(long)]
        hyperplane: PathBuf,
    },
}

#[derive(Args)]
struct TrainArgs {
    #[arg(long, default_value_t = 1000)]
    max_epochs: usize,
    /// Signed distance a corrected point is placed at (approx method)
    #[arg(long, default_value_t = 1e-7)]
    epsilon: f64,
    /// first | random (random uses --seed)
    #[arg(long, default_value = "first")]
    init: String,
    /// Seed for random init and shuffling
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Visit samples in a fresh random order each epoch
    #[arg(long)]
    shuffle: bool,
    /// Record per-update snapshots and write a trace CSV
    #[arg(long)]
    trace: bool,
}

impl TrainArgs {
    fn to_config(&self) -> Result<TrainConfig, CliError> {
        let init = match self.init.as_str() {
            "first" => InitMode::FirstSample,
            "random" => InitMode::RandomUnit { seed: self.seed },
            other => {
                return Err(CliError::Usage(format!(
                    "unknown init mode '{other}' (expected first or random)"
                )))
            }
        };
        if self.max_epochs == 0 {
            return Err(CliError::Usage("--max-epochs must be at least 1".into()));
        }
        if !(self.epsilon >= 0.0 && self.epsilon.is_finite()) {
            return Err(CliError::Usage("--epsilon must be finite and nonnegative".into()));
        }
        Ok(TrainConfig {
            max_epochs: self.max_epochs,
            epsilon: self.epsilon,
            init,
            record_trace: self.trace,
            shuffle_seed: self.shuffle.then_some(self.seed),
        })
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(code) => code,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(e @ CliError::File { .. }) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<ExitCode, CliError> {
    match command {
        Command::Gen { n, d, seed, min_margin, out } => {
            if n == 0 {
                return Err(CliError::Usage("--n must be at least 1".into()));
            }
            if d == 0 {
                return Err(CliError::Usage("--d must be at least 1".into()));
            }
            let cfg = GenConfig { min_margin, ..GenConfig::new(n, d, seed) };
            let (csv, reference) = cmd_gen(&cfg, &out)?;
            println!("wrote {} and {}", csv.display(), reference.display());
            Ok(ExitCode::SUCCESS)
        }
        Command::Train { data, method, train, out } => {
            let method = Method::from_str(&method).map_err(CliError::Usage)?;
            let cfg = train.to_config()?;
            let summary = cmd_train(&data, method, &cfg, &out)?;
            println!("{summary}");
            println!("curve: {}", summary.curve_path.display());
            if let Some(path) = &summary.hyperplane_path {
                println!("hyperplane: {}", path.display());
            }
            if let Some(path) = &summary.trace_path {
                println!("trace: {}", path.display());
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Compare { n, d, seeds, methods, min_margin, train, out } => {
            let methods = methods
                .iter()
                .map(|m| Method::from_str(m))
                .collect::<Result<Vec<_>, _>>()
                .map_err(CliError::Usage)?;
            let cfg = train.to_config()?;
            let spec = ExperimentSpec {
                n,
                d,
                seeds,
                methods,
                max_epochs: cfg.max_epochs,
                epsilon: cfg.epsilon,
                min_margin,
                train: cfg,
                output_path: out.clone(),
            };
            let summaries = cmd_compare(&spec)?;
            println!(
                "{:<12} {:>6} {:>10} {:>8} {:>10} {:>10}",
                "method", "seed", "converged", "epochs", "updates", "wall_ms"
            );
            for s in &summaries {
                println!(
                    "{:<12} {:>6} {:>10} {:>8} {:>10} {:>10.1}",
                    s.method.to_string(),
                    s.seed,
                    s.converged,
                    s.epochs_run,
                    s.total_updates,
                    s.wall_ms
                );
            }
            println!("curves: {}", out.display());
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { data, hyperplane } => {
            let violations = cmd_verify(&data, &hyperplane)?;
            if violations == 0 {
                println!("verified: hyperplane classifies every sample correctly");
                Ok(ExitCode::SUCCESS)
            } else {
                println!("verification failed: {violations} violations");
                Ok(ExitCode::from(3))
            }
        }
    }
}
