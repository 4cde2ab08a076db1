//! Implementations behind the `linsep` binary's subcommands.
//!
//! Each command is an ordinary function over paths and configs so that the
//! binary stays a thin argument parser and integration tests can drive the
//! same code paths directly. Commands write files and return summaries;
//! printing is left to the caller.

use std::fmt;
use std::fs;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::time::Instant;

use crate::datagen::{generate, GenConfig, GENERATOR_NAME};
use crate::io::{
    read_dataset_csv, read_hyperplane_json, write_dataset_csv, write_hyperplane_json,
    write_reference_json, IoError,
};
use crate::preprocess::{extend_dimension, preprocess_dataset, recover_hyperplane, LabeledSample};
use crate::train::{approx_train, perceptron_train, TrainConfig, TrainReport};

/// Which trainer to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Approx,
    Perceptron,
}

impl Method {
    pub const ALL: [Method; 2] = [Method::Approx, Method::Perceptron];
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Method::Approx => write!(f, "approx"),
            Method::Perceptron => write!(f, "perceptron"),
        }
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "approx" => Ok(Method::Approx),
            "perceptron" => Ok(Method::Perceptron),
            other => Err(format!("unknown method '{other}' (expected approx or perceptron)")),
        }
    }
}

/// One full comparison experiment: datasets shared per seed across methods.
#[derive(Debug, Clone)]
pub struct ExperimentSpec {
    pub n: usize,
    pub d: usize,
    pub seeds: Vec<u64>,
    pub methods: Vec<Method>,
    pub max_epochs: usize,
    pub epsilon: f64,
    pub min_margin: f64,
    /// Remaining trainer knobs (init, shuffle, trace). The explicit
    /// `max_epochs` and `epsilon` fields above take precedence.
    pub train: TrainConfig,
    pub output_path: PathBuf,
}

impl ExperimentSpec {
    fn validate(&self) -> Result<(), CliError> {
        if self.n == 0 {
            return Err(CliError::Usage("--n must be at least 1".into()));
        }
        if self.d == 0 {
            return Err(CliError::Usage("--d must be at least 1".into()));
        }
        if self.max_epochs == 0 {
            return Err(CliError::Usage("--max-epochs must be at least 1".into()));
        }
        if self.seeds.is_empty() {
            return Err(CliError::Usage("at least one seed is required".into()));
        }
        if self.methods.is_empty() {
            return Err(CliError::Usage("at least one method is required".into()));
        }
        Ok(())
    }
}

#[derive(Debug)]
pub enum CliError {
    /// Invalid flag values; maps to exit code 1.
    Usage(String),
    /// I/O or parse failure on a named file; maps to exit code 2.
    File { path: PathBuf, source: IoError },
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "{msg}"),
            CliError::File { path, source } => write!(f, "{}: {source}", path.display()),
        }
    }
}

impl std::error::Error for CliError {}

fn file_error(path: &Path) -> impl FnOnce(IoError) -> CliError + '_ {
    move |source| CliError::File { path: path.to_path_buf(), source }
}

/// Companion path for the reference file next to a dataset CSV.
pub fn reference_path(dataset: &Path) -> PathBuf {
    dataset.with_extension("ref.json")
}

/// Companion path for the recovered hyperplane next to a curve CSV.
pub fn hyperplane_path(out: &Path) -> PathBuf {
    out.with_extension("hyperplane.json")
}

/// Companion path for the per-update trace next to a curve CSV.
pub fn trace_path(out: &Path) -> PathBuf {
    out.with_extension("trace.csv")
}

/// Generates a dataset and writes it plus its reference metadata.
///
/// Returns the two paths written: the dataset CSV and the reference JSON.
pub fn cmd_gen(cfg: &GenConfig, out: &Path) -> Result<(PathBuf, PathBuf), CliError> {
    let (samples, reference) =
        generate(cfg).map_err(|e| CliError::Usage(e.to_string()))?;
    write_dataset_csv(out, &samples).map_err(file_error(out))?;
    let ref_path = reference_path(out);
    write_reference_json(&ref_path, &reference, cfg.seed, GENERATOR_NAME)
        .map_err(file_error(&ref_path))?;
    Ok((out.to_path_buf(), ref_path))
}

/// Result of one training run as reported by the CLI.
#[derive(Debug, Clone)]
pub struct TrainSummary {
    pub method: Method,
    pub converged: bool,
    pub epochs_run: usize,
    pub total_updates: usize,
    pub final_accuracy: f64,
    pub wall_ms: f64,
    pub curve_path: PathBuf,
    /// Written for the approx method only: the recovered original-space
    /// hyperplane.
    pub hyperplane_path: Option<PathBuf>,
    pub trace_path: Option<PathBuf>,
}

impl fmt::Display for TrainSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "method={} converged={} epochs={} updates={} accuracy={:.4} wall_ms={:.1}",
            self.method,
            self.converged,
            self.epochs_run,
            self.total_updates,
            self.final_accuracy,
            self.wall_ms
        )
    }
}

/// Loads a dataset, trains one method on it, and writes the per-epoch curve.
///
/// The approx method trains on the fully transformed dataset and also writes
/// the recovered original-space hyperplane; the Perceptron trains on
/// dimension-extended raw samples (no inversion, no normalization).
/// Non-convergence is reported in the summary, not treated as an error.
pub fn cmd_train(
    dataset: &Path,
    method: Method,
    cfg: &TrainConfig,
    out: &Path,
) -> Result<TrainSummary, CliError> {
    let samples = read_dataset_csv(dataset).map_err(file_error(dataset))?;
    if samples.is_empty() {
        return Err(CliError::File {
            path: dataset.to_path_buf(),
            source: IoError::Parse { line: 0, message: "dataset has no samples".into() },
        });
    }

    let started = Instant::now();
    let (report, hyperplane) = run_method(&samples, method, cfg)
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let wall_ms = started.elapsed().as_secs_f64() * 1e3;

    write_curve_csv(out, &report).map_err(file_error(out))?;

    let hyperplane_file = match hyperplane {
        Some(h) => {
            let path = hyperplane_path(out);
            write_hyperplane_json(&path, &h).map_err(file_error(&path))?;
            Some(path)
        }
        None => None,
    };

    let trace_file = match (&report.update_trace, &report.update_dots) {
        (Some(snapshots), Some(dots)) => {
            let path = trace_path(out);
            write_trace_csv(&path, snapshots, dots).map_err(file_error(&path))?;
            Some(path)
        }
        _ => None,
    };

    Ok(TrainSummary {
        method,
        converged: report.converged,
        epochs_run: report.epochs_run,
        total_updates: report.total_updates,
        final_accuracy: report.per_epoch.last().map_or(0.0, |e| e.accuracy),
        wall_ms,
        curve_path: out.to_path_buf(),
        hyperplane_path: hyperplane_file,
        trace_path: trace_file,
    })
}

/// Per-(method, seed) outcome of a comparison experiment.
#[derive(Debug, Clone)]
pub struct RunSummary {
    pub method: Method,
    pub seed: u64,
    pub converged: bool,
    pub epochs_run: usize,
    pub total_updates: usize,
    pub wall_ms: f64,
}

/// Runs every requested method on a freshly generated dataset per seed and
/// writes one combined per-epoch CSV.
///
/// Within a seed all methods see the identical labelled dataset.
pub fn cmd_compare(spec: &ExperimentSpec) -> Result<Vec<RunSummary>, CliError> {
    spec.validate()?;
    let out = &spec.output_path;
    let mut file = BufWriter::new(
        fs::File::create(out).map_err(|e| file_error(out)(IoError::Io(e)))?,
    );
    let io_err = |e: std::io::Error| file_error(out)(IoError::Io(e));
    writeln!(
        file,
        "method,seed,epoch,epoch_updates,cumulative_updates,accuracy,wall_ms"
    )
    .map_err(io_err)?;

    let mut summaries = Vec::new();
    for &seed in &spec.seeds {
        let gen_cfg = GenConfig { min_margin: spec.min_margin, ..GenConfig::new(spec.n, spec.d, seed) };
        let (samples, _) = generate(&gen_cfg).map_err(|e| CliError::Usage(e.to_string()))?;
        for &method in &spec.methods {
            let mut cfg = spec.train.clone();
            cfg.max_epochs = spec.max_epochs;
            cfg.epsilon = spec.epsilon;
            let started = Instant::now();
            let (report, _) = run_method(&samples, method, &cfg)
                .map_err(|e| CliError::Usage(e.to_string()))?;
            let wall_ms = started.elapsed().as_secs_f64() * 1e3;

            let mut cumulative = 0usize;
            for epoch in &report.per_epoch {
                cumulative += epoch.updates;
                writeln!(
                    file,
                    "{},{},{},{},{},{},{}",
                    method, seed, epoch.epoch, epoch.updates, cumulative,
                    epoch.accuracy, epoch.wall_ms
                )
                .map_err(io_err)?;
            }
            summaries.push(RunSummary {
                method,
                seed,
                converged: report.converged,
                epochs_run: report.epochs_run,
                total_updates: report.total_updates,
                wall_ms,
            });
        }
    }
    file.flush().map_err(io_err)?;
    Ok(summaries)
}

/// Counts samples the hyperplane misclassifies; zero means verified.
///
/// Strict check: `sign(normal·x + bias)` must equal the label, and a score
/// of exactly zero counts as a failure.
pub fn cmd_verify(dataset: &Path, hyperplane: &Path) -> Result<usize, CliError> {
    let samples = read_dataset_csv(dataset).map_err(file_error(dataset))?;
    let plane = read_hyperplane_json(hyperplane).map_err(file_error(hyperplane))?;
    let mut violations = 0usize;
    for (index, s) in samples.iter().enumerate() {
        let score = plane.score(&s.features).map_err(|e| CliError::File {
            path: dataset.to_path_buf(),
            source: IoError::Parse {
                line: index + 2,
                message: format!("sample does not match hyperplane dimension: {e}"),
            },
        })?;
        if score * s.label.value() <= 0.0 {
            violations += 1;
        }
    }
    Ok(violations)
}

/// Dispatches one method over the shared labelled dataset, materializing
/// the representation it needs and dropping it afterwards.
fn run_method(
    samples: &[LabeledSample],
    method: Method,
    cfg: &TrainConfig,
) -> Result<(TrainReport, Option<crate::preprocess::Hyperplane>), Box<dyn std::error::Error>> {
    match method {
        Method::Approx => {
            let transformed = preprocess_dataset(samples)?;
            let report = approx_train(&transformed, cfg)?;
            let hyperplane = recover_hyperplane(report.final_w.vector())?;
            Ok((report, Some(hyperplane)))
        }
        Method::Perceptron => {
            let extended: Vec<_> = samples.iter().map(extend_dimension).collect();
            let report = perceptron_train(&extended, cfg)?;
            Ok((report, None))
        }
    }
}

fn write_curve_csv(path: &Path, report: &TrainReport) -> Result<(), IoError> {
    let mut file = BufWriter::new(fs::File::create(path)?);
    writeln!(file, "epoch,epoch_updates,cumulative_updates,accuracy,wall_ms")?;
    let mut cumulative = 0usize;
    for epoch in &report.per_epoch {
        cumulative += epoch.updates;
        writeln!(
            file,
            "{},{},{},{},{}",
            epoch.epoch, epoch.updates, cumulative, epoch.accuracy, epoch.wall_ms
        )?;
    }
    file.flush()?;
    Ok(())
}

fn write_trace_csv(
    path: &Path,
    snapshots: &[crate::vector::DenseVector],
    dots: &[f64],
) -> Result<(), IoError> {
    let mut file = BufWriter::new(fs::File::create(path)?);
    writeln!(file, "update,triggering_dot,weight_norm")?;
    writeln!(file, "0,,{}", crate::vector::norm(&snapshots[0]))?;
    for (i, (w, p)) in snapshots[1..].iter().zip(dots).enumerate() {
        writeln!(file, "{},{},{}", i + 1, p, crate::vector::norm(w))?;
    }
    file.flush()?;
    Ok(())
}
