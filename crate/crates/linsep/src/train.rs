//! Mistake-driven online trainers and their shared epoch loop.
//!
//! Two update rules are implemented:
//!
//! * [`approx_update`] rotates the weight vector by exactly the amount that
//!   places the mistaken (unit-length) point at signed distance `epsilon` on
//!   the positive side: `w' = w + (epsilon - w·x)·x`, so `w'·x = epsilon`.
//!   With `epsilon = 0` the point lands exactly on the new hyperplane.
//! * [`perceptron_update`] is the classic fixed-size correction
//!   `w' = w + y·x`.
//!
//! Both trainers scan the dataset in order, update immediately on each
//! mistaken sample (`dot <= 0` counts as a mistake, so an exactly-on-plane
//! point still triggers), and stop early once an epoch completes without a
//! single update. That clean epoch doubles as a certificate: every sample
//! then lies strictly on the positive side.

use std::fmt;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::preprocess::{Label, TransformedSample};
use crate::vector::{axpy, dot_slices, random_unit_vector, DenseVector};

/// How the starting weight vector is chosen.
///
/// Only the approximation trainer consults this; the Perceptron always
/// starts from the zero vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InitMode {
    /// Start from the first sample of the dataset.
    FirstSample,
    /// Start from a seeded uniformly random unit vector.
    RandomUnit { seed: u64 },
}

/// Knobs shared by both trainers.
#[derive(Debug, Clone, PartialEq)]
pub struct TrainConfig {
    /// Hard cap on full passes over the data.
    pub max_epochs: usize,
    /// Signed distance at which a corrected point is placed; `0` selects the
    /// pure on-plane rule. Ignored by the Perceptron.
    pub epsilon: f64,
    pub init: InitMode,
    /// Record a weight snapshot and the triggering dot for every update.
    pub record_trace: bool,
    /// When set, visit samples in a fresh seeded random order each epoch
    /// instead of dataset order.
    pub shuffle_seed: Option<u64>,
}

impl Default for TrainConfig {
    fn default() -> Self {
        Self {
            max_epochs: 1000,
            epsilon: 1e-7,
            init: InitMode::FirstSample,
            record_trace: false,
            shuffle_seed: None,
        }
    }
}

/// Weight vector in the transformed (`d+1`-dimensional) search space.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightVector {
    vector: DenseVector,
}

impl WeightVector {
    pub fn new(vector: DenseVector) -> Self {
        Self { vector }
    }

    pub fn vector(&self) -> &DenseVector {
        &self.vector
    }

    pub fn dim(&self) -> usize {
        self.vector.dim()
    }

    pub fn into_vector(self) -> DenseVector {
        self.vector
    }
}

impl From<DenseVector> for WeightVector {
    fn from(vector: DenseVector) -> Self {
        Self { vector }
    }
}

/// Accuracy and update count for one completed epoch.
///
/// `wall_ms` is measured wall-clock time and is the only field that varies
/// between reruns of an identical configuration.
#[derive(Debug, Clone)]
pub struct EpochStats {
    /// 1-based epoch number.
    pub epoch: usize,
    /// Fraction of correctly classified samples, measured after the epoch's
    /// updates over the full training set.
    pub accuracy: f64,
    /// Updates applied during this epoch.
    pub updates: usize,
    pub wall_ms: f64,
}

/// Outcome of a training run.
#[derive(Debug, Clone)]
pub struct TrainReport {
    pub final_w: WeightVector,
    /// True when some epoch finished with zero updates.
    pub converged: bool,
    /// Number of epochs executed, including the final clean one.
    pub epochs_run: usize,
    pub total_updates: usize,
    pub per_epoch: Vec<EpochStats>,
    /// Weight snapshots: the initial vector plus one entry per update.
    /// Present iff `record_trace` was set.
    pub update_trace: Option<Vec<DenseVector>>,
    /// The mistaken dot product that triggered each update. Present iff
    /// `record_trace` was set; one entry per update.
    pub update_dots: Option<Vec<f64>>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum TrainError {
    EmptyDataset,
    DimensionMismatch { expected: usize, got: usize, index: usize },
    InvalidConfig(String),
}

impl fmt::Display for TrainError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TrainError::EmptyDataset => write!(f, "training data must be nonempty"),
            TrainError::DimensionMismatch { expected, got, index } => {
                write!(f, "sample {index} has dimension {got}, expected {expected}")
            }
            TrainError::InvalidConfig(msg) => write!(f, "invalid config: {msg}"),
        }
    }
}

impl std::error::Error for TrainError {}

/// One exact correction: returns `w + (epsilon - w·x)·x`.
///
/// For unit-length `x` the new weights satisfy `w'·x = epsilon` up to
/// rounding, and `||w'||^2 = ||w||^2 + epsilon^2 - (w·x)^2`. A mistaken
/// point exactly antiparallel to `w` yields the zero vector when
/// `epsilon = 0`; training treats that as a normal (if useless) state, and
/// any positive `epsilon` avoids it entirely.
pub fn approx_update(
    w: &WeightVector,
    x: &TransformedSample,
    epsilon: f64,
) -> Result<WeightVector, TrainError> {
    if w.dim() != x.dim() {
        return Err(TrainError::DimensionMismatch { expected: w.dim(), got: x.dim(), index: 0 });
    }
    let p = dot_slices(w.vector().values(), x.point().values());
    let mut values = w.vector().values().to_vec();
    axpy(epsilon - p, x.point().values(), &mut values);
    Ok(WeightVector::new(DenseVector::from_raw(values)))
}

/// Classic fixed-size correction: returns `w + y·x`.
pub fn perceptron_update(
    w: &WeightVector,
    x: &DenseVector,
    label: Label,
) -> Result<WeightVector, TrainError> {
    if w.dim() != x.dim() {
        return Err(TrainError::DimensionMismatch { expected: w.dim(), got: x.dim(), index: 0 });
    }
    let mut values = w.vector().values().to_vec();
    axpy(label.value(), x.values(), &mut values);
    Ok(WeightVector::new(DenseVector::from_raw(values)))
}

/// Fraction of samples whose score sign matches the expected label.
///
/// A dot product of exactly zero counts as incorrect for either label, so
/// the zero weight vector scores 0.0 on any dataset.
pub fn evaluate_accuracy(
    w: &WeightVector,
    data: &[(DenseVector, Label)],
) -> Result<f64, TrainError> {
    if data.is_empty() {
        return Err(TrainError::EmptyDataset);
    }
    check_dims(w.dim(), data.iter().map(|(x, _)| x.dim()))?;
    let correct = data
        .iter()
        .filter(|(x, label)| {
            let d = dot_slices(w.vector().values(), x.values());
            d * label.value() > 0.0
        })
        .count();
    Ok(correct as f64 / data.len() as f64)
}

/// Accuracy over transformed samples, where every expected sign is positive.
pub fn evaluate_transformed(
    w: &WeightVector,
    data: &[TransformedSample],
) -> Result<f64, TrainError> {
    if data.is_empty() {
        return Err(TrainError::EmptyDataset);
    }
    check_dims(w.dim(), data.iter().map(|x| x.dim()))?;
    let correct = data
        .iter()
        .filter(|x| dot_slices(w.vector().values(), x.point().values()) > 0.0)
        .count();
    Ok(correct as f64 / data.len() as f64)
}

/// Trains the exact-correction method on a preprocessed dataset.
///
/// Follows the epoch loop described in the module docs. On convergence the
/// returned weights satisfy `w·x > 0` for every sample, certified by the
/// final update-free epoch.
pub fn approx_train(
    data: &[TransformedSample],
    cfg: &TrainConfig,
) -> Result<TrainReport, TrainError> {
    if data.is_empty() {
        return Err(TrainError::EmptyDataset);
    }
    validate_config(cfg)?;
    let dim = data[0].dim();
    check_dims(dim, data.iter().map(|x| x.dim()))?;

    let mut w: Vec<f64> = match cfg.init {
        InitMode::FirstSample => data[0].point().values().to_vec(),
        InitMode::RandomUnit { seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            random_unit_vector(&mut rng, dim).into_values()
        }
    };

    let mut trace = TraceRecorder::new(cfg.record_trace, &w);
    let mut loop_state = EpochLoop::new(data.len(), cfg);
    let mut report_epochs = Vec::new();
    let mut converged = false;
    let mut total_updates = 0usize;
    let mut epochs_run = 0usize;

    for epoch in 1..=cfg.max_epochs {
        let started = Instant::now();
        let mut updates = 0usize;
        for &i in loop_state.order() {
            let x = data[i].point().values();
            let p = dot_slices(&w, x);
            if p <= 0.0 {
                axpy(cfg.epsilon - p, x, &mut w);
                updates += 1;
                trace.record(p, &w);
            }
        }
        epochs_run = epoch;
        total_updates += updates;
        let accuracy = transformed_accuracy(&w, data);
        report_epochs.push(EpochStats {
            epoch,
            accuracy,
            updates,
            wall_ms: started.elapsed().as_secs_f64() * 1e3,
        });
        if updates == 0 {
            converged = true;
            break;
        }
    }

    let (update_trace, update_dots) = trace.finish();
    Ok(TrainReport {
        final_w: WeightVector::new(DenseVector::from_raw(w)),
        converged,
        epochs_run,
        total_updates,
        per_epoch: report_epochs,
        update_trace,
        update_dots,
    })
}

/// Trains the classic Perceptron on labelled (extended, unnormalized) data.
///
/// The weight vector starts at zero regardless of `cfg.init`; the zero
/// vector scores every sample at exactly zero, so the first sample always
/// triggers an update. `cfg.epsilon` is ignored. Epoch loop, early stop,
/// and reporting match [`approx_train`].
pub fn perceptron_train(
    data: &[(DenseVector, Label)],
    cfg: &TrainConfig,
) -> Result<TrainReport, TrainError> {
    if data.is_empty() {
        return Err(TrainError::EmptyDataset);
    }
    validate_config(cfg)?;
    let dim = data[0].0.dim();
    check_dims(dim, data.iter().map(|(x, _)| x.dim()))?;

    let mut w = vec![0.0f64; dim];
    let mut trace = TraceRecorder::new(cfg.record_trace, &w);
    let mut loop_state = EpochLoop::new(data.len(), cfg);
    let mut report_epochs = Vec::new();
    let mut converged = false;
    let mut total_updates = 0usize;
    let mut epochs_run = 0usize;

    for epoch in 1..=cfg.max_epochs {
        let started = Instant::now();
        let mut updates = 0usize;
        for &i in loop_state.order() {
            let (x, label) = &data[i];
            let signed = label.value() * dot_slices(&w, x.values());
            if signed <= 0.0 {
                axpy(label.value(), x.values(), &mut w);
                updates += 1;
                trace.record(signed, &w);
            }
        }
        epochs_run = epoch;
        total_updates += updates;
        let accuracy = labelled_accuracy(&w, data);
        report_epochs.push(EpochStats {
            epoch,
            accuracy,
            updates,
            wall_ms: started.elapsed().as_secs_f64() * 1e3,
        });
        if updates == 0 {
            converged = true;
            break;
        }
    }

    let (update_trace, update_dots) = trace.finish();
    Ok(TrainReport {
        final_w: WeightVector::new(DenseVector::from_raw(w)),
        converged,
        epochs_run,
        total_updates,
        per_epoch: report_epochs,
        update_trace,
        update_dots,
    })
}

/// Per-epoch visit order, reshuffled from a dedicated seeded stream when
/// shuffling is enabled.
struct EpochLoop {
    order: Vec<usize>,
    rng: Option<ChaCha8Rng>,
}

impl EpochLoop {
    fn new(len: usize, cfg: &TrainConfig) -> Self {
        Self {
            order: (0..len).collect(),
            rng: cfg.shuffle_seed.map(ChaCha8Rng::seed_from_u64),
        }
    }

    fn order(&mut self) -> &[usize] {
        if let Some(rng) = self.rng.as_mut() {
            self.order.shuffle(rng);
        }
        &self.order
    }
}

struct TraceRecorder {
    snapshots: Option<Vec<DenseVector>>,
    dots: Option<Vec<f64>>,
}

impl TraceRecorder {
    fn new(enabled: bool, initial: &[f64]) -> Self {
        if enabled {
            Self {
                snapshots: Some(vec![DenseVector::from_raw(initial.to_vec())]),
                dots: Some(Vec::new()),
            }
        } else {
            Self { snapshots: None, dots: None }
        }
    }

    fn record(&mut self, triggering_dot: f64, w: &[f64]) {
        if let (Some(snapshots), Some(dots)) = (self.snapshots.as_mut(), self.dots.as_mut()) {
            snapshots.push(DenseVector::from_raw(w.to_vec()));
            dots.push(triggering_dot);
        }
    }

    fn finish(self) -> (Option<Vec<DenseVector>>, Option<Vec<f64>>) {
        (self.snapshots, self.dots)
    }
}

fn transformed_accuracy(w: &[f64], data: &[TransformedSample]) -> f64 {
    let correct = data
        .iter()
        .filter(|x| dot_slices(w, x.point().values()) > 0.0)
        .count();
    correct as f64 / data.len() as f64
}

fn labelled_accuracy(w: &[f64], data: &[(DenseVector, Label)]) -> f64 {
    let correct = data
        .iter()
        .filter(|(x, label)| label.value() * dot_slices(w, x.values()) > 0.0)
        .count();
    correct as f64 / data.len() as f64
}

fn validate_config(cfg: &TrainConfig) -> Result<(), TrainError> {
    if cfg.max_epochs == 0 {
        return Err(TrainError::InvalidConfig("max_epochs must be at least 1".into()));
    }
    if !(cfg.epsilon >= 0.0 && cfg.epsilon.is_finite()) {
        return Err(TrainError::InvalidConfig("epsilon must be finite and nonnegative".into()));
    }
    Ok(())
}

fn check_dims(expected: usize, dims: impl Iterator<Item = usize>) -> Result<(), TrainError> {
    for (index, got) in dims.enumerate() {
        if got != expected {
            return Err(TrainError::DimensionMismatch { expected, got, index });
        }
    }
    Ok(())
}
