//! Online linear separation via exact corrections.
//!
//! `linsep` finds a hyperplane separating positively and negatively
//! labelled points. Instead of the Perceptron's fixed-size correction, its
//! trainer rotates the weight vector by exactly the amount that places each
//! mistaken point back on (or just past) the decision boundary, which can
//! converge in far fewer epochs when the dataset is much larger than its
//! dimensionality.
//!
//! The pipeline has three stages:
//!
//! 1. [`preprocess_dataset`] folds labels and bias away: it appends a
//!    constant feature, negates negative samples, and normalizes, leaving a
//!    one-class problem (`w·x > 0` for all points) on the unit sphere.
//! 2. [`approx_train`] runs the mistake-driven epoch loop with the
//!    exact-correction rule; [`perceptron_train`] is the classic baseline.
//! 3. [`recover_hyperplane`] maps a transformed-space solution back to an
//!    original-space normal and bias.
//!
//! [`datagen`] draws seeded, separable, biased datasets with a known
//! generating hyperplane, and [`oracle`] verifies solutions and the
//! per-update monotonicity properties that make the trainer converge.
//!
//! # Quick start
//!
//! ```
//! use linsep::{
//!     approx_train, preprocess_dataset, recover_hyperplane, DenseVector, Label,
//!     LabeledSample, TrainConfig,
//! };
//!
//! # fn main() -> Result<(), Box<dyn std::error::Error>> {
//! let data = vec![
//!     LabeledSample::new(DenseVector::from_slice(&[1.0, 2.0])?, Label::Positive),
//!     LabeledSample::new(DenseVector::from_slice(&[-1.0, 0.5])?, Label::Negative),
//! ];
//! let transformed = preprocess_dataset(&data)?;
//! let report = approx_train(&transformed, &TrainConfig::default())?;
//! assert!(report.converged);
//!
//! let plane = recover_hyperplane(report.final_w.vector())?;
//! for sample in &data {
//!     assert!(plane.score(&sample.features)? * sample.label.value() > 0.0);
//! }
//! # Ok(())
//! # }
//! ```
//!
//! The `linsep` binary exposes the same machinery as `gen`, `train`,
//! `compare`, and `verify` subcommands; the crate's `examples/` directory
//! walks through each major capability.

pub mod cli;
pub mod datagen;
pub mod io;
pub mod oracle;
pub mod preprocess;
pub mod train;
pub mod vector;

pub use datagen::{generate, GenConfig, GeneratorReference};
pub use oracle::{
    build_trace, check_trace, random_direction_search, separable_exact_2d, verify_separator,
    ConvergenceTrace, Violation,
};
pub use preprocess::{
    extend_dimension, invert_negative, preprocess_dataset, recover_hyperplane,
    transform_reference, Hyperplane, Label, LabeledSample, TransformedSample,
};
pub use train::{
    approx_train, approx_update, evaluate_accuracy, evaluate_transformed, perceptron_train,
    perceptron_update, EpochStats, InitMode, TrainConfig, TrainReport, WeightVector,
};
pub use vector::{angle_between, dot, norm, normalize, DenseVector};
