//! The classic two-point stress test: a negative sample at 100 and a
//! positive one at 101 on a single axis. The gap between them is tiny
//! relative to their magnitude, which forces the fixed-size Perceptron
//! correction to grind through tens of thousands of epochs. The
//! exact-correction trainer rotates straight to a solution in one update.
//!
//! ```bash
//! cargo run --example two_point
//! ```

use linsep::{
    approx_train, extend_dimension, perceptron_train, preprocess_dataset, recover_hyperplane,
    DenseVector, Label, LabeledSample, TrainConfig,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let samples = vec![
        LabeledSample::new(DenseVector::from_slice(&[100.0])?, Label::Negative),
        LabeledSample::new(DenseVector::from_slice(&[101.0])?, Label::Positive),
    ];

    // The transformed pair is nearly antiparallel on the unit circle, so the
    // placement offset must stay below the ~1e-8 margin that survives the
    // single correction; the default 1e-7 would overshoot and oscillate.
    let transformed = preprocess_dataset(&samples)?;
    let cfg = TrainConfig { epsilon: 1e-9, ..TrainConfig::default() };
    let report = approx_train(&transformed, &cfg)?;
    println!(
        "exact correction: converged={} after {} update(s) in {} epoch(s)",
        report.converged, report.total_updates, report.epochs_run
    );

    let plane = recover_hyperplane(report.final_w.vector())?;
    println!(
        "recovered boundary: {:+.3e} * x {:+.3e} = 0, crossing at x = {:.2}",
        plane.normal[0],
        plane.bias,
        -plane.bias / plane.normal[0]
    );
    for s in &samples {
        println!(
            "  sample {:>5}: score {:+.3e} -> {}",
            s.features[0],
            plane.score(&s.features)?,
            if plane.score(&s.features)? > 0.0 { "positive side" } else { "negative side" }
        );
    }

    let extended: Vec<_> = samples.iter().map(extend_dimension).collect();
    let perc_cfg = TrainConfig { max_epochs: 100_000, ..TrainConfig::default() };
    let perceptron = perceptron_train(&extended, &perc_cfg)?;
    println!(
        "perceptron baseline: converged={} after {} updates in {} epochs",
        perceptron.converged, perceptron.total_updates, perceptron.epochs_run
    );
    Ok(())
}
