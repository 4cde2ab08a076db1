//! Head-to-head race on one generated dataset: the exact-correction trainer
//! against the classic Perceptron, both consuming the same samples. Prints
//! the tail of each accuracy curve and the epoch counts.
//!
//! The dataset here has far more samples than dimensions, the regime where
//! exact corrections tend to finish in fewer epochs. Swap `n` and `d` to
//! watch the balance flip.
//!
//! ```bash
//! cargo run --example compare_methods
//! ```

use linsep::{
    approx_train, extend_dimension, generate, perceptron_train, preprocess_dataset, GenConfig,
    TrainConfig, TrainReport,
};

fn curve_tail(report: &TrainReport, label: &str) {
    println!("{label} accuracy curve (last 5 epochs):");
    let start = report.per_epoch.len().saturating_sub(5);
    for epoch in &report.per_epoch[start..] {
        println!(
            "  epoch {:>4}: accuracy {:.4}, {} update(s)",
            epoch.epoch, epoch.accuracy, epoch.updates
        );
    }
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cfg = GenConfig::new(20_000, 20, 5);
    let (samples, _) = generate(&cfg)?;
    println!("dataset: {} samples, {} features, seed {}", cfg.n, cfg.d, cfg.seed);

    let train_cfg = TrainConfig::default();

    let transformed = preprocess_dataset(&samples)?;
    let approx = approx_train(&transformed, &train_cfg)?;
    curve_tail(&approx, "exact correction");

    let extended: Vec<_> = samples.iter().map(extend_dimension).collect();
    let perceptron = perceptron_train(&extended, &train_cfg)?;
    curve_tail(&perceptron, "perceptron");

    println!();
    println!(
        "exact correction: converged={} in {} epochs ({} updates)",
        approx.converged, approx.epochs_run, approx.total_updates
    );
    println!(
        "perceptron:       converged={} in {} epochs ({} updates)",
        perceptron.converged, perceptron.epochs_run, perceptron.total_updates
    );
    Ok(())
}
