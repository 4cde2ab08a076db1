//! The XOR pattern is the textbook non-separable dataset. This example
//! walks it through the three preprocessing steps and shows two independent
//! pieces of evidence that no separating hyperplane exists: the trainer
//! exhausts its epoch budget, and ten thousand random directions all fail.
//!
//! ```bash
//! cargo run --example xor
//! ```

use linsep::{
    approx_train, preprocess_dataset, random_direction_search, DenseVector, Label,
    LabeledSample, TrainConfig,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let samples = vec![
        LabeledSample::new(DenseVector::from_slice(&[0.0, 1.0])?, Label::Positive),
        LabeledSample::new(DenseVector::from_slice(&[1.0, 0.0])?, Label::Positive),
        LabeledSample::new(DenseVector::from_slice(&[0.0, 0.0])?, Label::Negative),
        LabeledSample::new(DenseVector::from_slice(&[1.0, 1.0])?, Label::Negative),
    ];

    println!("original samples:");
    for s in &samples {
        println!("  ({}, {}) labelled {}", s.features[0], s.features[1], s.label);
    }

    // Extension, sign folding, and normalization leave one point per sample
    // on the unit sphere; a separator must see all of them at positive dot.
    let transformed = preprocess_dataset(&samples)?;
    println!("transformed points (extended, folded, unit length):");
    for t in &transformed {
        let p = t.point();
        println!("  ({:+.4}, {:+.4}, {:+.4})", p[0], p[1], p[2]);
    }

    let report = approx_train(&transformed, &TrainConfig::default())?;
    println!(
        "trainer: converged={} after {} epochs, final accuracy {:.2}",
        report.converged,
        report.epochs_run,
        report.per_epoch.last().map_or(0.0, |e| e.accuracy)
    );

    match random_direction_search(&transformed, 10_000, 7) {
        Some(_) => println!("random search: found a separator (unexpected!)"),
        None => println!("random search: no separator among 10000 unit directions"),
    }

    println!("conclusion: the four points surround the origin; XOR is not linearly separable");
    Ok(())
}
