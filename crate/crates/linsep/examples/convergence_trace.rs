//! Records every update of a training run and validates the three
//! quantities that drive convergence against the hidden generating plane:
//! the projection onto it grows, the angle to it shrinks, and (under the
//! pure rule) the weight norm decays.
//!
//! ```bash
//! cargo run --example convergence_trace
//! ```

use linsep::preprocess::transform_reference;
use linsep::{
    approx_train, build_trace, check_trace, generate, preprocess_dataset, GenConfig, TrainConfig,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let (samples, reference) = generate(&GenConfig::new(500, 5, 31))?;
    let transformed = preprocess_dataset(&samples)?;

    let cfg = TrainConfig { record_trace: true, ..TrainConfig::default() };
    let report = approx_train(&transformed, &cfg)?;
    println!(
        "run: converged={} after {} epochs, {} updates recorded",
        report.converged, report.epochs_run, report.total_updates
    );

    let direction = transform_reference(&reference.hyperplane())?;
    let trace = build_trace(&report, &direction)?;

    println!("trace against the hidden generating plane:");
    println!("{:>8} {:>12} {:>12} {:>12}", "update", "angle(rad)", "norm", "projection");
    let total = trace.angles.len();
    for i in (0..total).step_by((total / 10).max(1)).chain([total - 1]) {
        println!(
            "{:>8} {:>12.6} {:>12.6} {:>12.6}",
            i, trace.angles[i], trace.norms[i], trace.projections[i]
        );
    }

    let violations = check_trace(&trace, cfg.epsilon);
    if violations.is_empty() {
        println!("every update moved the weights closer to the hidden plane");
    } else {
        for v in &violations {
            println!("violation: {v}");
        }
    }
    Ok(())
}
