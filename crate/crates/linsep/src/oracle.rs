//! Independent verification tooling: separator certificates, an exact
//! two-dimensional separability decision, and per-update validation of the
//! quantities that make the exact-correction trainer converge.
//!
//! None of these routines share state with the trainers; they recompute
//! everything from recorded snapshots, which is what makes them usable as
//! oracles in tests.

use std::fmt;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::train::{TrainReport, WeightVector};
use crate::preprocess::TransformedSample;
use crate::vector::{angle_between, dot, dot_slices, norm, random_unit_vector, DenseVector};

/// Slack applied to the strict monotonicity checks. Updates triggered by
/// dots in `(-1e-12, 0]` make progress below double-precision resolution,
/// so strictness is only demanded when the triggering dot was clearly
/// negative.
pub const MONOTONICITY_SLACK: f64 = 1e-12;

/// Strictness gate for the norm relation, relative to the current norm.
///
/// The pure rule shrinks the squared norm by the squared triggering dot, so
/// the norm itself moves by about `dot^2 / (2 norm)`. That change only
/// becomes representable in doubles once `|dot|` exceeds roughly
/// `2e-8 * norm`; below this gate the check falls back to the slack band.
pub const NORM_STRICTNESS_GATE: f64 = 1e-7;

/// Per-update record of the quantities the convergence argument tracks:
/// the angle to a known separating direction, the weight norm, and the
/// projection onto that direction.
///
/// All of `angles`, `norms`, and `projections` have one entry per weight
/// snapshot (updates + 1); `update_dots` has one entry per update.
#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceTrace {
    /// Unit direction known to separate the data.
    pub reference: DenseVector,
    /// Angle between each snapshot and the reference, in `[0, pi]`.
    pub angles: Vec<f64>,
    /// Euclidean norm of each snapshot.
    pub norms: Vec<f64>,
    /// Dot product of each snapshot with the reference.
    pub projections: Vec<f64>,
    /// The mistaken dot that triggered each update.
    pub update_dots: Vec<f64>,
}

/// A monotonicity relation that failed at one update.
#[derive(Debug, Clone, PartialEq)]
pub struct Violation {
    /// Index of the offending update (0-based).
    pub update: usize,
    pub relation: Relation,
    pub previous: f64,
    pub current: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    /// Projection onto the reference must increase.
    ProjectionIncrease,
    /// Angle to the reference must not increase.
    AngleDecrease,
    /// Weight norm must decrease (pure rule only).
    NormDecrease,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let relation = match self.relation {
            Relation::ProjectionIncrease => "projection failed to increase",
            Relation::AngleDecrease => "angle failed to decrease",
            Relation::NormDecrease => "norm failed to decrease",
        };
        write!(
            f,
            "update {}: {} ({} -> {})",
            self.update, relation, self.previous, self.current
        )
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum OracleError {
    /// The report was produced without `record_trace`.
    MissingTrace,
    /// The reference direction must be unit length.
    ReferenceNotUnit { norm: f64 },
    DimensionMismatch { expected: usize, got: usize },
    /// The exact 2-d decision only accepts 2-component points.
    NotTwoDimensional { dim: usize },
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleError::MissingTrace => {
                write!(f, "report has no update trace; train with record_trace")
            }
            OracleError::ReferenceNotUnit { norm } => {
                write!(f, "reference must be unit length, norm is {norm}")
            }
            OracleError::DimensionMismatch { expected, got } => {
                write!(f, "dimension mismatch: expected {expected}, got {got}")
            }
            OracleError::NotTwoDimensional { dim } => {
                write!(f, "exact separability decision needs 2 components, got {dim}")
            }
        }
    }
}

impl std::error::Error for OracleError {}

/// True iff `w` places every transformed sample strictly on its positive
/// side. Panics if the dimensions disagree.
pub fn verify_separator(w: &WeightVector, data: &[TransformedSample]) -> bool {
    data.iter().all(|x| {
        assert_eq!(w.dim(), x.dim(), "separator and samples must share a dimension");
        dot_slices(w.vector().values(), x.point().values()) > 0.0
    })
}

/// Exact separability decision for unit points in the plane.
///
/// Sorting the points by polar angle reduces the question to gap
/// inspection: an open half-plane through the origin contains all points
/// iff the largest angular gap between consecutive points exceeds pi. The
/// returned witness bisects the occupied arc, so its worst-case angular
/// distance to any point is strictly below pi/2.
pub fn separable_exact_2d(
    points: &[DenseVector],
) -> Result<(bool, Option<DenseVector>), OracleError> {
    for p in points {
        if p.dim() != 2 {
            return Err(OracleError::NotTwoDimensional { dim: p.dim() });
        }
    }
    if points.is_empty() {
        return Ok((true, Some(DenseVector::from_raw(vec![1.0, 0.0]))));
    }

    let mut angles: Vec<f64> = points.iter().map(|p| p[1].atan2(p[0])).collect();
    angles.sort_by(|a, b| a.partial_cmp(b).expect("finite angles"));

    // Largest circular gap between consecutive directions.
    let mut best_gap = angles[0] + std::f64::consts::TAU - angles[angles.len() - 1];
    let mut arc_start = angles[angles.len() - 1]; // occupied arc begins after the gap
    for pair in angles.windows(2) {
        let gap = pair[1] - pair[0];
        if gap > best_gap {
            best_gap = gap;
            arc_start = pair[0];
        }
    }

    if best_gap > std::f64::consts::PI {
        let arc_len = std::f64::consts::TAU - best_gap;
        let mid = arc_start + best_gap + arc_len / 2.0;
        let witness = DenseVector::from_raw(vec![mid.cos(), mid.sin()]);
        Ok((true, Some(witness)))
    } else {
        Ok((false, None))
    }
}

/// Samples `directions` unit vectors and returns the first that separates
/// the data, if any. A `None` over a large budget is statistical evidence
/// (not proof) that no separator exists.
pub fn random_direction_search(
    data: &[TransformedSample],
    directions: usize,
    seed: u64,
) -> Option<WeightVector> {
    let dim = data.first()?.dim();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..directions {
        let candidate = WeightVector::new(random_unit_vector(&mut rng, dim));
        if verify_separator(&candidate, data) {
            return Some(candidate);
        }
    }
    None
}

/// Computes angle, norm, and projection for every recorded snapshot of a
/// traced run against a known unit separating direction.
pub fn build_trace(
    report: &TrainReport,
    reference: &DenseVector,
) -> Result<ConvergenceTrace, OracleError> {
    let snapshots = report.update_trace.as_ref().ok_or(OracleError::MissingTrace)?;
    let update_dots = report.update_dots.clone().ok_or(OracleError::MissingTrace)?;
    let ref_norm = norm(reference);
    if (ref_norm - 1.0).abs() > 1e-9 {
        return Err(OracleError::ReferenceNotUnit { norm: ref_norm });
    }
    if let Some(first) = snapshots.first() {
        if first.dim() != reference.dim() {
            return Err(OracleError::DimensionMismatch {
                expected: reference.dim(),
                got: first.dim(),
            });
        }
    }

    let mut angles = Vec::with_capacity(snapshots.len());
    let mut norms = Vec::with_capacity(snapshots.len());
    let mut projections = Vec::with_capacity(snapshots.len());
    for w in snapshots {
        norms.push(norm(w));
        projections.push(dot(w, reference).expect("dimensions checked above"));
        // A zero snapshot has no direction; report the worst angle rather
        // than failing, so degenerate pure-rule runs stay traceable.
        angles.push(if w.is_zero() {
            std::f64::consts::PI
        } else {
            angle_between(w, reference).expect("nonzero checked")
        });
    }

    Ok(ConvergenceTrace {
        reference: reference.clone(),
        angles,
        norms,
        projections,
        update_dots,
    })
}

/// Checks the per-update monotonicity relations along a trace.
///
/// For every update: the projection onto the reference must increase, the
/// angle to the reference must not increase, and with `epsilon_mode == 0`
/// the weight norm must strictly decrease. Strict comparison is demanded
/// when the triggering dot was below `-`[`MONOTONICITY_SLACK`]; updates
/// triggered closer to the boundary get the slack instead, since their
/// progress can round to nothing. The norm relation uses the wider
/// [`NORM_STRICTNESS_GATE`] because its progress is quadratic in the
/// triggering dot.
pub fn check_trace(trace: &ConvergenceTrace, epsilon_mode: f64) -> Vec<Violation> {
    let updates = trace.update_dots.len();
    assert_eq!(trace.angles.len(), updates + 1, "trace is malformed");
    assert_eq!(trace.norms.len(), updates + 1, "trace is malformed");
    assert_eq!(trace.projections.len(), updates + 1, "trace is malformed");

    let mut violations = Vec::new();
    for (t, &triggering_dot) in trace.update_dots.iter().enumerate() {
        let strict = triggering_dot < -MONOTONICITY_SLACK;

        let (proj_prev, proj_next) = (trace.projections[t], trace.projections[t + 1]);
        let proj_ok = if strict {
            proj_next > proj_prev
        } else {
            proj_next > proj_prev - MONOTONICITY_SLACK
        };
        if !proj_ok {
            violations.push(Violation {
                update: t,
                relation: Relation::ProjectionIncrease,
                previous: proj_prev,
                current: proj_next,
            });
        }

        let (angle_prev, angle_next) = (trace.angles[t], trace.angles[t + 1]);
        let angle_ok = if strict {
            angle_next < angle_prev
        } else {
            angle_next < angle_prev + MONOTONICITY_SLACK
        };
        if !angle_ok {
            violations.push(Violation {
                update: t,
                relation: Relation::AngleDecrease,
                previous: angle_prev,
                current: angle_next,
            });
        }

        if epsilon_mode == 0.0 {
            let (norm_prev, norm_next) = (trace.norms[t], trace.norms[t + 1]);
            let norm_strict = triggering_dot < -NORM_STRICTNESS_GATE * norm_prev;
            let norm_ok = if norm_strict {
                norm_next < norm_prev
            } else {
                norm_next < norm_prev + MONOTONICITY_SLACK
            };
            if !norm_ok {
                violations.push(Violation {
                    update: t,
                    relation: Relation::NormDecrease,
                    previous: norm_prev,
                    current: norm_next,
                });
            }
        }
    }
    violations
}
