//! Dataset transformation that reduces labelled binary separation to a
//! one-class condition, plus the inverse mapping back to the original space.
//!
//! Three steps, applied per sample:
//!
//! 1. **Dimension extension** — append a constant feature `1.0`, so the bias
//!    becomes an ordinary weight and only hyperplanes through the origin
//!    need to be searched.
//! 2. **Negative inversion** — negate every component of negative samples,
//!    so labels no longer matter: a solution is any `w` with `w·x > 0` for
//!    every transformed point.
//! 3. **Normalization** — scale each point to unit length, projecting the
//!    set onto the unit sphere. Separability is unaffected (division by a
//!    positive constant), and unit-length points simplify the trainer's
//!    update arithmetic.
//!
//! A solution `w` found in the transformed `d+1`-dimensional space maps back
//! to an original-space hyperplane via [`recover_hyperplane`]: the first `d`
//! components are the normal, the last is the bias. [`transform_reference`]
//! is the inverse embedding, used to express a known original-space
//! hyperplane as a unit direction in the transformed space.

use std::fmt;

use crate::vector::{normalize, norm, DenseVector, GeometryError};

/// Binary class tag, valued +1 or -1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Label {
    Positive,
    Negative,
}

impl Label {
    /// +1.0 for positive, -1.0 for negative.
    pub fn value(self) -> f64 {
        match self {
            Label::Positive => 1.0,
            Label::Negative => -1.0,
        }
    }

    /// Accepts exactly +1 and -1.
    pub fn from_int(value: i64) -> Option<Self> {
        match value {
            1 => Some(Label::Positive),
            -1 => Some(Label::Negative),
            _ => None,
        }
    }

    /// Label matching the sign of a strictly nonzero score.
    pub fn from_sign(score: f64) -> Option<Self> {
        if score > 0.0 {
            Some(Label::Positive)
        } else if score < 0.0 {
            Some(Label::Negative)
        } else {
            None
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Positive => write!(f, "1"),
            Label::Negative => write!(f, "-1"),
        }
    }
}

/// A feature vector in the original `d`-dimensional space plus its class.
#[derive(Debug, Clone, PartialEq)]
pub struct LabeledSample {
    pub features: DenseVector,
    pub label: Label,
}

impl LabeledSample {
    pub fn new(features: DenseVector, label: Label) -> Self {
        Self { features, label }
    }
}

/// A fully transformed sample: extended, sign-folded, unit length.
///
/// The last component before normalization is exactly `+1` or `-1`, so the
/// norm is at least 1 and the stored point always has a nonzero last
/// component.
#[derive(Debug, Clone, PartialEq)]
pub struct TransformedSample {
    point: DenseVector,
}

impl TransformedSample {
    /// Wraps a vector that is already unit length (within 1e-12).
    ///
    /// Intended for oracle and test code that synthesizes points directly;
    /// dataset code should go through [`preprocess_dataset`].
    pub fn from_unit(point: DenseVector) -> Result<Self, PreprocessError> {
        let n = norm(&point);
        if (n - 1.0).abs() > 1e-12 {
            return Err(PreprocessError::NotUnitLength { norm: n });
        }
        Ok(Self { point })
    }

    pub fn point(&self) -> &DenseVector {
        &self.point
    }

    pub fn dim(&self) -> usize {
        self.point.dim()
    }

    pub fn into_point(self) -> DenseVector {
        self.point
    }
}

/// A hyperplane `normal·x + bias = 0` in the original feature space.
#[derive(Debug, Clone, PartialEq)]
pub struct Hyperplane {
    pub normal: DenseVector,
    pub bias: f64,
}

impl Hyperplane {
    pub fn new(normal: DenseVector, bias: f64) -> Self {
        Self { normal, bias }
    }

    /// Signed score `normal·x + bias`; positive means the positive side.
    pub fn score(&self, x: &DenseVector) -> Result<f64, GeometryError> {
        Ok(crate::vector::dot(&self.normal, x)? + self.bias)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum PreprocessError {
    /// Sample at `index` has a different dimension than the first sample.
    DimensionMismatch { expected: usize, got: usize, index: usize },
    /// A transformed-space weight vector needs at least two components to
    /// split into a normal and a bias.
    NotExtended { dim: usize },
    /// A hyperplane normal must be nonzero.
    ZeroNormal,
    /// The supplied point is not unit length.
    NotUnitLength { norm: f64 },
}

impl fmt::Display for PreprocessError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PreprocessError::DimensionMismatch { expected, got, index } => {
                write!(f, "sample {index} has dimension {got}, expected {expected}")
            }
            PreprocessError::NotExtended { dim } => {
                write!(f, "need at least 2 components to recover a hyperplane, got {dim}")
            }
            PreprocessError::ZeroNormal => write!(f, "hyperplane normal must be nonzero"),
            PreprocessError::NotUnitLength { norm } => {
                write!(f, "point must be unit length, norm is {norm}")
            }
        }
    }
}

impl std::error::Error for PreprocessError {}

/// Appends the constant feature `1.0`; the label is untouched.
pub fn extend_dimension(sample: &LabeledSample) -> (DenseVector, Label) {
    let mut values = sample.features.values().to_vec();
    values.push(1.0);
    (DenseVector::from_raw(values), sample.label)
}

/// Negates every component of negative samples; positives pass through.
pub fn invert_negative(extended: &DenseVector, label: Label) -> DenseVector {
    match label {
        Label::Positive => extended.clone(),
        Label::Negative => {
            DenseVector::from_raw(extended.values().iter().map(|v| -v).collect())
        }
    }
}

/// Applies extension, inversion, and normalization to every sample in order.
///
/// Normalization cannot fail here: extension guarantees a last component of
/// magnitude 1, so every intermediate vector has norm >= 1.
pub fn preprocess_dataset(data: &[LabeledSample]) -> Result<Vec<TransformedSample>, PreprocessError> {
    let expected = match data.first() {
        Some(first) => first.features.dim(),
        None => return Ok(Vec::new()),
    };
    let mut out = Vec::with_capacity(data.len());
    for (index, sample) in data.iter().enumerate() {
        if sample.features.dim() != expected {
            return Err(PreprocessError::DimensionMismatch {
                expected,
                got: sample.features.dim(),
                index,
            });
        }
        let (extended, label) = extend_dimension(sample);
        let folded = invert_negative(&extended, label);
        let point = normalize(&folded).expect("extended sample has norm >= 1");
        out.push(TransformedSample { point });
    }
    Ok(out)
}

/// Splits a transformed-space weight vector into an original-space
/// hyperplane: first `d` components become the normal, the last the bias.
pub fn recover_hyperplane(w_ext: &DenseVector) -> Result<Hyperplane, PreprocessError> {
    if w_ext.dim() < 2 {
        return Err(PreprocessError::NotExtended { dim: w_ext.dim() });
    }
    let values = w_ext.values();
    let (normal, bias) = values.split_at(values.len() - 1);
    Ok(Hyperplane {
        normal: DenseVector::from_raw(normal.to_vec()),
        bias: bias[0],
    })
}

/// Embeds an original-space hyperplane as a unit-length direction in the
/// transformed space: `(normal..., bias)` scaled to length 1.
pub fn transform_reference(h: &Hyperplane) -> Result<DenseVector, PreprocessError> {
    if h.normal.is_zero() {
        return Err(PreprocessError::ZeroNormal);
    }
    let mut values = h.normal.values().to_vec();
    values.push(h.bias);
    let embedded = DenseVector::from_raw(values);
    Ok(normalize(&embedded).expect("nonzero normal gives nonzero embedding"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vector::dot;
    use proptest::prelude::*;

    fn v(values: &[f64]) -> DenseVector {
        DenseVector::from_slice(values).unwrap()
    }

    fn sample(features: &[f64], label: Label) -> LabeledSample {
        LabeledSample::new(v(features), label)
    }

    fn assert_close(got: &[f64], want: &[f64]) {
        assert_eq!(got.len(), want.len());
        for (g, w) in got.iter().zip(want) {
            assert!((g - w).abs() < 1e-12, "got {got:?}, want {want:?}");
        }
    }

    #[test]
    fn extend_appends_constant_one() {
        let (ext, label) = extend_dimension(&sample(&[0.0, 1.0], Label::Positive));
        assert_eq!(ext.values(), &[0.0, 1.0, 1.0]);
        assert_eq!(label, Label::Positive);

        let (ext, label) = extend_dimension(&sample(&[100.0], Label::Negative));
        assert_eq!(ext.values(), &[100.0, 1.0]);
        assert_eq!(label, Label::Negative);

        let (ext, _) = extend_dimension(&sample(&[5.0], Label::Positive));
        assert_eq!(ext.values(), &[5.0, 1.0]);
    }

    #[test]
    fn inversion_flips_negatives_only() {
        assert_eq!(
            invert_negative(&v(&[1.0, 1.0, 1.0]), Label::Negative).values(),
            &[-1.0, -1.0, -1.0]
        );
        assert_eq!(
            invert_negative(&v(&[0.0, 1.0, 1.0]), Label::Positive).values(),
            &[0.0, 1.0, 1.0]
        );
        assert_eq!(
            invert_negative(&v(&[0.0, 0.0, 1.0]), Label::Negative).values(),
            &[-0.0, -0.0, -1.0]
        );
    }

    #[test]
    fn preprocess_xor_set() {
        let data = vec![
            sample(&[0.0, 1.0], Label::Positive),
            sample(&[1.0, 0.0], Label::Positive),
            sample(&[0.0, 0.0], Label::Negative),
            sample(&[1.0, 1.0], Label::Negative),
        ];
        let out = preprocess_dataset(&data).unwrap();
        let s2 = 1.0 / 2.0f64.sqrt();
        let s3 = 1.0 / 3.0f64.sqrt();
        assert_close(out[0].point().values(), &[0.0, s2, s2]);
        assert_close(out[1].point().values(), &[s2, 0.0, s2]);
        assert_close(out[2].point().values(), &[0.0, 0.0, -1.0]);
        assert_close(out[3].point().values(), &[-s3, -s3, -s3]);
    }

    #[test]
    fn preprocess_single_positive() {
        let out = preprocess_dataset(&[sample(&[3.0, 4.0], Label::Positive)]).unwrap();
        let n = 26.0f64.sqrt();
        assert_close(out[0].point().values(), &[3.0 / n, 4.0 / n, 1.0 / n]);
    }

    #[test]
    fn preprocess_two_point_line() {
        let data = vec![
            sample(&[100.0], Label::Negative),
            sample(&[101.0], Label::Positive),
        ];
        let out = preprocess_dataset(&data).unwrap();
        let n1 = 10001.0f64.sqrt();
        let n2 = 10202.0f64.sqrt();
        assert_close(out[0].point().values(), &[-100.0 / n1, -1.0 / n1]);
        assert_close(out[1].point().values(), &[101.0 / n2, 1.0 / n2]);
    }

    #[test]
    fn preprocess_rejects_mixed_dimensions() {
        let data = vec![
            sample(&[1.0, 2.0], Label::Positive),
            sample(&[1.0], Label::Negative),
        ];
        let err = preprocess_dataset(&data).unwrap_err();
        assert_eq!(err, PreprocessError::DimensionMismatch { expected: 2, got: 1, index: 1 });
    }

    #[test]
    fn recover_splits_normal_and_bias() {
        let h = recover_hyperplane(&v(&[2.0, -3.0, 0.5])).unwrap();
        assert_eq!(h.normal.values(), &[2.0, -3.0]);
        assert_eq!(h.bias, 0.5);

        let h = recover_hyperplane(&v(&[1.0, 0.0])).unwrap();
        assert_eq!(h.normal.values(), &[1.0]);
        assert_eq!(h.bias, 0.0);

        assert_eq!(
            recover_hyperplane(&v(&[1.0])).unwrap_err(),
            PreprocessError::NotExtended { dim: 1 }
        );
    }

    #[test]
    fn reference_embedding_is_unit() {
        let w = transform_reference(&Hyperplane::new(v(&[1.0, 0.0]), 0.0)).unwrap();
        assert_eq!(w.values(), &[1.0, 0.0, 0.0]);

        let w = transform_reference(&Hyperplane::new(v(&[3.0, 4.0]), 0.0)).unwrap();
        assert_close(w.values(), &[0.6, 0.8, 0.0]);

        let w = transform_reference(&Hyperplane::new(v(&[1.0]), -100.5)).unwrap();
        let n = (1.0 + 100.5f64 * 100.5).sqrt();
        assert_close(w.values(), &[1.0 / n, -100.5 / n]);

        assert_eq!(
            transform_reference(&Hyperplane::new(v(&[0.0, 0.0]), 1.0)).unwrap_err(),
            PreprocessError::ZeroNormal
        );
    }

    #[test]
    fn from_unit_rejects_non_unit_points() {
        assert!(TransformedSample::from_unit(v(&[0.0, 1.0])).is_ok());
        assert!(matches!(
            TransformedSample::from_unit(v(&[0.0, 0.5])),
            Err(PreprocessError::NotUnitLength { .. })
        ));
    }

    prop_compose! {
        fn plane_and_point()(dim in 1usize..6)(
            features in proptest::collection::vec(-50.0f64..50.0, dim),
            normal in proptest::collection::vec(-50.0f64..50.0, dim),
            bias in -50.0f64..50.0,
            positive in proptest::bool::ANY,
        ) -> (Vec<f64>, Vec<f64>, f64, bool) {
            (features, normal, bias, positive)
        }
    }

    proptest! {
        /// A sample is classified correctly by `h` exactly when its
        /// transformed image lands on the positive side of the embedded
        /// reference direction.
        #[test]
        fn sign_preservation((features, normal, bias, positive) in plane_and_point()) {
            prop_assume!(normal.iter().any(|&c| c.abs() > 1e-6));
            let label = if positive { Label::Positive } else { Label::Negative };
            let s = sample(&features, label);
            let h = Hyperplane::new(v(&normal), bias);
            let score = h.score(&s.features).unwrap();
            // Stay away from the boundary, where rounding controls the sign.
            prop_assume!(score.abs() > 1e-9);

            let separated_original = score * label.value() > 0.0;
            let reference = transform_reference(&h).unwrap();
            let transformed = preprocess_dataset(std::slice::from_ref(&s)).unwrap();
            let separated_transformed =
                dot(&reference, transformed[0].point()).unwrap() > 0.0;
            prop_assert_eq!(separated_original, separated_transformed);
        }

        /// Recovering after embedding returns the hyperplane scaled by the
        /// positive constant 1/||(normal, bias)||.
        #[test]
        fn embed_recover_round_trip(
            normal in proptest::collection::vec(-50.0f64..50.0, 1..6),
            bias in -50.0f64..50.0,
        ) {
            prop_assume!(normal.iter().any(|&c| c.abs() > 1e-6));
            let h = Hyperplane::new(v(&normal), bias);
            let embedded = transform_reference(&h).unwrap();
            let recovered = recover_hyperplane(&embedded).unwrap();

            let mut full = normal.clone();
            full.push(bias);
            let scale = 1.0 / crate::vector::norm(&v(&full));
            for (r, n) in recovered.normal.values().iter().zip(&normal) {
                prop_assert!((r - n * scale).abs() <= 1e-12 * n.abs().max(1.0));
            }
            prop_assert!((recovered.bias - bias * scale).abs() <= 1e-12 * bias.abs().max(1.0));
        }

        /// Every transformed sample is unit length; order and count survive.
        #[test]
        fn outputs_are_unit_and_ordered(
            rows in proptest::collection::vec(
                (proptest::collection::vec(-100.0f64..100.0, 3), proptest::bool::ANY),
                1..30,
            ),
        ) {
            let data: Vec<LabeledSample> = rows
                .iter()
                .map(|(f, pos)| {
                    sample(f, if *pos { Label::Positive } else { Label::Negative })
                })
                .collect();
            let out = preprocess_dataset(&data).unwrap();
            prop_assert_eq!(out.len(), data.len());
            for (t, s) in out.iter().zip(&data) {
                prop_assert!((crate::vector::norm(t.point()) - 1.0).abs() < 1e-12);
                // Last component carries the folded sign of the constant feature.
                let last = t.point().values()[t.dim() - 1];
                prop_assert!(last != 0.0);
                prop_assert_eq!(last > 0.0, s.label == Label::Positive);
            }
        }
    }
}
