//! Dense vector arithmetic shared by every other module.
//!
//! All values are `f64`. [`DenseVector`] guarantees at construction that it
//! is non-empty and that every component is finite, so downstream code never
//! has to re-check for NaN or infinities.

use std::fmt;

use rand::Rng;
use rand_distr::StandardNormal;

/// Errors raised by vector construction and arithmetic.
#[derive(Debug, Clone, PartialEq)]
pub enum GeometryError {
    /// A vector must have at least one component.
    Empty,
    /// Component at `index` was NaN or infinite.
    NonFinite { index: usize },
    /// Two operands had different dimensions.
    DimensionMismatch { left: usize, right: usize },
    /// The operation is undefined for the zero vector.
    ZeroVector,
}

impl fmt::Display for GeometryError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeometryError::Empty => write!(f, "vector must have at least one component"),
            GeometryError::NonFinite { index } => {
                write!(f, "component {index} is not finite")
            }
            GeometryError::DimensionMismatch { left, right } => {
                write!(f, "dimension mismatch: {left} vs {right}")
            }
            GeometryError::ZeroVector => write!(f, "operation undefined for the zero vector"),
        }
    }
}

impl std::error::Error for GeometryError {}

/// A dense vector of 64-bit floats; non-empty, all components finite.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseVector {
    values: Vec<f64>,
}

impl DenseVector {
    /// Validates and wraps raw components.
    pub fn new(values: Vec<f64>) -> Result<Self, GeometryError> {
        if values.is_empty() {
            return Err(GeometryError::Empty);
        }
        if let Some(index) = values.iter().position(|v| !v.is_finite()) {
            return Err(GeometryError::NonFinite { index });
        }
        Ok(Self { values })
    }

    /// Like [`DenseVector::new`] but for callers that construct values known
    /// to be valid (finite arithmetic on already-validated inputs).
    pub(crate) fn from_raw(values: Vec<f64>) -> Self {
        debug_assert!(!values.is_empty());
        debug_assert!(values.iter().all(|v| v.is_finite()));
        Self { values }
    }

    pub fn from_slice(values: &[f64]) -> Result<Self, GeometryError> {
        Self::new(values.to_vec())
    }

    /// Vector of `dim` zeros.
    pub fn zeros(dim: usize) -> Result<Self, GeometryError> {
        if dim == 0 {
            return Err(GeometryError::Empty);
        }
        Ok(Self { values: vec![0.0; dim] })
    }

    pub fn dim(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<f64> {
        self.values
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&v| v == 0.0)
    }
}

impl std::ops::Index<usize> for DenseVector {
    type Output = f64;

    fn index(&self, index: usize) -> &f64 {
        &self.values[index]
    }
}

/// Dot product of two equal-dimension vectors.
pub fn dot(a: &DenseVector, b: &DenseVector) -> Result<f64, GeometryError> {
    if a.dim() != b.dim() {
        return Err(GeometryError::DimensionMismatch { left: a.dim(), right: b.dim() });
    }
    Ok(dot_slices(a.values(), b.values()))
}

/// Euclidean norm; zero only for the zero vector.
pub fn norm(a: &DenseVector) -> f64 {
    norm_slice(a.values())
}

/// Scales `a` to unit length. Fails on the zero vector.
///
/// Divides each component rather than multiplying by a reciprocal, so each
/// output component is the correctly rounded quotient.
pub fn normalize(a: &DenseVector) -> Result<DenseVector, GeometryError> {
    let n = norm(a);
    if n == 0.0 {
        return Err(GeometryError::ZeroVector);
    }
    Ok(DenseVector::from_raw(a.values().iter().map(|v| v / n).collect()))
}

/// Angle in radians between two nonzero vectors, in `[0, pi]`.
///
/// The cosine is clamped to `[-1, 1]` before `acos`: rounding can push the
/// ratio marginally outside the interval for near-parallel vectors, and the
/// clamp keeps the result free of NaN.
pub fn angle_between(a: &DenseVector, b: &DenseVector) -> Result<f64, GeometryError> {
    let na = norm(a);
    let nb = norm(b);
    if na == 0.0 || nb == 0.0 {
        return Err(GeometryError::ZeroVector);
    }
    let cos = dot(a, b)? / (na * nb);
    Ok(cos.clamp(-1.0, 1.0).acos())
}

/// Uniformly distributed point on the unit sphere of the given dimension.
///
/// Draws standard normal components and normalizes; redraws in the
/// (probability-zero) event of a numerically zero vector.
pub fn random_unit_vector<R: Rng + ?Sized>(rng: &mut R, dim: usize) -> DenseVector {
    assert!(dim >= 1, "dimension must be at least 1");
    loop {
        let values: Vec<f64> = (0..dim).map(|_| rng.sample(StandardNormal)).collect();
        let n = norm_slice(&values);
        if n > 1e-300 {
            let inv = 1.0 / n;
            return DenseVector::from_raw(values.iter().map(|v| v * inv).collect());
        }
    }
}

/// Dot product kernel over raw slices. Four independent accumulators keep
/// the floating-point add chain short; the lane split is fixed, so results
/// are identical from run to run.
pub(crate) fn dot_slices(a: &[f64], b: &[f64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    let mut acc = [0.0f64; 4];
    let chunks = a.len() / 4;
    for i in 0..chunks {
        let j = i * 4;
        acc[0] += a[j] * b[j];
        acc[1] += a[j + 1] * b[j + 1];
        acc[2] += a[j + 2] * b[j + 2];
        acc[3] += a[j + 3] * b[j + 3];
    }
    let mut tail = 0.0;
    for j in chunks * 4..a.len() {
        tail += a[j] * b[j];
    }
    (acc[0] + acc[1]) + (acc[2] + acc[3]) + tail
}

pub(crate) fn norm_slice(a: &[f64]) -> f64 {
    dot_slices(a, a).sqrt()
}

/// In place `y += alpha * x`.
pub(crate) fn axpy(alpha: f64, x: &[f64], y: &mut [f64]) {
    debug_assert_eq!(x.len(), y.len());
    for (yi, xi) in y.iter_mut().zip(x) {
        *yi += alpha * xi;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn v(values: &[f64]) -> DenseVector {
        DenseVector::from_slice(values).unwrap()
    }

    #[test]
    fn dot_orthogonal_axes() {
        assert_eq!(dot(&v(&[1.0, 0.0]), &v(&[0.0, 1.0])).unwrap(), 0.0);
    }

    #[test]
    fn dot_direct_sum() {
        assert_eq!(dot(&v(&[100.0, 1.0]), &v(&[1.0, 1.0])).unwrap(), 101.0);
    }

    #[test]
    fn dot_hand_sum() {
        assert_eq!(dot(&v(&[0.0, 1.0, 1.0]), &v(&[-1.0, -1.0, -1.0])).unwrap(), -2.0);
    }

    #[test]
    fn dot_rejects_dimension_mismatch() {
        let err = dot(&v(&[1.0]), &v(&[1.0, 2.0])).unwrap_err();
        assert_eq!(err, GeometryError::DimensionMismatch { left: 1, right: 2 });
    }

    #[test]
    fn norm_zero_vector() {
        assert_eq!(norm(&v(&[0.0, 0.0])), 0.0);
    }

    #[test]
    fn norm_pythagorean() {
        assert_eq!(norm(&v(&[3.0, 4.0])), 5.0);
    }

    #[test]
    fn norm_all_ones() {
        assert!((norm(&v(&[1.0, 1.0, 1.0])) - 3.0f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn normalize_pythagorean() {
        let u = normalize(&v(&[3.0, 4.0])).unwrap();
        assert_eq!(u.values(), &[0.6, 0.8]);
    }

    #[test]
    fn normalize_already_unit() {
        let u = normalize(&v(&[0.0, 0.0, -1.0])).unwrap();
        assert_eq!(u.values(), &[0.0, 0.0, -1.0]);
    }

    #[test]
    fn normalize_negative_diagonal() {
        let u = normalize(&v(&[-1.0, -1.0, -1.0])).unwrap();
        let e = -1.0 / 3.0f64.sqrt();
        for c in u.values() {
            assert!((c - e).abs() < 1e-15);
        }
    }

    #[test]
    fn normalize_rejects_zero() {
        assert_eq!(normalize(&v(&[0.0, 0.0])).unwrap_err(), GeometryError::ZeroVector);
    }

    #[test]
    fn angle_right() {
        let a = angle_between(&v(&[1.0, 0.0]), &v(&[0.0, 1.0])).unwrap();
        assert!((a - std::f64::consts::FRAC_PI_2).abs() < 1e-15);
    }

    #[test]
    fn angle_identity() {
        assert_eq!(angle_between(&v(&[1.0, 0.0]), &v(&[1.0, 0.0])).unwrap(), 0.0);
    }

    #[test]
    fn angle_antiparallel() {
        let a = angle_between(&v(&[1.0, 0.0]), &v(&[-1.0, 0.0])).unwrap();
        assert!((a - std::f64::consts::PI).abs() < 1e-15);
    }

    #[test]
    fn angle_rejects_zero_vector() {
        assert_eq!(
            angle_between(&v(&[0.0, 0.0]), &v(&[1.0, 0.0])).unwrap_err(),
            GeometryError::ZeroVector
        );
    }

    #[test]
    fn constructor_rejects_nan_and_empty() {
        assert_eq!(DenseVector::new(vec![]).unwrap_err(), GeometryError::Empty);
        assert_eq!(
            DenseVector::new(vec![1.0, f64::NAN]).unwrap_err(),
            GeometryError::NonFinite { index: 1 }
        );
        assert_eq!(
            DenseVector::new(vec![f64::INFINITY]).unwrap_err(),
            GeometryError::NonFinite { index: 0 }
        );
    }

    #[test]
    fn random_unit_vector_has_unit_norm() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for dim in [1usize, 2, 3, 17, 500] {
            let u = random_unit_vector(&mut rng, dim);
            assert_eq!(u.dim(), dim);
            assert!((norm(&u) - 1.0).abs() < 1e-12);
        }
    }

    proptest! {
        #[test]
        fn normalize_yields_unit_norm(values in proptest::collection::vec(-1e6f64..1e6, 1..40)) {
            prop_assume!(values.iter().any(|&c| c.abs() > 1e-9));
            let u = normalize(&v(&values)).unwrap();
            prop_assert!((norm(&u) - 1.0).abs() < 1e-12);
        }

        #[test]
        fn dot_is_symmetric_and_homogeneous(
            pairs in proptest::collection::vec((-1e3f64..1e3, -1e3f64..1e3), 1..20),
            c in -100.0f64..100.0,
        ) {
            let a: Vec<f64> = pairs.iter().map(|p| p.0).collect();
            let b: Vec<f64> = pairs.iter().map(|p| p.1).collect();
            let va = v(&a);
            let vb = v(&b);
            let ab = dot(&va, &vb).unwrap();
            let ba = dot(&vb, &va).unwrap();
            prop_assert_eq!(ab, ba);

            let ca = v(&a.iter().map(|x| c * x).collect::<Vec<_>>());
            let lhs = dot(&ca, &vb).unwrap();
            let rhs = c * ab;
            // Scale the tolerance by the term magnitudes, not the result:
            // cancellation can leave a result far smaller than the rounding
            // already committed in the summands.
            let magnitude: f64 =
                a.iter().zip(&b).map(|(x, y)| (x * y).abs()).sum();
            let scale = (c.abs() * magnitude).max(1.0);
            prop_assert!((lhs - rhs).abs() <= 1e-12 * scale);
        }

        #[test]
        fn angle_never_nan_for_parallel_inputs(
            values in proptest::collection::vec(-1e3f64..1e3, 1..20),
            scale in 1e-3f64..1e3,
        ) {
            prop_assume!(values.iter().any(|&c| c.abs() > 1e-6));
            let a = v(&values);
            let b = v(&values.iter().map(|x| x * scale).collect::<Vec<_>>());
            let angle = angle_between(&a, &b).unwrap();
            prop_assert!(angle.is_finite());
            prop_assert!((0.0..=std::f64::consts::PI).contains(&angle));
        }
    }
}
