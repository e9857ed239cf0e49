//! State vectors and rays.
//!
//! A [`StateVector`] is a nonzero element of `C^N`. Two state vectors that
//! differ by a nonzero complex factor describe the same physical state; the
//! equivalence class is a [`Ray`]. Rays are stored through a representative
//! in canonical gauge: unit norm, with the first non-negligible amplitude
//! real and positive.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{GeomError, Result};

/// Amplitudes below this fraction of the largest one are skipped when
/// choosing the gauge-fixing component.
pub const GAUGE_THRESHOLD: f64 = 1e-12;

/// A nonzero, finite vector of complex amplitudes.
///
/// Serializes as an array of `[re, im]` pairs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<[f64; 2]>", into = "Vec<[f64; 2]>")]
pub struct StateVector {
    amps: Vec<Complex64>,
}

impl StateVector {
    pub fn new(amps: Vec<Complex64>) -> Result<Self> {
        if amps.is_empty() {
            return Err(GeomError::Dimension {
                expected: 1,
                found: 0,
            });
        }
        if amps.iter().any(|a| !a.re.is_finite() || !a.im.is_finite()) {
            return Err(GeomError::NonFinite);
        }
        if amps.iter().all(|a| a.re == 0.0 && a.im == 0.0) {
            return Err(GeomError::ZeroVector);
        }
        Ok(Self { amps })
    }

    pub fn from_pairs(pairs: &[[f64; 2]]) -> Result<Self> {
        Self::new(pairs.iter().map(|p| Complex64::new(p[0], p[1])).collect())
    }

    /// Builds a vector from real amplitudes.
    pub fn from_real(values: &[f64]) -> Result<Self> {
        Self::new(values.iter().map(|&v| Complex64::new(v, 0.0)).collect())
    }

    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn to_pairs(&self) -> Vec<[f64; 2]> {
        self.amps.iter().map(|a| [a.re, a.im]).collect()
    }

    /// Euclidean norm, computed with rescaling so that tiny or huge
    /// amplitudes neither underflow nor overflow.
    pub fn norm(&self) -> f64 {
        let scale = self.max_modulus();
        let sum: f64 = self.amps.iter().map(|a| (a / scale).norm_sqr()).sum();
        scale * sum.sqrt()
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amps.iter().map(Complex64::norm_sqr).sum()
    }

    /// Membership in the unit sphere of the Hilbert space.
    pub fn is_normalized(&self, tol: f64) -> bool {
        (self.norm() - 1.0).abs() <= tol
    }

    /// Multiplies every amplitude by `lambda`.
    pub fn scaled(&self, lambda: Complex64) -> Result<Self> {
        if lambda.re == 0.0 && lambda.im == 0.0 {
            return Err(GeomError::ZeroVector);
        }
        Self::new(self.amps.iter().map(|a| a * lambda).collect())
    }

    fn max_modulus(&self) -> f64 {
        self.amps.iter().map(|a| a.norm()).fold(0.0, f64::max)
    }

    pub(crate) fn from_unchecked(amps: Vec<Complex64>) -> Self {
        debug_assert!(!amps.is_empty());
        Self { amps }
    }
}

impl TryFrom<Vec<[f64; 2]>> for StateVector {
    type Error = GeomError;

    fn try_from(pairs: Vec<[f64; 2]>) -> Result<Self> {
        Self::from_pairs(&pairs)
    }
}

impl From<StateVector> for Vec<[f64; 2]> {
    fn from(v: StateVector) -> Self {
        v.to_pairs()
    }
}

pub(crate) fn check_same_dim(a: &StateVector, b: &StateVector) -> Result<()> {
    if a.dim() != b.dim() {
        return Err(GeomError::Dimension {
            expected: a.dim(),
            found: b.dim(),
        });
    }
    Ok(())
}

/// `⟨a|b⟩ = Σ conj(a_k) b_k`.
pub fn inner_product(a: &StateVector, b: &StateVector) -> Result<Complex64> {
    check_same_dim(a, b)?;
    Ok(a.amps.iter().zip(&b.amps).map(|(x, y)| x.conj() * y).sum())
}

/// Rescales `v` onto the unit sphere.
///
/// The zero vector cannot be represented by [`StateVector`], so this is
/// infallible.
pub fn normalize(v: &StateVector) -> StateVector {
    let n = v.norm();
    StateVector::from_unchecked(v.amps.iter().map(|a| a / n).collect())
}

/// A point of projective Hilbert space.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Ray {
    representative: StateVector,
}

impl Ray {
    /// Unit-norm representative in canonical gauge.
    pub fn representative(&self) -> &StateVector {
        &self.representative
    }

    pub fn dim(&self) -> usize {
        self.representative.dim()
    }
}

/// The projection from nonzero states onto rays.
pub fn project_to_ray(v: &StateVector) -> Ray {
    let unit = normalize(v);
    let threshold = GAUGE_THRESHOLD * unit.max_modulus();
    let pivot = unit
        .amps
        .iter()
        .position(|a| a.norm() > threshold)
        .expect("normalized vector has a nonzero amplitude");
    let a = unit.amps[pivot];
    let modulus = a.norm();
    let phase = a.conj() / modulus;
    let mut amps: Vec<Complex64> = unit.amps.iter().map(|x| x * phase).collect();
    amps[pivot] = Complex64::new(modulus, 0.0);
    Ray {
        representative: StateVector::from_unchecked(amps),
    }
}

/// Whether two rays coincide up to `tol` in `1 − |⟨p|q⟩|`.
pub fn rays_equal(p: &Ray, q: &Ray, tol: f64) -> Result<bool> {
    let overlap = inner_product(&p.representative, &q.representative)?;
    Ok(1.0 - overlap.norm() <= tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_1_SQRT_2;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn sv(pairs: &[[f64; 2]]) -> StateVector {
        StateVector::from_pairs(pairs).unwrap()
    }

    #[test]
    fn inner_product_examples() {
        let e0 = sv(&[[1.0, 0.0], [0.0, 0.0]]);
        let e1 = sv(&[[0.0, 0.0], [1.0, 0.0]]);
        assert_eq!(inner_product(&e0, &e0).unwrap(), c(1.0, 0.0));
        assert_eq!(inner_product(&e0, &e1).unwrap(), c(0.0, 0.0));

        let h = FRAC_1_SQRT_2;
        let a = sv(&[[h, 0.0], [h, 0.0]]);
        let b = sv(&[[h, 0.0], [0.0, h]]);
        let ip = inner_product(&a, &b).unwrap();
        assert!((ip - c(0.5, 0.5)).norm() < 1e-15);
        let back = inner_product(&b, &a).unwrap();
        assert!((ip - back.conj()).norm() < 1e-15);
    }

    #[test]
    fn inner_product_dimension_mismatch() {
        let a = sv(&[[1.0, 0.0]]);
        let b = sv(&[[1.0, 0.0], [0.0, 0.0]]);
        assert_eq!(
            inner_product(&a, &b),
            Err(GeomError::Dimension {
                expected: 1,
                found: 2
            })
        );
    }

    #[test]
    fn construction_rejects_bad_input() {
        assert_eq!(
            StateVector::from_pairs(&[[0.0, 0.0], [0.0, 0.0]]),
            Err(GeomError::ZeroVector)
        );
        assert!(matches!(
            StateVector::from_pairs(&[]),
            Err(GeomError::Dimension { .. })
        ));
        assert_eq!(
            StateVector::from_pairs(&[[f64::NAN, 0.0]]),
            Err(GeomError::NonFinite)
        );
        let v = sv(&[[1.0, 0.0]]);
        assert_eq!(v.scaled(c(0.0, 0.0)), Err(GeomError::ZeroVector));
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(
            normalize(&sv(&[[2.0, 0.0], [0.0, 0.0]])),
            sv(&[[1.0, 0.0], [0.0, 0.0]])
        );

        let n = normalize(&sv(&[[1.0, 0.0], [1.0, 0.0]]));
        for a in n.amplitudes() {
            assert!((a - c(FRAC_1_SQRT_2, 0.0)).norm() < 1e-15);
        }

        let n = normalize(&sv(&[[0.0, 3.0], [4.0, 0.0]]));
        assert!((n.amplitudes()[0] - c(0.0, 0.6)).norm() < 1e-15);
        assert!((n.amplitudes()[1] - c(0.8, 0.0)).norm() < 1e-15);
        assert!(n.is_normalized(1e-14));
    }

    #[test]
    fn normalize_extreme_scales() {
        let tiny = sv(&[[1e-200, 0.0], [0.0, 1e-200]]);
        assert!(normalize(&tiny).is_normalized(1e-14));
        let huge = sv(&[[1e200, 0.0], [0.0, 1e200]]);
        assert!(normalize(&huge).is_normalized(1e-14));
    }

    #[test]
    fn project_to_ray_examples() {
        let r = project_to_ray(&sv(&[[0.0, 0.0], [0.0, 2.0]]));
        assert_eq!(r.representative(), &sv(&[[0.0, 0.0], [1.0, 0.0]]));

        let r = project_to_ray(&sv(&[[1.0, 0.0], [0.0, 0.0]]));
        assert_eq!(r.representative(), &sv(&[[1.0, 0.0], [0.0, 0.0]]));

        let h = FRAC_1_SQRT_2;
        let r = project_to_ray(&sv(&[[0.0, h], [0.0, h]]));
        for a in r.representative().amplitudes() {
            assert!((a - c(h, 0.0)).norm() < 1e-15);
        }
    }

    #[test]
    fn gauge_skips_negligible_leading_amplitude() {
        let r = project_to_ray(&sv(&[[1e-14, 1e-14], [0.0, -1.0]]));
        let amps = r.representative().amplitudes();
        assert_eq!(amps[1].im, 0.0);
        assert!(amps[1].re > 0.0);
    }

    #[test]
    fn rays_equal_examples() {
        let p = project_to_ray(&sv(&[[1.0, 0.0], [0.0, 0.0]]));
        for k in 0..16 {
            let theta = k as f64 * 0.4;
            let q = project_to_ray(&sv(&[[theta.cos(), theta.sin()], [0.0, 0.0]]));
            assert!(rays_equal(&p, &q, 1e-12).unwrap());
        }
        let q = project_to_ray(&sv(&[[0.0, 0.0], [1.0, 0.0]]));
        assert!(!rays_equal(&p, &q, 1e-12).unwrap());

        let p = project_to_ray(&sv(&[[1.0, 0.0], [1.0, 0.0]]));
        let q = project_to_ray(&sv(&[[1.0, 0.0], [1.0 + 1e-15, 0.0]]));
        assert!(rays_equal(&p, &q, 1e-12).unwrap());

        let r3 = project_to_ray(&sv(&[[1.0, 0.0], [0.0, 0.0], [0.0, 0.0]]));
        assert!(rays_equal(&p, &r3, 1e-12).is_err());
    }

    #[test]
    fn json_format() {
        let v: StateVector = serde_json::from_str("[[1,0],[0,1]]").unwrap();
        assert_eq!(v.amplitudes(), &[c(1.0, 0.0), c(0.0, 1.0)]);
        assert_eq!(serde_json::to_string(&v).unwrap(), "[[1.0,0.0],[0.0,1.0]]");
        assert!(serde_json::from_str::<StateVector>("[[0,0]]").is_err());
        assert!(serde_json::from_str::<StateVector>("[]").is_err());
    }
}
