//! Fubini-Study geometry on rays.
//!
//! The line element between nearby normalized states is
//! `ds² = 4 (1 − |⟨ψ₁|ψ₂⟩|²)`, which makes the projective line `CP¹` a unit
//! sphere. Integrating along a great circle gives the finite distance
//! `2 arccos |⟨ψ̂₁|ψ̂₂⟩|`, ranging over `[0, π]`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{GeomError, Result};
use crate::hilbert::{
    check_same_dim, inner_product, normalize, project_to_ray, rays_equal, StateVector,
};

/// Tolerance on `| ‖ψ‖ − 1 |` accepted by [`fs_line_element_sq`].
pub const NORMALIZATION_TOL: f64 = 1e-10;

/// Below this value of `sin θ` two rays are treated as identical when
/// building a geodesic between them.
const DEGENERATE_SIN: f64 = 1e-12;

/// `1 − |⟨â|b̂⟩|²` for the normalized versions of `a` and `b`.
///
/// Evaluated through the Lagrange identity
/// `‖a‖²‖b‖² − |⟨a|b⟩|² = Σ_{j<k} |a_j b_k − a_k b_j|²`, which keeps full
/// relative accuracy for nearly parallel states where `1 − |⟨·|·⟩|²`
/// would cancel.
fn sin_sq_between(a: &StateVector, b: &StateVector) -> f64 {
    let a = normalize(a);
    let b = normalize(b);
    let (xa, xb) = (a.amplitudes(), b.amplitudes());
    let mut acc = 0.0;
    for j in 0..xa.len() {
        for k in j + 1..xa.len() {
            acc += (xa[j] * xb[k] - xa[k] * xb[j]).norm_sqr();
        }
    }
    acc.clamp(0.0, 1.0)
}

/// `|⟨â|b̂⟩|` clamped to `[0, 1]`.
pub fn overlap_modulus(a: &StateVector, b: &StateVector) -> Result<f64> {
    let ip = inner_product(&normalize(a), &normalize(b))?;
    Ok(ip.norm().min(1.0))
}

/// Squared Fubini-Study line element `4 (1 − |⟨a|b⟩|²)` between two
/// normalized states.
pub fn fs_line_element_sq(a: &StateVector, b: &StateVector) -> Result<f64> {
    check_same_dim(a, b)?;
    for v in [a, b] {
        if !v.is_normalized(NORMALIZATION_TOL) {
            return Err(GeomError::Normalization { norm: v.norm() });
        }
    }
    Ok(4.0 * sin_sq_between(a, b))
}

/// Geodesic distance between the rays of `a` and `b`: `2 arccos |⟨â|b̂⟩|`.
///
/// Computed as `2 atan2(sin θ, cos θ)`, the same quantity without the loss
/// of precision `arccos` suffers near 1.
pub fn fs_distance(a: &StateVector, b: &StateVector) -> Result<f64> {
    let cos = overlap_modulus(a, b)?;
    let sin = sin_sq_between(a, b).sqrt();
    Ok(2.0 * sin.atan2(cos))
}

/// An ordered sequence of at least two states of equal dimension.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<StateVector>", into = "Vec<StateVector>")]
pub struct DiscreteCurve {
    points: Vec<StateVector>,
}

impl DiscreteCurve {
    pub fn new(points: Vec<StateVector>) -> Result<Self> {
        if points.len() < 2 {
            return Err(GeomError::Domain(format!(
                "a curve needs at least 2 points, got {}",
                points.len()
            )));
        }
        let dim = points[0].dim();
        if let Some(p) = points.iter().find(|p| p.dim() != dim) {
            return Err(GeomError::Dimension {
                expected: dim,
                found: p.dim(),
            });
        }
        Ok(Self { points })
    }

    pub fn points(&self) -> &[StateVector] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Whether the curve closes up in ray space, i.e. its first and last
    /// points lie on the same ray even if they differ as vectors.
    pub fn is_closed(&self, tol: f64) -> bool {
        let first = project_to_ray(&self.points[0]);
        let last = project_to_ray(self.points.last().expect("len >= 2"));
        rays_equal(&first, &last, tol).unwrap_or(false)
    }
}

impl TryFrom<Vec<StateVector>> for DiscreteCurve {
    type Error = GeomError;

    fn try_from(points: Vec<StateVector>) -> Result<Self> {
        Self::new(points)
    }
}

impl From<DiscreteCurve> for Vec<StateVector> {
    fn from(c: DiscreteCurve) -> Self {
        c.points
    }
}

/// Sum of chord lengths `sqrt(ds²)` over consecutive (normalized) points.
pub fn curve_length(c: &DiscreteCurve) -> Result<f64> {
    let unit: Vec<StateVector> = c.points.iter().map(normalize).collect();
    let mut total = 0.0;
    for pair in unit.windows(2) {
        total += fs_line_element_sq(&pair[0], &pair[1])?.sqrt();
    }
    Ok(total)
}

/// Point at fraction `t` along the great circle from `a` to the ray of `b`.
///
/// `b` is first re-phased so that `⟨a|b′⟩` is real and non-negative; for
/// exactly orthogonal inputs `b′ = b`. The result has unit norm and the
/// phase of `a` at `t = 0`.
pub fn geodesic_interpolate(a: &StateVector, b: &StateVector, t: f64) -> Result<StateVector> {
    check_same_dim(a, b)?;
    if !(0.0..=1.0).contains(&t) {
        return Err(GeomError::Domain(format!(
            "interpolation parameter {t} not in [0, 1]"
        )));
    }
    let a = normalize(a);
    let b = normalize(b);
    let ov = inner_product(&a, &b)?;
    let b_rephased: Vec<Complex64> = if ov.norm() > 0.0 {
        let phase = ov.conj() / ov.norm();
        b.amplitudes().iter().map(|x| x * phase).collect()
    } else {
        b.amplitudes().to_vec()
    };
    let sin = sin_sq_between(&a, &b).sqrt();
    if sin <= DEGENERATE_SIN {
        return Err(GeomError::DegenerateGeodesic(
            "endpoints lie on the same ray",
        ));
    }
    let theta = sin.atan2(ov.norm());
    let wa = ((1.0 - t) * theta).sin() / sin;
    let wb = (t * theta).sin() / sin;
    let amps: Vec<Complex64> = a
        .amplitudes()
        .iter()
        .zip(&b_rephased)
        .map(|(x, y)| x * wa + y * wb)
        .collect();
    Ok(normalize(&StateVector::new(amps)?))
}

/// `n` equally spaced samples of the geodesic from `a` to `b`, endpoints
/// included.
pub fn geodesic_samples(a: &StateVector, b: &StateVector, n: usize) -> Result<DiscreteCurve> {
    if n < 2 {
        return Err(GeomError::Domain(format!(
            "need at least 2 samples, got {n}"
        )));
    }
    let points = (0..n)
        .map(|k| geodesic_interpolate(a, b, k as f64 / (n - 1) as f64))
        .collect::<Result<Vec<_>>>()?;
    DiscreteCurve::new(points)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2, FRAC_PI_4, PI};

    fn sv(pairs: &[[f64; 2]]) -> StateVector {
        StateVector::from_pairs(pairs).unwrap()
    }

    fn e0() -> StateVector {
        sv(&[[1.0, 0.0], [0.0, 0.0]])
    }

    fn e1() -> StateVector {
        sv(&[[0.0, 0.0], [1.0, 0.0]])
    }

    #[test]
    fn line_element_examples() {
        let plus = sv(&[[FRAC_1_SQRT_2, 0.0], [FRAC_1_SQRT_2, 0.0]]);
        assert_eq!(fs_line_element_sq(&plus, &plus).unwrap(), 0.0);
        assert_eq!(fs_line_element_sq(&e0(), &e1()).unwrap(), 4.0);
        assert!((fs_line_element_sq(&e0(), &plus).unwrap() - 2.0).abs() < 1e-15);
    }

    #[test]
    fn line_element_rejects_unnormalized() {
        let v = sv(&[[2.0, 0.0], [0.0, 0.0]]);
        assert!(matches!(
            fs_line_element_sq(&v, &e0()),
            Err(GeomError::Normalization { .. })
        ));
        let w = sv(&[[1.0, 0.0]]);
        assert!(matches!(
            fs_line_element_sq(&w, &e0()),
            Err(GeomError::Dimension { .. })
        ));
    }

    #[test]
    fn curve_length_examples() {
        let v = sv(&[[0.6, 0.0], [0.0, 0.8]]);
        let c = DiscreteCurve::new(vec![v.clone(), v.clone(), v]).unwrap();
        assert_eq!(curve_length(&c).unwrap(), 0.0);

        let c = DiscreteCurve::new(vec![e0(), e1()]).unwrap();
        assert_eq!(curve_length(&c).unwrap(), 2.0);
    }

    #[test]
    fn curve_requires_two_points() {
        assert!(DiscreteCurve::new(vec![e0()]).is_err());
        assert!(DiscreteCurve::new(vec![e0(), sv(&[[1.0, 0.0]])]).is_err());
    }

    #[test]
    fn closedness_in_ray_space() {
        // open in the Hilbert space, closed in ray space
        let c = DiscreteCurve::new(vec![
            e0(),
            sv(&[[FRAC_1_SQRT_2, 0.0], [FRAC_1_SQRT_2, 0.0]]),
            sv(&[[-1.0, 0.0], [0.0, 0.0]]),
        ])
        .unwrap();
        assert!(c.is_closed(1e-12));
        let c = DiscreteCurve::new(vec![e0(), e1()]).unwrap();
        assert!(!c.is_closed(1e-12));
    }

    #[test]
    fn distance_examples() {
        assert_eq!(fs_distance(&e0(), &e0()).unwrap(), 0.0);
        assert!((fs_distance(&e0(), &e1()).unwrap() - PI).abs() < 1e-15);
        let b = sv(&[[FRAC_PI_4.cos(), 0.0], [0.0, FRAC_PI_4.sin()]]);
        assert!((fs_distance(&e0(), &b).unwrap() - FRAC_PI_2).abs() < 1e-15);
    }

    #[test]
    fn distance_is_scale_and_phase_blind() {
        let a = sv(&[[0.3, -0.2], [1.1, 0.7]]);
        let b = sv(&[[-0.4, 0.9], [0.2, 0.1]]);
        let d = fs_distance(&a, &b).unwrap();
        let a2 = a.scaled(Complex64::new(-3.0, 2.0)).unwrap();
        assert!((fs_distance(&a2, &b).unwrap() - d).abs() < 1e-14);
    }

    #[test]
    fn interpolation_endpoints_and_midpoint() {
        let a = e0();
        let b = e1();
        assert_eq!(geodesic_interpolate(&a, &b, 0.0).unwrap(), a);
        let end = geodesic_interpolate(&a, &b, 1.0).unwrap();
        assert!(rays_equal(&project_to_ray(&end), &project_to_ray(&b), 1e-14).unwrap());
        let mid = geodesic_interpolate(&a, &b, 0.5).unwrap();
        for x in mid.amplitudes() {
            assert!((x - Complex64::new(FRAC_1_SQRT_2, 0.0)).norm() < 1e-15);
        }
    }

    #[test]
    fn interpolation_rephases_target() {
        let a = sv(&[[1.0, 0.0], [1.0, 0.0]]);
        let b = sv(&[[0.0, 1.0], [0.0, -0.3]]);
        let end = geodesic_interpolate(&a, &b, 1.0).unwrap();
        let ov = inner_product(&normalize(&a), &end).unwrap();
        assert!(ov.im.abs() < 1e-15 && ov.re > 0.0);
        assert!(rays_equal(&project_to_ray(&end), &project_to_ray(&b), 1e-14).unwrap());
    }

    #[test]
    fn interpolation_additivity() {
        let a = sv(&[[0.8, 0.1], [0.3, -0.5]]);
        let b = sv(&[[-0.2, 0.4], [0.9, 0.3]]);
        let total = fs_distance(&a, &b).unwrap();
        let ts = [0.0, 0.25, 0.5, 0.75, 1.0];
        let pts: Vec<_> = ts
            .iter()
            .map(|&t| geodesic_interpolate(&a, &b, t).unwrap())
            .collect();
        let sum: f64 = pts
            .windows(2)
            .map(|w| fs_distance(&w[0], &w[1]).unwrap())
            .sum();
        assert!((sum - total).abs() < 1e-10);
        for (t, p) in ts.iter().zip(&pts) {
            assert!((fs_distance(&a, p).unwrap() - t * total).abs() < 1e-10);
        }
    }

    #[test]
    fn interpolation_errors() {
        let a = e0();
        let same = a.scaled(Complex64::new(0.0, 2.0)).unwrap();
        assert!(matches!(
            geodesic_interpolate(&a, &same, 0.5),
            Err(GeomError::DegenerateGeodesic(_))
        ));
        assert!(matches!(
            geodesic_interpolate(&a, &e1(), 1.5),
            Err(GeomError::Domain(_))
        ));
    }
}
