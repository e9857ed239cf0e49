//! Complex plane coordinates, the sphere metric, and the Bloch map.
//!
//! A plane point `(x, y)` is relabelled by `Z = x + iy`, `Z̄ = x − iy`. In
//! these coordinates the flat metric reads `dZ dZ̄` and the round unit
//! sphere, seen through stereographic projection from the north pole, reads
//! `4 dZ dZ̄ / (1 + |Z|²)²`.
//!
//! Orientation: the basis state `(1, 0)` maps to the south pole, so the
//! stereographic coordinate of a qubit `(α, β)` is `Z = β/α` and the
//! excluded north pole corresponds to `α = 0`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{GeomError, Result};
use crate::fubini_study::fs_distance;
use crate::hilbert::{normalize, StateVector};

/// Inputs within this embedded distance of the north pole are rejected by
/// [`stereographic`].
pub const POLE_TOL: f64 = 1e-12;

/// Central-difference step used by [`sphere_pushforward_sq`].
pub const FD_STEP: f64 = 1e-6;

const UNIT_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PlanePoint {
    pub x: f64,
    pub y: f64,
}

impl PlanePoint {
    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    pub fn norm_sqr(&self) -> f64 {
        self.x * self.x + self.y * self.y
    }

    pub fn distance(&self, other: &PlanePoint) -> f64 {
        (self.x - other.x).hypot(self.y - other.y)
    }
}

/// The coordinate `Z`; its conjugate `Z̄` is implied.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ComplexPoint {
    pub z: Complex64,
}

impl ComplexPoint {
    pub const fn new(re: f64, im: f64) -> Self {
        Self {
            z: Complex64::new(re, im),
        }
    }

    pub fn conj(&self) -> Complex64 {
        self.z.conj()
    }

    /// `Z Z̄ = x² + y² = r²`.
    pub fn modulus_sqr(&self) -> f64 {
        (self.z * self.z.conj()).re
    }
}

impl From<Complex64> for ComplexPoint {
    fn from(z: Complex64) -> Self {
        Self { z }
    }
}

/// A point on the unit sphere in `R³`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpherePoint {
    n: [f64; 3],
}

impl SpherePoint {
    /// Accepts `n` if `| |n| − 1 | ≤ 1e-12`.
    pub fn new(n: [f64; 3]) -> Result<Self> {
        if n.iter().any(|c| !c.is_finite()) {
            return Err(GeomError::NonFinite);
        }
        let len = norm3(&n);
        if (len - 1.0).abs() > UNIT_TOL {
            return Err(GeomError::Domain(format!("|n| = {len} is not 1")));
        }
        Ok(Self { n })
    }

    /// Rescales a nonzero vector onto the sphere.
    pub fn from_direction(v: [f64; 3]) -> Result<Self> {
        let len = norm3(&v);
        if !(len.is_finite() && len > 0.0) {
            return Err(GeomError::Domain(
                "direction must be finite and nonzero".into(),
            ));
        }
        Ok(Self {
            n: [v[0] / len, v[1] / len, v[2] / len],
        })
    }

    pub const NORTH: SpherePoint = SpherePoint { n: [0.0, 0.0, 1.0] };
    pub const SOUTH: SpherePoint = SpherePoint {
        n: [0.0, 0.0, -1.0],
    };

    pub fn coords(&self) -> [f64; 3] {
        self.n
    }

    pub fn dot(&self, other: &SpherePoint) -> f64 {
        dot3(&self.n, &other.n)
    }

    pub fn distance(&self, other: &SpherePoint) -> f64 {
        let d = [
            self.n[0] - other.n[0],
            self.n[1] - other.n[1],
            self.n[2] - other.n[2],
        ];
        norm3(&d)
    }
}

pub(crate) fn dot3(a: &[f64; 3], b: &[f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

pub(crate) fn cross3(a: &[f64; 3], b: &[f64; 3]) -> [f64; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

pub(crate) fn norm3(a: &[f64; 3]) -> f64 {
    dot3(a, a).sqrt()
}

pub fn complexify(p: PlanePoint) -> ComplexPoint {
    ComplexPoint::new(p.x, p.y)
}

pub fn realify(z: ComplexPoint) -> PlanePoint {
    PlanePoint::new(z.z.re, z.z.im)
}

/// Jacobian matrix of `(x, y) → (Z, Z̄)`: rows are `∂Z` and `∂Z̄`.
pub fn jacobian() -> [[Complex64; 2]; 2] {
    let i = Complex64::i();
    let one = Complex64::new(1.0, 0.0);
    [[one, i], [one, -i]]
}

/// Determinant of [`jacobian`], `−2i`. Nonzero, so the coordinate change is
/// regular.
pub fn jacobian_det() -> Complex64 {
    let j = jacobian();
    j[0][0] * j[1][1] - j[0][1] * j[1][0]
}

/// `dZ dZ̄` for the displacement `(dx, dy)`.
pub fn dz_dzbar(dx: f64, dy: f64) -> f64 {
    let dz = Complex64::new(dx, dy);
    (dz * dz.conj()).re
}

/// Flat metric `dx² + dy²`. The base point does not enter.
pub fn euclidean_metric_sq(_p: PlanePoint, dp: (f64, f64)) -> f64 {
    dp.0 * dp.0 + dp.1 * dp.1
}

/// Conformal factor `4 / (1 + |Z|²)²` of the sphere metric.
pub fn conformal_factor(at: ComplexPoint) -> f64 {
    let s = 1.0 + at.z.norm_sqr();
    4.0 / (s * s)
}

/// `4 dZ dZ̄ / (1 + |Z|²)²`.
pub fn sphere_metric_sq(at: ComplexPoint, dz: Complex64) -> f64 {
    conformal_factor(at) * (dz * dz.conj()).re
}

/// Maps the plane onto the unit sphere minus its north pole.
pub fn inverse_stereographic(z: ComplexPoint) -> SpherePoint {
    let r2 = z.z.norm_sqr();
    let s = 1.0 + r2;
    SpherePoint {
        n: [2.0 * z.z.re / s, 2.0 * z.z.im / s, (r2 - 1.0) / s],
    }
}

/// Stereographic coordinate `Z = (n₁ + i n₂)/(1 − n₃)` from the north
/// pole.
///
/// In the northern hemisphere the equivalent form
/// `(n₁ + i n₂)(1 + n₃)/(n₁² + n₂²)` is used, avoiding the cancellation in
/// `1 − n₃`.
pub fn stereographic(n: SpherePoint) -> Result<ComplexPoint> {
    let [x, y, z] = n.n;
    if n.distance(&SpherePoint::NORTH) <= POLE_TOL {
        return Err(GeomError::PoleSingularity);
    }
    let w = Complex64::new(x, y);
    let value = if z > 0.0 {
        w * (1.0 + z) / (x * x + y * y)
    } else {
        w / (1.0 - z)
    };
    Ok(ComplexPoint { z: value })
}

fn check_qubit(s: &StateVector) -> Result<()> {
    if s.dim() != 2 {
        return Err(GeomError::Dimension {
            expected: 2,
            found: s.dim(),
        });
    }
    Ok(())
}

/// Bloch vector `(2 Re ᾱβ, 2 Im ᾱβ, |β|² − |α|²)` of a normalized qubit.
///
/// Constant on rays: all nonzero multiples of a state share one image.
pub fn bloch_map(s: &StateVector) -> Result<SpherePoint> {
    check_qubit(s)?;
    let u = normalize(s);
    let (alpha, beta) = (u.amplitudes()[0], u.amplitudes()[1]);
    let cross = alpha.conj() * beta;
    let v = [
        2.0 * cross.re,
        2.0 * cross.im,
        beta.norm_sqr() - alpha.norm_sqr(),
    ];
    // normalization rounding can leave |v| a few ulps away from 1
    SpherePoint::from_direction(v)
}

/// A unit qubit whose Bloch vector is `n`; one section of the Hopf map.
///
/// The larger of the two amplitudes is chosen real and positive.
pub fn bloch_state(n: SpherePoint) -> StateVector {
    let [x, y, z] = n.n;
    let w = Complex64::new(x, y) / 2.0;
    let amps = if z <= 0.0 {
        let alpha = ((1.0 - z) / 2.0).sqrt();
        vec![Complex64::new(alpha, 0.0), w / alpha]
    } else {
        let beta = ((1.0 + z) / 2.0).sqrt();
        vec![w.conj() / beta, Complex64::new(beta, 0.0)]
    };
    normalize(&StateVector::from_unchecked(amps))
}

/// Angle between two points on the unit sphere, `arccos(n_a · n_b)`,
/// evaluated as `atan2(|n_a × n_b|, n_a · n_b)`.
pub fn great_circle_angle(a: SpherePoint, b: SpherePoint) -> f64 {
    norm3(&cross3(&a.n, &b.n)).atan2(a.dot(&b))
}

/// `|fs_distance(a, b) − angle(bloch(a), bloch(b))|`; vanishes when the
/// Fubini-Study metric on `CP¹` is the unit-sphere metric.
pub fn fs_vs_sphere_consistency(a: &StateVector, b: &StateVector) -> Result<f64> {
    let na = bloch_map(a)?;
    let nb = bloch_map(b)?;
    Ok((fs_distance(a, b)? - great_circle_angle(na, nb)).abs())
}

/// Squared Euclidean length of the pushforward of `dz` through
/// [`inverse_stereographic`], by central differences with step `h`.
pub fn sphere_pushforward_sq(at: ComplexPoint, dz: Complex64, h: f64) -> f64 {
    let plus = inverse_stereographic(ComplexPoint { z: at.z + dz * h }).coords();
    let minus = inverse_stereographic(ComplexPoint { z: at.z - dz * h }).coords();
    let d = [
        (plus[0] - minus[0]) / (2.0 * h),
        (plus[1] - minus[1]) / (2.0 * h),
        (plus[2] - minus[2]) / (2.0 * h),
    ];
    dot3(&d, &d)
}

/// Residuals of the two metric identities at one sample.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MetricResiduals {
    /// `|dx² + dy² − dZ dZ̄|`.
    pub euclid: f64,
    /// Relative gap between the sphere metric and the finite-difference
    /// pushforward of `dZ`.
    pub sphere: f64,
}

pub fn metric_residuals(p: PlanePoint, dp: (f64, f64)) -> MetricResiduals {
    let euclid = (euclidean_metric_sq(p, dp) - dz_dzbar(dp.0, dp.1)).abs();
    let at = complexify(p);
    let dz = Complex64::new(dp.0, dp.1);
    let exact = sphere_metric_sq(at, dz);
    let fd = sphere_pushforward_sq(at, dz, FD_STEP);
    let sphere = if exact > 0.0 {
        (fd - exact).abs() / exact
    } else {
        fd.abs()
    };
    MetricResiduals { euclid, sphere }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_1_SQRT_2, PI};

    fn sv(pairs: &[[f64; 2]]) -> StateVector {
        StateVector::from_pairs(pairs).unwrap()
    }

    #[test]
    fn complexify_examples() {
        assert_eq!(
            complexify(PlanePoint::new(0.0, 0.0)).z,
            Complex64::new(0.0, 0.0)
        );
        assert_eq!(
            complexify(PlanePoint::new(1.0, 2.0)).z,
            Complex64::new(1.0, 2.0)
        );
        let z = complexify(PlanePoint::new(3.0, -4.0));
        assert_eq!(z.modulus_sqr(), 25.0);
        assert_eq!(realify(z), PlanePoint::new(3.0, -4.0));
    }

    #[test]
    fn jacobian_is_regular() {
        let d = jacobian_det();
        assert_eq!(d, Complex64::new(0.0, -2.0));
        assert_eq!(d.norm(), 2.0);
    }

    #[test]
    fn metric_examples() {
        let o = PlanePoint::new(0.0, 0.0);
        assert_eq!(euclidean_metric_sq(o, (0.0, 0.0)), 0.0);
        assert_eq!(euclidean_metric_sq(o, (1.0, 0.0)), 1.0);
        assert_eq!(dz_dzbar(1.0, 0.0), 1.0);
        assert_eq!(euclidean_metric_sq(o, (3.0, 4.0)), 25.0);

        let one = Complex64::new(1.0, 0.0);
        assert_eq!(sphere_metric_sq(ComplexPoint::new(0.0, 0.0), one), 4.0);
        assert_eq!(sphere_metric_sq(ComplexPoint::new(0.0, 1.0), one), 1.0);
        assert_eq!(
            sphere_metric_sq(ComplexPoint::new(0.3, 1.0), Complex64::new(0.0, 0.0)),
            0.0
        );
    }

    #[test]
    fn stereographic_examples() {
        let s = inverse_stereographic(ComplexPoint::new(0.0, 0.0));
        assert_eq!(s.coords(), [0.0, 0.0, -1.0]);
        let eq = inverse_stereographic(ComplexPoint::new(0.6, 0.8));
        assert!(eq.coords()[2].abs() < 1e-16);
        assert_eq!(
            inverse_stereographic(ComplexPoint::new(1.0, 0.0)).coords(),
            [1.0, 0.0, 0.0]
        );

        assert_eq!(
            stereographic(SpherePoint::SOUTH).unwrap().z,
            Complex64::new(0.0, 0.0)
        );
        let x = SpherePoint::new([1.0, 0.0, 0.0]).unwrap();
        assert_eq!(stereographic(x).unwrap().z, Complex64::new(1.0, 0.0));
        assert_eq!(
            stereographic(SpherePoint::NORTH),
            Err(GeomError::PoleSingularity)
        );
        let near = SpherePoint::from_direction([1e-13, 0.0, 1.0]).unwrap();
        assert_eq!(stereographic(near), Err(GeomError::PoleSingularity));
    }

    #[test]
    fn stereographic_round_trip_far_out() {
        for &r in &[1e-3, 0.5, 1.0, 3.0, 1e3, 1e6] {
            for k in 0..12 {
                let phi = k as f64 * PI / 6.0 + 0.1;
                let z = Complex64::from_polar(r, phi);
                let back = stereographic(inverse_stereographic(z.into())).unwrap().z;
                assert!((back - z).norm() <= 1e-12 * r.max(1.0), "r = {r}");
            }
        }
    }

    #[test]
    fn sphere_point_validation() {
        assert!(SpherePoint::new([1.0, 1.0, 0.0]).is_err());
        assert!(SpherePoint::new([f64::NAN, 0.0, 0.0]).is_err());
        assert!(SpherePoint::from_direction([0.0, 0.0, 0.0]).is_err());
    }

    #[test]
    fn bloch_examples() {
        let e0 = sv(&[[1.0, 0.0], [0.0, 0.0]]);
        assert_eq!(bloch_map(&e0).unwrap().coords(), [0.0, 0.0, -1.0]);
        let plus = sv(&[[FRAC_1_SQRT_2, 0.0], [FRAC_1_SQRT_2, 0.0]]);
        let n = bloch_map(&plus).unwrap().coords();
        assert!((n[0] - 1.0).abs() < 1e-15 && n[1].abs() < 1e-15 && n[2].abs() < 1e-15);
        for k in 0..8 {
            let phi = k as f64 * 0.8;
            let v = sv(&[[phi.cos(), phi.sin()], [0.0, 0.0]]);
            assert_eq!(bloch_map(&v).unwrap().coords(), [0.0, 0.0, -1.0]);
        }
        assert!(matches!(
            bloch_map(&sv(&[[1.0, 0.0]])),
            Err(GeomError::Dimension {
                expected: 2,
                found: 1
            })
        ));
    }

    #[test]
    fn bloch_agrees_with_stereographic_coordinate() {
        let s = sv(&[[0.4, 0.3], [-0.2, 0.8]]);
        let a = s.amplitudes();
        let z = a[1] / a[0];
        let n1 = bloch_map(&s).unwrap();
        let n2 = inverse_stereographic(z.into());
        assert!(n1.distance(&n2) < 1e-15);
    }

    #[test]
    fn bloch_state_is_a_section() {
        for n in [
            [0.0, 0.0, 1.0],
            [0.0, 0.0, -1.0],
            [1.0, 0.0, 0.0],
            [0.0, -1.0, 0.0],
            [0.48, 0.6, 0.64],
            [0.48, -0.6, -0.64],
        ] {
            let p = SpherePoint::new(n).unwrap();
            let s = bloch_state(p);
            assert!(s.is_normalized(1e-15));
            assert!(bloch_map(&s).unwrap().distance(&p) < 1e-15);
        }
    }

    #[test]
    fn consistency_examples() {
        let a = sv(&[[0.6, 0.0], [0.0, 0.8]]);
        assert!(fs_vs_sphere_consistency(&a, &a).unwrap() < 1e-15);
        let e0 = sv(&[[1.0, 0.0], [0.0, 0.0]]);
        let e1 = sv(&[[0.0, 0.0], [1.0, 0.0]]);
        assert!(fs_vs_sphere_consistency(&e0, &e1).unwrap() < 1e-15);
    }

    #[test]
    fn metric_residuals_at_sample_points() {
        for (p, dp) in [
            (PlanePoint::new(0.0, 0.0), (1.0, 0.0)),
            (PlanePoint::new(2.0, -1.5), (0.3, 0.7)),
            (PlanePoint::new(-7.0, 6.0), (-1.0, 0.2)),
        ] {
            let r = metric_residuals(p, dp);
            assert!(r.euclid <= 1e-15);
            assert!(r.sphere <= 1e-6, "{r:?}");
        }
        let r = metric_residuals(PlanePoint::new(1.0, 1.0), (0.0, 0.0));
        assert_eq!(r.sphere, 0.0);
    }
}
