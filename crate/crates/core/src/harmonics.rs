//! The `m = ±1` harmonics and their circular level sets.
//!
//! `Ψ₁,₁ = −c (x + iy)/r` and `Ψ₁,₋₁ = c (x − iy)/r`. Since
//! `|Ψ₁,₁|² = c² (x² + y²)/r²`, the level set `Ψ*Ψ = k²` at fixed `r` is the
//! circle `x² + y² = R²` with `R = k r / c`. The default coefficient is the
//! literal `3/(8π)`; the normalized spherical harmonic uses `√(3/(8π))`,
//! available through [`LocusSpec::with_coefficient`].

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::atlas::{scaled_four_chart_atlas, Atlas};
use crate::complex_coords::PlanePoint;
use crate::error::{GeomError, Result};

pub const DEFAULT_COEFFICIENT: f64 = 3.0 / (8.0 * PI);

fn check_positive(name: &str, v: f64) -> Result<()> {
    if v.is_finite() && v > 0.0 {
        Ok(())
    } else {
        Err(GeomError::Domain(format!(
            "{name} must be finite and positive, got {v}"
        )))
    }
}

/// `Ψ₁,₁(x, y; r) = −c (x + iy)/r`.
pub fn psi_1_1(p: PlanePoint, r: f64, coeff: f64) -> Result<Complex64> {
    check_positive("r", r)?;
    Ok(-coeff * Complex64::new(p.x, p.y) / r)
}

/// `Ψ₁,₋₁(x, y; r) = c (x − iy)/r`, equal to `−conj(Ψ₁,₁)`.
pub fn psi_1_m1(p: PlanePoint, r: f64, coeff: f64) -> Result<Complex64> {
    check_positive("r", r)?;
    Ok(coeff * Complex64::new(p.x, -p.y) / r)
}

/// Level `k`, radial coordinate `r` and prefactor `c` of a locus.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LocusSpec {
    k: f64,
    r: f64,
    coeff: f64,
}

impl LocusSpec {
    pub fn new(k: f64, r: f64) -> Result<Self> {
        Self::with_coefficient(k, r, DEFAULT_COEFFICIENT)
    }

    pub fn with_coefficient(k: f64, r: f64, coeff: f64) -> Result<Self> {
        check_positive("k", k)?;
        check_positive("r", r)?;
        check_positive("coefficient", coeff)?;
        Ok(Self { k, r, coeff })
    }

    pub fn k(&self) -> f64 {
        self.k
    }

    pub fn r(&self) -> f64 {
        self.r
    }

    pub fn coefficient(&self) -> f64 {
        self.coeff
    }

    /// `|Ψ₁,₁|²` at `p` for this spec's `r` and `c`.
    pub fn density(&self, p: PlanePoint) -> f64 {
        psi_1_1(p, self.r, self.coeff)
            .expect("r validated at construction")
            .norm_sqr()
    }
}

/// Radius `R = k r / c` of the circle on which `Ψ*Ψ = k²`.
pub fn level_set_radius(spec: &LocusSpec) -> f64 {
    spec.k * spec.r / spec.coeff
}

/// Four-chart atlas on the locus circle of radius [`level_set_radius`].
pub fn locus_as_manifold(spec: &LocusSpec) -> Atlas {
    scaled_four_chart_atlas(level_set_radius(spec))
}

/// One sampled point of the locus.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LocusSample {
    pub angle: f64,
    pub x: f64,
    pub y: f64,
    pub psi: Complex64,
    pub density: f64,
}

/// `n` equally spaced points of the locus circle.
pub fn sample_locus(spec: &LocusSpec, n: usize) -> Vec<LocusSample> {
    let big_r = level_set_radius(spec);
    (0..n)
        .map(|k| {
            let angle = 2.0 * PI * k as f64 / n as f64;
            let p = PlanePoint::new(big_r * angle.cos(), big_r * angle.sin());
            let psi = psi_1_1(p, spec.r, spec.coeff).expect("r validated at construction");
            LocusSample {
                angle,
                x: p.x,
                y: p.y,
                psi,
                density: psi.norm_sqr(),
            }
        })
        .collect()
}

/// Largest `|Ψ*Ψ − k²|` over `n` sampled locus points.
pub fn max_level_residual(spec: &LocusSpec, n: usize) -> f64 {
    let target = spec.k * spec.k;
    sample_locus(spec, n)
        .iter()
        .map(|s| (s.density - target).abs())
        .fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::atlas::{locate, verify_coverage, verify_homeomorphism};

    #[test]
    fn psi_examples() {
        let c = DEFAULT_COEFFICIENT;
        assert_eq!(
            psi_1_1(PlanePoint::new(0.0, 0.0), 2.0, c).unwrap().norm(),
            0.0
        );
        assert_eq!(
            psi_1_1(PlanePoint::new(1.0, 0.0), 1.0, c).unwrap(),
            Complex64::new(-c, 0.0)
        );
        let m = psi_1_m1(PlanePoint::new(1.0, 0.0), 1.0, c).unwrap();
        assert_eq!(m, Complex64::new(c, 0.0));
        assert_eq!(
            m,
            -psi_1_1(PlanePoint::new(1.0, 0.0), 1.0, c).unwrap().conj()
        );
        assert!(matches!(
            psi_1_1(PlanePoint::new(1.0, 0.0), 0.0, c),
            Err(GeomError::Domain(_))
        ));
        assert!(psi_1_m1(PlanePoint::new(1.0, 0.0), -1.0, c).is_err());
    }

    #[test]
    fn spec_validation() {
        assert!(LocusSpec::new(0.0, 1.0).is_err());
        assert!(LocusSpec::new(1.0, f64::INFINITY).is_err());
        assert!(LocusSpec::with_coefficient(1.0, 1.0, -0.1).is_err());
    }

    #[test]
    fn radius_examples() {
        let c = DEFAULT_COEFFICIENT;
        assert_eq!(level_set_radius(&LocusSpec::new(c, 1.0).unwrap()), 1.0);
        assert_eq!(level_set_radius(&LocusSpec::new(c, 2.0).unwrap()), 2.0);
        let s = LocusSpec::with_coefficient(0.3, 1.5, 0.5).unwrap();
        assert!((level_set_radius(&s) - 0.9).abs() < 1e-15);
    }

    #[test]
    fn locus_lies_on_level_set() {
        let spec = LocusSpec::new(0.2, 1.3).unwrap();
        assert!(max_level_residual(&spec, 1000) <= 1e-12);
        let standard = LocusSpec::with_coefficient(0.2, 1.3, DEFAULT_COEFFICIENT.sqrt()).unwrap();
        assert!(max_level_residual(&standard, 1000) <= 1e-12);
    }

    #[test]
    fn locus_manifold() {
        let unit = locus_as_manifold(&LocusSpec::new(DEFAULT_COEFFICIENT, 1.0).unwrap());
        assert_eq!(unit.radius(), 1.0);
        assert_eq!(unit.charts().len(), 4);

        let spec = LocusSpec::with_coefficient(2.5, 1.0, 1.0).unwrap();
        let atlas = locus_as_manifold(&spec);
        for chart in atlas.charts() {
            assert_eq!(chart.codomain(), (-2.5, 2.5));
            assert!(verify_homeomorphism(chart, 1000).passes(1e-12));
        }
        assert!(verify_coverage(&atlas, 1000).is_covered());
        let found = locate(&atlas, PlanePoint::new(0.0, 2.5)).unwrap();
        assert_eq!(found.len(), 1);
        assert_eq!((found[0].chart.as_str(), found[0].coordinate), ("U1", 0.0));
    }
}
