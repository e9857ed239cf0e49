//! Charts and atlases on the circle.
//!
//! A [`Chart`] pairs an open subset `U` of the circle (a predicate) with a
//! coordinate map `Φ: U → V ⊂ R` onto an open interval and its explicit
//! inverse. An [`Atlas`] is a family of charts whose domains cover the
//! circle. Two atlases are built in:
//!
//! * [`four_chart_atlas`]: the open half circles `y > 0`, `y < 0`, `x > 0`,
//!   `x < 0`, each projected onto the axis it does not cut;
//! * [`angular_atlas`]: the circle punctured at `(−1, 0)` with the angle in
//!   `(−π, π)`, and punctured at `(1, 0)` with the angle in `(0, 2π)`.
//!
//! Homeomorphism, coverage and transition properties are verified by
//! sampling.

use std::f64::consts::PI;
use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::complex_coords::PlanePoint;
use crate::error::{GeomError, Result};

/// Tolerance on `|x² + y² − R²| / R²` for a point to count as lying on the
/// circle.
pub const ON_MANIFOLD_TOL: f64 = 1e-9;

type DomainFn = dyn Fn(PlanePoint) -> bool + Send + Sync;
type ForwardFn = dyn Fn(PlanePoint) -> f64 + Send + Sync;
type InverseFn = dyn Fn(f64) -> PlanePoint + Send + Sync;

/// A coordinate chart `(U, Φ)` on a circle of radius `radius`.
#[derive(Clone)]
pub struct Chart {
    name: String,
    radius: f64,
    codomain: (f64, f64),
    domain: Arc<DomainFn>,
    forward: Arc<ForwardFn>,
    inverse: Arc<InverseFn>,
}

impl fmt::Debug for Chart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Chart")
            .field("name", &self.name)
            .field("radius", &self.radius)
            .field("codomain", &self.codomain)
            .finish_non_exhaustive()
    }
}

impl Chart {
    /// Builds a chart from user-supplied maps. `codomain` is the open
    /// interval `(lo, hi)` that `forward` maps the domain onto.
    pub fn new<D, F, I>(
        name: impl Into<String>,
        radius: f64,
        codomain: (f64, f64),
        domain: D,
        forward: F,
        inverse: I,
    ) -> Self
    where
        D: Fn(PlanePoint) -> bool + Send + Sync + 'static,
        F: Fn(PlanePoint) -> f64 + Send + Sync + 'static,
        I: Fn(f64) -> PlanePoint + Send + Sync + 'static,
    {
        Self {
            name: name.into(),
            radius,
            codomain,
            domain: Arc::new(domain),
            forward: Arc::new(forward),
            inverse: Arc::new(inverse),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    pub fn codomain(&self) -> (f64, f64) {
        self.codomain
    }

    pub fn contains(&self, p: PlanePoint) -> bool {
        (self.domain)(p)
    }

    pub fn in_codomain(&self, u: f64) -> bool {
        u > self.codomain.0 && u < self.codomain.1
    }

    /// `Φ(p)`, without checking the domain.
    pub fn forward_unchecked(&self, p: PlanePoint) -> f64 {
        (self.forward)(p)
    }

    /// `Φ⁻¹(u)`, without checking the codomain.
    pub fn inverse_unchecked(&self, u: f64) -> PlanePoint {
        (self.inverse)(u)
    }

    pub fn forward(&self, p: PlanePoint) -> Result<f64> {
        if !self.contains(p) {
            return Err(GeomError::ChartDomain(format!(
                "({}, {}) is not in {}",
                p.x, p.y, self.name
            )));
        }
        Ok((self.forward)(p))
    }

    pub fn inverse(&self, u: f64) -> Result<PlanePoint> {
        if !self.in_codomain(u) {
            return Err(GeomError::ChartDomain(format!(
                "{u} is outside ({}, {}) of {}",
                self.codomain.0, self.codomain.1, self.name
            )));
        }
        Ok((self.inverse)(u))
    }
}

/// A family of charts on a circle of radius `radius`.
#[derive(Debug, Clone)]
pub struct Atlas {
    name: String,
    radius: f64,
    charts: Vec<Chart>,
}

impl Atlas {
    pub fn new(name: impl Into<String>, radius: f64, charts: Vec<Chart>) -> Self {
        Self {
            name: name.into(),
            radius,
            charts,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    /// The circle is one-dimensional.
    pub fn manifold_dim(&self) -> usize {
        1
    }

    pub fn charts(&self) -> &[Chart] {
        &self.charts
    }

    pub fn chart(&self, name: &str) -> Result<&Chart> {
        self.charts.iter().find(|c| c.name == name).ok_or_else(|| {
            GeomError::ChartDomain(format!("no chart named {name} in {}", self.name))
        })
    }

    /// Keeps only the named charts.
    pub fn restricted(&self, names: &[&str]) -> Self {
        Self {
            name: format!("{}[{}]", self.name, names.join(",")),
            radius: self.radius,
            charts: self
                .charts
                .iter()
                .filter(|c| names.contains(&c.name.as_str()))
                .cloned()
                .collect(),
        }
    }

    pub fn on_manifold(&self, p: PlanePoint) -> bool {
        let r2 = self.radius * self.radius;
        p.x.is_finite() && p.y.is_finite() && (p.norm_sqr() - r2).abs() <= ON_MANIFOLD_TOL * r2
    }

    /// Point of the circle at angle `theta`.
    pub fn point_at(&self, theta: f64) -> PlanePoint {
        PlanePoint::new(self.radius * theta.cos(), self.radius * theta.sin())
    }
}

/// Four-chart atlas on the circle of radius `radius`, with codomains
/// `(−R, R)`.
pub fn scaled_four_chart_atlas(radius: f64) -> Atlas {
    let r = radius;
    // (R − u)(R + u) keeps accuracy near the chart ends
    let height = move |u: f64| ((r - u) * (r + u)).max(0.0).sqrt();
    let charts = vec![
        Chart::new(
            "U1",
            r,
            (-r, r),
            |p| p.y > 0.0,
            |p| p.x,
            move |u| PlanePoint::new(u, height(u)),
        ),
        Chart::new(
            "U2",
            r,
            (-r, r),
            |p| p.y < 0.0,
            |p| p.x,
            move |u| PlanePoint::new(u, -height(u)),
        ),
        Chart::new(
            "U3",
            r,
            (-r, r),
            |p| p.x > 0.0,
            |p| p.y,
            move |u| PlanePoint::new(height(u), u),
        ),
        Chart::new(
            "U4",
            r,
            (-r, r),
            |p| p.x < 0.0,
            |p| p.y,
            move |u| PlanePoint::new(-height(u), u),
        ),
    ];
    Atlas::new("four-chart", radius, charts)
}

/// Four charts on the unit circle: `U1 = {y > 0}`, `U2 = {y < 0}` with
/// `Φ = x`, and `U3 = {x > 0}`, `U4 = {x < 0}` with `Φ = y`. All codomains
/// are `(−1, 1)`.
pub fn four_chart_atlas() -> Atlas {
    scaled_four_chart_atlas(1.0)
}

/// Angle of `p` in `(−π, π]`.
fn angle_principal(p: PlanePoint) -> f64 {
    p.y.atan2(p.x)
}

/// Angle of `p` in `[0, 2π)`.
fn angle_positive(p: PlanePoint) -> f64 {
    let a = p.y.atan2(p.x);
    if a < 0.0 {
        a + 2.0 * PI
    } else {
        a
    }
}

/// Two angular charts on the unit circle: `U1 = S¹ ∖ {(−1, 0)}` with angle
/// in `(−π, π)` and `U2 = S¹ ∖ {(1, 0)}` with angle in `(0, 2π)`.
///
/// The two coordinates agree on the upper half circle and differ by exactly
/// `2π` on the lower one.
pub fn angular_atlas() -> Atlas {
    let charts = vec![
        Chart::new(
            "U1",
            1.0,
            (-PI, PI),
            |p| !(p.y == 0.0 && p.x < 0.0),
            angle_principal,
            |u| PlanePoint::new(u.cos(), u.sin()),
        ),
        Chart::new(
            "U2",
            1.0,
            (0.0, 2.0 * PI),
            |p| !(p.y == 0.0 && p.x > 0.0),
            angle_positive,
            |u| PlanePoint::new(u.cos(), u.sin()),
        ),
    ];
    Atlas::new("angular", 1.0, charts)
}

/// A local coordinate of a point in one chart.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LocalCoordinate {
    pub chart: String,
    pub coordinate: f64,
}

/// All local coordinates of `p`, one per chart whose domain contains it.
pub fn locate(atlas: &Atlas, p: PlanePoint) -> Result<Vec<LocalCoordinate>> {
    if !atlas.on_manifold(p) {
        return Err(GeomError::OffManifold { x: p.x, y: p.y });
    }
    Ok(atlas
        .charts
        .iter()
        .filter(|c| c.contains(p))
        .map(|c| LocalCoordinate {
            chart: c.name.clone(),
            coordinate: c.forward_unchecked(p),
        })
        .collect())
}

/// Evidence that a chart is a homeomorphism onto its codomain.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct HomeomorphismReport {
    pub domain_samples: usize,
    pub codomain_samples: usize,
    /// Max of `|Φ⁻¹(Φ(p)) − p|` and `|Φ(Φ⁻¹(u)) − u|` over the samples.
    pub max_roundtrip_error: f64,
    /// Codomain samples whose image escaped the chart domain.
    pub codomain_escapes: usize,
    /// Largest difference quotient `|Φ(p) − Φ(q)| / |p − q|` over
    /// neighbouring domain samples.
    pub continuity_modulus: f64,
    /// Same quotient for `Φ⁻¹` over neighbouring codomain samples.
    pub inverse_continuity_modulus: f64,
}

impl HomeomorphismReport {
    pub fn passes(&self, tol: f64) -> bool {
        self.max_roundtrip_error <= tol
            && self.codomain_escapes == 0
            && self.continuity_modulus.is_finite()
            && self.inverse_continuity_modulus.is_finite()
    }
}

/// Samples `n_samples` equally spaced angles of the circle (offset by half
/// a step so axis points are avoided) and `n_samples` equally spaced
/// coordinates in the open codomain, and checks both round trips.
pub fn verify_homeomorphism(chart: &Chart, n_samples: usize) -> HomeomorphismReport {
    let n = n_samples.max(1);
    let step = 2.0 * PI / n as f64;
    let mut max_err: f64 = 0.0;
    let mut modulus: f64 = 0.0;
    let mut domain_samples = 0;
    let mut prev: Option<(PlanePoint, f64)> = None;
    for k in 0..n {
        let theta = (k as f64 + 0.5) * step;
        let p = PlanePoint::new(chart.radius * theta.cos(), chart.radius * theta.sin());
        if !chart.contains(p) {
            prev = None;
            continue;
        }
        domain_samples += 1;
        let u = chart.forward_unchecked(p);
        max_err = max_err.max(chart.inverse_unchecked(u).distance(&p));
        if let Some((q, uq)) = prev {
            modulus = modulus.max((u - uq).abs() / p.distance(&q));
        }
        prev = Some((p, u));
    }

    let (lo, hi) = chart.codomain;
    let mut escapes = 0;
    let mut inv_modulus: f64 = 0.0;
    let mut prev: Option<(f64, PlanePoint)> = None;
    for k in 0..n {
        let u = lo + (hi - lo) * (k as f64 + 0.5) / n as f64;
        let p = chart.inverse_unchecked(u);
        if !chart.contains(p) {
            escapes += 1;
        }
        max_err = max_err.max((chart.forward_unchecked(p) - u).abs());
        if let Some((v, q)) = prev {
            inv_modulus = inv_modulus.max(p.distance(&q) / (u - v).abs());
        }
        prev = Some((u, p));
    }

    HomeomorphismReport {
        domain_samples,
        codomain_samples: n,
        max_roundtrip_error: max_err,
        codomain_escapes: escapes,
        continuity_modulus: modulus,
        inverse_continuity_modulus: inv_modulus,
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CoverageReport {
    pub samples: usize,
    pub uncovered_points: Vec<PlanePoint>,
}

impl CoverageReport {
    pub fn is_covered(&self) -> bool {
        self.uncovered_points.is_empty()
    }
}

fn coverage_sample(atlas: &Atlas, n: usize, k: usize) -> Option<PlanePoint> {
    let p = atlas.point_at(2.0 * PI * k as f64 / n as f64);
    (!atlas.charts.iter().any(|c| c.contains(p))).then_some(p)
}

/// Checks that the angles `2πk/n`, `k = 0..n`, all fall in some chart.
pub fn verify_coverage(atlas: &Atlas, n_samples: usize) -> CoverageReport {
    let n = n_samples.max(1);
    CoverageReport {
        samples: n,
        uncovered_points: (0..n)
            .filter_map(|k| coverage_sample(atlas, n, k))
            .collect(),
    }
}

/// Parallel [`verify_coverage`]; returns the same report.
#[cfg(feature = "parallel")]
pub fn verify_coverage_par(atlas: &Atlas, n_samples: usize) -> CoverageReport {
    use rayon::prelude::*;
    let n = n_samples.max(1);
    CoverageReport {
        samples: n,
        uncovered_points: (0..n)
            .into_par_iter()
            .filter_map(|k| coverage_sample(atlas, n, k))
            .collect(),
    }
}

/// Transition map `Φ_to ∘ Φ_from⁻¹` at the coordinate `u`.
pub fn transition(atlas: &Atlas, from: &str, to: &str, u: f64) -> Result<f64> {
    let src = atlas.chart(from)?;
    let dst = atlas.chart(to)?;
    let p = src.inverse(u)?;
    if !src.contains(p) {
        return Err(GeomError::ChartDomain(format!("{u} maps outside {from}")));
    }
    dst.forward(p)
}

/// Largest transition inconsistency over sampled points of the circle.
///
/// For every ordered pair of charts `(A, B)` and every sampled point `p` in
/// both domains this measures `|T_{A→B}(Φ_A(p)) − Φ_B(p)|` and the round
/// trip `|T_{B→A}(T_{A→B}(Φ_A(p))) − Φ_A(p)|`.
pub fn verify_transitions(atlas: &Atlas, n_samples: usize) -> Result<f64> {
    let n = n_samples.max(1);
    let mut worst: f64 = 0.0;
    for k in 0..n {
        let p = atlas.point_at(2.0 * PI * (k as f64 + 0.5) / n as f64);
        let inside: Vec<&Chart> = atlas.charts.iter().filter(|c| c.contains(p)).collect();
        for a in &inside {
            for b in &inside {
                let ua = a.forward_unchecked(p);
                let ub = transition(atlas, &a.name, &b.name, ua)?;
                worst = worst.max((ub - b.forward_unchecked(p)).abs());
                let back = transition(atlas, &b.name, &a.name, ub)?;
                worst = worst.max((back - ua).abs());
            }
        }
    }
    Ok(worst)
}

/// Deviation of the angular atlas transition `U2 → U1` from the rule
/// "identity on the upper half circle, subtract `2π` on the lower one".
pub fn angular_transition_rule_error(n_samples: usize) -> Result<f64> {
    let atlas = angular_atlas();
    let u2 = atlas.chart("U2")?;
    let n = n_samples.max(1);
    let mut worst: f64 = 0.0;
    for k in 0..n {
        let p = atlas.point_at(2.0 * PI * (k as f64 + 0.5) / n as f64);
        if !(u2.contains(p) && atlas.chart("U1")?.contains(p)) {
            continue;
        }
        let phi2 = u2.forward_unchecked(p);
        let phi1 = transition(&atlas, "U2", "U1", phi2)?;
        let expected = if p.y < 0.0 { phi2 - 2.0 * PI } else { phi2 };
        worst = worst.max((phi1 - expected).abs());
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_2;

    fn coords(v: &[LocalCoordinate]) -> Vec<(&str, f64)> {
        v.iter().map(|c| (c.chart.as_str(), c.coordinate)).collect()
    }

    #[test]
    fn four_chart_inverse_formula() {
        let atlas = four_chart_atlas();
        let p = atlas.chart("U1").unwrap().inverse(0.5).unwrap();
        assert_eq!(p, PlanePoint::new(0.5, 0.75_f64.sqrt()));
        assert_eq!(
            atlas.chart("U2").unwrap().inverse(0.5).unwrap().y,
            -(0.75_f64.sqrt())
        );
        assert_eq!(
            atlas.chart("U3").unwrap().inverse(0.5).unwrap().x,
            0.75_f64.sqrt()
        );
        assert_eq!(
            atlas.chart("U4").unwrap().inverse(0.5).unwrap().x,
            -(0.75_f64.sqrt())
        );
        for c in atlas.charts() {
            assert_eq!(c.codomain(), (-1.0, 1.0));
        }
        assert!(atlas.chart("U1").unwrap().inverse(1.0).is_err());
        assert!(atlas.chart("U5").is_err());
    }

    #[test]
    fn locate_examples() {
        let atlas = four_chart_atlas();
        let found = locate(&atlas, PlanePoint::new(0.6, 0.8)).unwrap();
        assert_eq!(coords(&found), vec![("U1", 0.6), ("U3", 0.8)]);
        let found = locate(&atlas, PlanePoint::new(0.0, 1.0)).unwrap();
        assert_eq!(coords(&found), vec![("U1", 0.0)]);
        let found = locate(&atlas, PlanePoint::new(1.0, 0.0)).unwrap();
        assert_eq!(coords(&found), vec![("U3", 0.0)]);
        assert!(matches!(
            locate(&atlas, PlanePoint::new(2.0, 0.0)),
            Err(GeomError::OffManifold { .. })
        ));
    }

    #[test]
    fn angular_examples() {
        let atlas = angular_atlas();
        let (u1, u2) = (atlas.chart("U1").unwrap(), atlas.chart("U2").unwrap());
        let top = PlanePoint::new(0.0, 1.0);
        assert_eq!(u1.forward(top).unwrap(), FRAC_PI_2);
        assert_eq!(u2.forward(top).unwrap(), FRAC_PI_2);
        let bottom = PlanePoint::new(0.0, -1.0);
        assert_eq!(u1.forward(bottom).unwrap(), -FRAC_PI_2);
        assert_eq!(u2.forward(bottom).unwrap(), 3.0 * FRAC_PI_2);
        assert!(matches!(
            u1.forward(PlanePoint::new(-1.0, 0.0)),
            Err(GeomError::ChartDomain(_))
        ));
        assert!(matches!(
            u2.forward(PlanePoint::new(1.0, 0.0)),
            Err(GeomError::ChartDomain(_))
        ));
    }

    #[test]
    fn transition_examples() {
        let ang = angular_atlas();
        let t = transition(&ang, "U2", "U1", 3.0 * FRAC_PI_2).unwrap();
        assert!((t + FRAC_PI_2).abs() < 1e-15);

        let four = four_chart_atlas();
        let t = transition(&four, "U1", "U3", 0.6).unwrap();
        assert!((t - 0.8).abs() < 1e-15);
        assert_eq!(transition(&four, "U1", "U1", 0.3).unwrap(), 0.3);
        // (−0.6, 0.8) is in U1 but not U3
        assert!(matches!(
            transition(&four, "U1", "U3", -0.6),
            Err(GeomError::ChartDomain(_))
        ));
    }

    #[test]
    fn homeomorphism_reports() {
        for atlas in [four_chart_atlas(), angular_atlas()] {
            for chart in atlas.charts() {
                let r = verify_homeomorphism(chart, 1000);
                assert!(r.passes(1e-12), "{} {}: {r:?}", atlas.name(), chart.name());
            }
        }
        let r = verify_homeomorphism(&four_chart_atlas().charts()[0], 2);
        assert!(r.max_roundtrip_error.is_finite());
        assert!(r.continuity_modulus.is_finite());
    }

    #[test]
    fn broken_chart_is_flagged() {
        let broken = Chart::new(
            "bad",
            1.0,
            (-1.0, 1.0),
            |p| p.y > 0.0,
            |p| p.x,
            |u| PlanePoint::new(u, -(1.0 - u * u).sqrt()),
        );
        let r = verify_homeomorphism(&broken, 1000);
        assert!(r.max_roundtrip_error > 0.5);
        assert!(r.codomain_escapes > 0);
        assert!(!r.passes(1e-12));
    }

    #[test]
    fn coverage() {
        assert!(verify_coverage(&four_chart_atlas(), 10_000).is_covered());
        assert!(verify_coverage(&angular_atlas(), 10_000).is_covered());
        // k = n/2 lands on the puncture of U1 (up to the rounding of sin π)
        assert!(verify_coverage(&angular_atlas(), 2).is_covered());

        let gap = four_chart_atlas().restricted(&["U1", "U2"]);
        let report = verify_coverage(&gap, 4);
        assert_eq!(report.uncovered_points.len(), 1);
        assert_eq!(report.uncovered_points[0], PlanePoint::new(1.0, 0.0));
    }

    #[test]
    fn angular_point_sampled_exactly_at_puncture() {
        let atlas = angular_atlas();
        let p = PlanePoint::new(-1.0, 0.0);
        let found = locate(&atlas, p).unwrap();
        assert_eq!(coords(&found), vec![("U2", PI)]);
    }

    #[test]
    fn transitions_consistent() {
        assert!(verify_transitions(&four_chart_atlas(), 1000).unwrap() <= 1e-12);
        assert!(verify_transitions(&angular_atlas(), 1000).unwrap() <= 1e-12);
        assert!(angular_transition_rule_error(1000).unwrap() <= 1e-12);
    }
}
