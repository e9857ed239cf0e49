//! Geodesics of the sphere metric by discrete energy minimization.
//!
//! A curve in the stereographic plane is discretized as points
//! `Z_0, …, Z_{n−1}` with fixed endpoints. Its discrete energy is
//!
//! ```text
//! E = Σ_k G(m_k) |Z_{k+1} − Z_k|²,   G(W) = 4 / (1 + |W|²)²,
//! ```
//!
//! with `m_k` the segment midpoint. Minimizers of `E` are equally spaced
//! discrete geodesics; on the sphere these are arcs of great circles.

use num_complex::Complex64;
use serde::Serialize;

use crate::complex_coords::{
    conformal_factor, great_circle_angle, inverse_stereographic, stereographic, ComplexPoint,
    SpherePoint,
};
use crate::error::{GeomError, Result};

/// Endpoints whose embedded images satisfy `n_a · n_b + 1 < ANTIPODAL_TOL`
/// are treated as antipodal.
pub const ANTIPODAL_TOL: f64 = 1e-6;

/// A discretized curve in the `Z` plane; the first and last points are held
/// fixed by the solver.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PlanarCurve {
    points: Vec<Complex64>,
}

impl PlanarCurve {
    pub fn new(points: Vec<Complex64>) -> Result<Self> {
        if points.len() < 3 {
            return Err(GeomError::Domain(format!(
                "a planar curve needs at least 3 points, got {}",
                points.len()
            )));
        }
        if points
            .iter()
            .any(|z| !z.re.is_finite() || !z.im.is_finite())
        {
            return Err(GeomError::NonFinite);
        }
        Ok(Self { points })
    }

    /// `n` equally spaced points on the straight chord from `a` to `b`.
    pub fn chord(a: ComplexPoint, b: ComplexPoint, n: usize) -> Result<Self> {
        let pts = (0..n)
            .map(|k| {
                let t = k as f64 / (n.max(2) - 1) as f64;
                a.z + (b.z - a.z) * t
            })
            .collect();
        Self::new(pts)
    }

    pub fn points(&self) -> &[Complex64] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn first(&self) -> ComplexPoint {
        self.points[0].into()
    }

    pub fn last(&self) -> ComplexPoint {
        self.points[self.points.len() - 1].into()
    }

    /// Images of the points on the unit sphere.
    pub fn embedded(&self) -> Vec<SpherePoint> {
        self.points
            .iter()
            .map(|&z| inverse_stereographic(z.into()))
            .collect()
    }

    fn interior_mut(&mut self) -> &mut [Complex64] {
        let n = self.points.len();
        &mut self.points[1..n - 1]
    }
}

/// How the descent direction is obtained from the energy gradient.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Preconditioner {
    /// Plain gradient. Needs `O(n²)` iterations for an `n`-point curve.
    None,
    /// Gradient multiplied by the inverse of the energy's weighted
    /// second-difference operator (a Sobolev gradient). Iteration counts
    /// are nearly independent of `n`.
    Laplacian,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SolverConfig {
    pub max_iterations: usize,
    pub step_size: f64,
    pub gradient_tolerance: f64,
    pub n_points: usize,
    pub preconditioner: Preconditioner,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self {
            max_iterations: 100_000,
            step_size: 0.1,
            gradient_tolerance: 1e-8,
            n_points: 64,
            preconditioner: Preconditioner::Laplacian,
        }
    }
}

impl SolverConfig {
    pub fn validate(&self) -> Result<()> {
        if self.max_iterations == 0 || self.n_points < 3 {
            return Err(GeomError::Domain(
                "max_iterations must be positive and n_points at least 3".into(),
            ));
        }
        if !(self.step_size > 0.0 && self.step_size.is_finite())
            || !(self.gradient_tolerance > 0.0 && self.gradient_tolerance.is_finite())
        {
            return Err(GeomError::Domain(
                "step_size and gradient_tolerance must be positive".into(),
            ));
        }
        Ok(())
    }
}

fn midpoint(a: Complex64, b: Complex64) -> ComplexPoint {
    ((a + b) * 0.5).into()
}

/// `Σ G(m_k) |Z_{k+1} − Z_k|²`.
pub fn discrete_energy(c: &PlanarCurve) -> f64 {
    c.points
        .windows(2)
        .map(|w| conformal_factor(midpoint(w[0], w[1])) * (w[1] - w[0]).norm_sqr())
        .sum()
}

/// Length of the polyline under the sphere metric,
/// `Σ sqrt(G(m_k)) |Z_{k+1} − Z_k|`.
pub fn discrete_length(c: &PlanarCurve) -> f64 {
    c.points
        .windows(2)
        .map(|w| conformal_factor(midpoint(w[0], w[1])).sqrt() * (w[1] - w[0]).norm())
        .sum()
}

/// Gradient of [`discrete_energy`] with respect to each interior point,
/// packed as `∂E/∂x + i ∂E/∂y`.
pub fn energy_gradient(c: &PlanarCurve) -> Vec<Complex64> {
    let n = c.points.len();
    let mut grad = vec![Complex64::new(0.0, 0.0); n];
    for k in 0..n - 1 {
        let (a, b) = (c.points[k], c.points[k + 1]);
        let d = b - a;
        let m = (a + b) * 0.5;
        let s = 1.0 + m.norm_sqr();
        let g = 4.0 / (s * s);
        // ∇G(m) = −16 m / s³, and ∂m/∂Z_k = ∂m/∂Z_{k+1} = 1/2
        let dg_half = m * (-8.0 / (s * s * s)) * d.norm_sqr();
        grad[k] += dg_half - d * (2.0 * g);
        grad[k + 1] += dg_half + d * (2.0 * g);
    }
    grad[1..n - 1].to_vec()
}

/// Solves `A p = g` where `A = 2 L_w` is the Hessian of
/// `Σ w_k |Z_{k+1} − Z_k|²` with frozen weights `w_k = G(m_k)`, restricted
/// to interior points. `A` is a symmetric positive definite tridiagonal
/// matrix, so the Thomas algorithm is stable.
fn laplacian_solve(c: &PlanarCurve, g: &[Complex64]) -> Vec<Complex64> {
    let w: Vec<f64> = c
        .points
        .windows(2)
        .map(|s| conformal_factor(midpoint(s[0], s[1])))
        .collect();
    let m = g.len();
    let diag = |i: usize| 2.0 * (w[i] + w[i + 1]);
    let off = |i: usize| -2.0 * w[i + 1];
    let mut c_prime = vec![0.0; m];
    let mut d_prime = vec![Complex64::new(0.0, 0.0); m];
    c_prime[0] = off(0) / diag(0);
    d_prime[0] = g[0] / diag(0);
    for i in 1..m {
        let denom = diag(i) - off(i - 1) * c_prime[i - 1];
        c_prime[i] = off(i) / denom;
        d_prime[i] = (g[i] - d_prime[i - 1] * off(i - 1)) / denom;
    }
    let mut p = d_prime;
    for i in (0..m - 1).rev() {
        let next = p[i + 1];
        p[i] -= next * c_prime[i];
    }
    p
}

fn descent_direction(c: &PlanarCurve, g: &[Complex64], pre: Preconditioner) -> Vec<Complex64> {
    match pre {
        Preconditioner::None => g.to_vec(),
        Preconditioner::Laplacian => laplacian_solve(c, g),
    }
}

fn max_norm(g: &[Complex64]) -> f64 {
    g.iter()
        .map(|z| z.re.abs().max(z.im.abs()))
        .fold(0.0, f64::max)
}

/// Result of [`minimize_geodesic`].
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GeodesicSolution {
    pub curve: PlanarCurve,
    pub iterations: usize,
    pub gradient_norm: f64,
    pub energy: f64,
}

/// Checks that `a` and `b` are distinct and not antipodal on the sphere.
fn check_endpoints(a: ComplexPoint, b: ComplexPoint) -> Result<(SpherePoint, SpherePoint)> {
    if a.z == b.z {
        return Err(GeomError::DegenerateGeodesic("endpoints coincide"));
    }
    let (na, nb) = (inverse_stereographic(a), inverse_stereographic(b));
    if na.dot(&nb) + 1.0 < ANTIPODAL_TOL {
        return Err(GeomError::DegenerateGeodesic("endpoints are antipodal"));
    }
    Ok((na, nb))
}

/// Minimizes the discrete energy of a curve from `a` to `b`.
///
/// Starts from the straight chord and runs (preconditioned) gradient
/// descent with a backtracking step: the step is halved until the energy
/// decreases and grown by 1.5 after each accepted move. Stops when the
/// max-norm of the plain energy gradient drops to `cfg.gradient_tolerance`.
pub fn minimize_geodesic(
    a: ComplexPoint,
    b: ComplexPoint,
    cfg: &SolverConfig,
) -> Result<GeodesicSolution> {
    cfg.validate()?;
    check_endpoints(a, b)?;
    let mut curve = PlanarCurve::chord(a, b, cfg.n_points)?;
    minimize_from(&mut curve, cfg).map(|(iterations, gradient_norm)| GeodesicSolution {
        energy: discrete_energy(&curve),
        curve,
        iterations,
        gradient_norm,
    })
}

/// Runs the descent in place from an arbitrary initial curve. Returns the
/// iteration count and final gradient max-norm.
pub fn minimize_from(curve: &mut PlanarCurve, cfg: &SolverConfig) -> Result<(usize, f64)> {
    cfg.validate()?;
    let mut step = cfg.step_size;
    let mut energy = discrete_energy(curve);
    let mut grad = energy_gradient(curve);
    let mut gnorm = max_norm(&grad);
    let mut dir = descent_direction(curve, &grad, cfg.preconditioner);
    let mut trial = curve.clone();
    for iteration in 0..cfg.max_iterations {
        if gnorm <= cfg.gradient_tolerance {
            return Ok((iteration, gnorm));
        }
        loop {
            for ((t, &z), d) in trial
                .interior_mut()
                .iter_mut()
                .zip(&curve.points[1..])
                .zip(&dir)
            {
                *t = z - d * step;
            }
            let e = discrete_energy(&trial);
            if e < energy {
                energy = e;
                std::mem::swap(curve, &mut trial);
                step *= 1.5;
                break;
            }
            step *= 0.5;
            if step < f64::MIN_POSITIVE {
                // no descent possible at floating-point resolution
                return Err(GeomError::Convergence {
                    iterations: iteration,
                    gradient_norm: gnorm,
                });
            }
        }
        grad = energy_gradient(curve);
        gnorm = max_norm(&grad);
        dir = descent_direction(curve, &grad, cfg.preconditioner);
    }
    if gnorm <= cfg.gradient_tolerance {
        return Ok((cfg.max_iterations, gnorm));
    }
    Err(GeomError::Convergence {
        iterations: cfg.max_iterations,
        gradient_norm: gnorm,
    })
}

/// Great-circle arc `a → b` sampled at `n` equally spaced angles
/// (spherical linear interpolation of the embedded endpoints), expressed in
/// the `Z` plane.
pub fn analytic_geodesic(a: ComplexPoint, b: ComplexPoint, n: usize) -> Result<PlanarCurve> {
    let (na, nb) = check_endpoints(a, b)?;
    let pts = slerp_points(na, nb, n)?
        .into_iter()
        .map(|p| stereographic(p).map(|z| z.z))
        .collect::<Result<Vec<_>>>()?;
    PlanarCurve::new(pts)
}

/// `n ≥ 2` points of the arc from `a` to `b` by spherical linear
/// interpolation.
pub fn slerp_points(a: SpherePoint, b: SpherePoint, n: usize) -> Result<Vec<SpherePoint>> {
    if n < 2 {
        return Err(GeomError::Domain(format!(
            "need at least 2 samples, got {n}"
        )));
    }
    let theta = great_circle_angle(a, b);
    let sin = theta.sin();
    if sin <= 0.0 {
        return Err(GeomError::DegenerateGeodesic(
            "arc endpoints coincide or are antipodal",
        ));
    }
    let (pa, pb) = (a.coords(), b.coords());
    (0..n)
        .map(|k| {
            let t = k as f64 / (n - 1) as f64;
            let wa = ((1.0 - t) * theta).sin() / sin;
            let wb = (t * theta).sin() / sin;
            SpherePoint::from_direction([
                wa * pa[0] + wb * pb[0],
                wa * pa[1] + wb * pb[1],
                wa * pa[2] + wb * pb[2],
            ])
        })
        .collect()
}

/// Analytic length `arccos(n_a · n_b)` of the geodesic between two plane
/// points.
pub fn analytic_length(a: ComplexPoint, b: ComplexPoint) -> f64 {
    great_circle_angle(inverse_stereographic(a), inverse_stereographic(b))
}

/// Embedded distance from `p` to the closed great-circle arc `a → b`.
pub fn distance_to_arc(p: SpherePoint, a: SpherePoint, b: SpherePoint) -> f64 {
    use crate::complex_coords::{cross3, dot3, norm3};
    let normal = cross3(&a.coords(), &b.coords());
    let len = norm3(&normal);
    let endpoints = p.distance(&a).min(p.distance(&b));
    if len == 0.0 {
        return endpoints;
    }
    let nrm = [normal[0] / len, normal[1] / len, normal[2] / len];
    let q = p.coords();
    let h = dot3(&q, &nrm);
    let proj = [q[0] - h * nrm[0], q[1] - h * nrm[1], q[2] - h * nrm[2]];
    let Ok(foot) = SpherePoint::from_direction(proj) else {
        return endpoints;
    };
    // the foot lies on the arc iff it is between a and b in angle
    let total = great_circle_angle(a, b);
    let on_arc = great_circle_angle(a, foot) + great_circle_angle(foot, b) <= total + 1e-12;
    if on_arc {
        p.distance(&foot)
    } else {
        endpoints
    }
}

/// Largest [`distance_to_arc`] over the embedded points of `c`.
pub fn max_arc_deviation(c: &PlanarCurve) -> f64 {
    let (a, b) = (
        inverse_stereographic(c.first()),
        inverse_stereographic(c.last()),
    );
    c.embedded()
        .into_iter()
        .map(|p| distance_to_arc(p, a, b))
        .fold(0.0, f64::max)
}

/// Largest embedded distance between the `k`-th curve point and the `k`-th
/// equally spaced point of the analytic arc.
pub fn max_slerp_deviation(c: &PlanarCurve) -> Result<f64> {
    let (a, b) = (
        inverse_stereographic(c.first()),
        inverse_stereographic(c.last()),
    );
    let reference = slerp_points(a, b, c.len())?;
    Ok(c.embedded()
        .iter()
        .zip(&reference)
        .map(|(p, q)| p.distance(q))
        .fold(0.0, f64::max))
}
