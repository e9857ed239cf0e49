//! Geometric phase of closed loops in ray space.
//!
//! For a closed chain of states `v_0, …, v_{m−1}` the Bargmann product
//! `⟨v_0|v_1⟩⟨v_1|v_2⟩⋯⟨v_{m−1}|v_0⟩` does not depend on the phase or norm
//! chosen for any vertex. Its argument is the Pancharatnam phase
//! `γ = −arg ∏ ⟨v_k|v_{k+1}⟩` of the geodesic polygon through the vertices.
//! For qubits this equals minus half the solid angle the polygon encloses
//! on the Bloch sphere, which [`solid_angle`] computes independently.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::complex_coords::{bloch_map, cross3, dot3, great_circle_angle, SpherePoint};
use crate::error::{GeomError, Result};
use crate::hilbert::{inner_product, normalize, StateVector};

/// Consecutive vertices with `|⟨v̂_k|v̂_{k+1}⟩|` at or below this value are
/// rejected.
pub const ORTHOGONAL_TOL: f64 = 1e-12;

/// Successive Bloch images with `1 + n_k · n_{k+1}` below this value are
/// treated as antipodal by [`solid_angle`].
pub const ANTIPODAL_TOL: f64 = 1e-12;

/// A closed polygon of at least three states; the last vertex connects back
/// to the first.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<StateVector>", into = "Vec<StateVector>")]
pub struct ClosedLoop {
    vertices: Vec<StateVector>,
}

impl ClosedLoop {
    pub fn new(vertices: Vec<StateVector>) -> Result<Self> {
        let m = vertices.len();
        if m < 3 {
            return Err(GeomError::Domain(format!(
                "a loop needs at least 3 vertices, got {m}"
            )));
        }
        let dim = vertices[0].dim();
        if let Some(v) = vertices.iter().find(|v| v.dim() != dim) {
            return Err(GeomError::Dimension {
                expected: dim,
                found: v.dim(),
            });
        }
        let unit: Vec<StateVector> = vertices.iter().map(normalize).collect();
        for k in 0..m {
            let next = (k + 1) % m;
            if inner_product(&unit[k], &unit[next])?.norm() <= ORTHOGONAL_TOL {
                return Err(GeomError::OrthogonalSegment { index: k, next });
            }
        }
        Ok(Self { vertices })
    }

    pub fn vertices(&self) -> &[StateVector] {
        &self.vertices
    }

    pub fn dim(&self) -> usize {
        self.vertices[0].dim()
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// The same polygon traversed backwards from the same start vertex.
    pub fn reversed(&self) -> Self {
        let mut v = self.vertices.clone();
        v[1..].reverse();
        Self { vertices: v }
    }

    /// The same polygon starting at vertex `k`.
    pub fn rotated(&self, k: usize) -> Self {
        let mut v = self.vertices.clone();
        let len = v.len();
        v.rotate_left(k % len);
        Self { vertices: v }
    }
}

impl TryFrom<Vec<StateVector>> for ClosedLoop {
    type Error = GeomError;

    fn try_from(v: Vec<StateVector>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<ClosedLoop> for Vec<StateVector> {
    fn from(l: ClosedLoop) -> Self {
        l.vertices
    }
}

/// Principal value in `(−π, π]`.
pub fn wrap_angle(x: f64) -> f64 {
    let two_pi = 2.0 * PI;
    let mut y = x - two_pi * ((x + PI) / two_pi).floor();
    if y <= -PI {
        y += two_pi;
    }
    if y > PI {
        y -= two_pi;
    }
    y
}

/// Bargmann invariant `∏ ⟨v_k|v_{k+1}⟩` with every factor reduced to unit
/// modulus.
pub fn bargmann_phase_factor(lp: &ClosedLoop) -> Complex64 {
    let m = lp.vertices.len();
    let mut acc = Complex64::new(1.0, 0.0);
    for k in 0..m {
        let ov = inner_product(&lp.vertices[k], &lp.vertices[(k + 1) % m])
            .expect("dimensions checked at construction");
        acc *= ov / ov.norm();
        acc /= acc.norm();
    }
    acc
}

/// `γ = −arg ∏ ⟨v_k|v_{k+1}⟩` in `(−π, π]`.
pub fn pancharatnam_phase(lp: &ClosedLoop) -> f64 {
    wrap_angle(-bargmann_phase_factor(lp).arg())
}

/// Spherical excess of the geodesic triangle `a, b, c` by L'Huilier's
/// formula (unsigned).
pub fn spherical_excess(a: SpherePoint, b: SpherePoint, c: SpherePoint) -> f64 {
    let sa = great_circle_angle(b, c);
    let sb = great_circle_angle(c, a);
    let sc = great_circle_angle(a, b);
    let s = 0.5 * (sa + sb + sc);
    let t = (0.5 * s).tan()
        * (0.5 * (s - sa)).max(0.0).tan()
        * (0.5 * (s - sb)).max(0.0).tan()
        * (0.5 * (s - sc)).max(0.0).tan();
    4.0 * t.max(0.0).sqrt().atan()
}

/// Signed solid angle enclosed by the Bloch images of a qubit loop.
///
/// The polygon is fanned from vertex 0; each triangle contributes its
/// L'Huilier excess with the sign of `−n_0 · (n_i × n_{i+1})`. The minus
/// sign orients the sphere as seen with `(1, 0)` at the south pole, so that
/// the phase equals `−Ω/2`.
pub fn solid_angle(lp: &ClosedLoop) -> Result<f64> {
    if lp.dim() != 2 {
        return Err(GeomError::Dimension {
            expected: 2,
            found: lp.dim(),
        });
    }
    let pts = lp
        .vertices
        .iter()
        .map(bloch_map)
        .collect::<Result<Vec<_>>>()?;
    let m = pts.len();
    for k in 0..m {
        if 1.0 + pts[k].dot(&pts[(k + 1) % m]) < ANTIPODAL_TOL {
            return Err(GeomError::DegenerateGeodesic(
                "successive Bloch points are antipodal",
            ));
        }
    }
    let n0 = pts[0];
    let mut total = 0.0;
    for i in 1..m - 1 {
        let (a, b) = (pts[i], pts[i + 1]);
        let triple = dot3(&n0.coords(), &cross3(&a.coords(), &b.coords()));
        let excess = spherical_excess(n0, a, b);
        if triple != 0.0 {
            total -= triple.signum() * excess;
        }
    }
    Ok(total)
}

/// `|γ + Ω/2|` reduced modulo `2π`.
pub fn holonomy_check(lp: &ClosedLoop) -> Result<f64> {
    let omega = solid_angle(lp)?;
    Ok(wrap_angle(pancharatnam_phase(lp) + 0.5 * omega).abs())
}
