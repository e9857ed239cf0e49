//! Browser bindings for the interactive demo in `www/`.
//!
//! Three operations are exposed: solving a geodesic between two points of
//! the stereographic plane, the geometric phase of a loop on the Bloch
//! sphere, and the chart coordinates of a point of the circle.

use wasm_bindgen::prelude::*;

use raysphere::atlas::{angular_atlas, four_chart_atlas, locate};
use raysphere::complex_coords::{bloch_state, inverse_stereographic, SpherePoint};
use raysphere::geodesic_opt::{
    analytic_geodesic, analytic_length, discrete_length, max_arc_deviation, minimize_geodesic,
    PlanarCurve, SolverConfig,
};
use raysphere::phase::{holonomy_check, pancharatnam_phase, solid_angle};
use raysphere::{ClosedLoop, ComplexPoint, GeomError};

fn message(e: GeomError) -> String {
    format!("{}: {e}", e.kind())
}

fn flatten(curve: &PlanarCurve) -> Vec<f64> {
    curve.embedded().iter().flat_map(|p| p.coords()).collect()
}

#[wasm_bindgen]
pub struct GeodesicView {
    numeric: Vec<f64>,
    analytic: Vec<f64>,
    length_numeric: f64,
    length_analytic: f64,
    deviation: f64,
    iterations: usize,
}

#[wasm_bindgen]
impl GeodesicView {
    /// Solver curve on the sphere as `[n1, n2, n3, n1, ...]`.
    #[wasm_bindgen(getter)]
    pub fn numeric(&self) -> Vec<f64> {
        self.numeric.clone()
    }

    /// Exact great-circle arc, same layout.
    #[wasm_bindgen(getter)]
    pub fn analytic(&self) -> Vec<f64> {
        self.analytic.clone()
    }

    #[wasm_bindgen(getter)]
    pub fn length_numeric(&self) -> f64 {
        self.length_numeric
    }

    #[wasm_bindgen(getter)]
    pub fn length_analytic(&self) -> f64 {
        self.length_analytic
    }

    #[wasm_bindgen(getter)]
    pub fn deviation(&self) -> f64 {
        self.deviation
    }

    #[wasm_bindgen(getter)]
    pub fn iterations(&self) -> usize {
        self.iterations
    }
}

/// Minimizes the discrete energy between `(ax, ay)` and `(bx, by)` in the
/// stereographic plane and returns it next to the analytic arc.
#[wasm_bindgen]
pub fn geodesic(ax: f64, ay: f64, bx: f64, by: f64, points: usize) -> Result<GeodesicView, String> {
    let (a, b) = (ComplexPoint::new(ax, ay), ComplexPoint::new(bx, by));
    let cfg = SolverConfig {
        n_points: points,
        ..SolverConfig::default()
    };
    let sol = minimize_geodesic(a, b, &cfg).map_err(message)?;
    let exact = analytic_geodesic(a, b, points).map_err(message)?;
    Ok(GeodesicView {
        numeric: flatten(&sol.curve),
        analytic: flatten(&exact),
        length_numeric: discrete_length(&sol.curve),
        length_analytic: analytic_length(a, b),
        deviation: max_arc_deviation(&sol.curve),
        iterations: sol.iterations,
    })
}

/// Point of the plane that projects to the sphere point `(n1, n2, n3)`.
#[wasm_bindgen]
pub fn sphere_to_plane(n1: f64, n2: f64, n3: f64) -> Result<Vec<f64>, String> {
    let p = SpherePoint::from_direction([n1, n2, n3]).map_err(message)?;
    let z = raysphere::complex_coords::stereographic(p).map_err(message)?;
    Ok(vec![z.z.re, z.z.im])
}

/// Sphere point above `(x, y)`.
#[wasm_bindgen]
pub fn plane_to_sphere(x: f64, y: f64) -> Vec<f64> {
    inverse_stereographic(ComplexPoint::new(x, y))
        .coords()
        .to_vec()
}

#[wasm_bindgen]
pub struct LoopView {
    phase: f64,
    solid_angle: f64,
    holonomy_residual: f64,
}

#[wasm_bindgen]
impl LoopView {
    #[wasm_bindgen(getter)]
    pub fn phase(&self) -> f64 {
        self.phase
    }

    #[wasm_bindgen(getter)]
    pub fn solid_angle(&self) -> f64 {
        self.solid_angle
    }

    #[wasm_bindgen(getter)]
    pub fn holonomy_residual(&self) -> f64 {
        self.holonomy_residual
    }
}

/// Phase and solid angle of the loop through Bloch directions given as
/// `[x0, y0, z0, x1, y1, z1, ...]` (at least three vertices).
#[wasm_bindgen]
pub fn loop_phase(directions: &[f64]) -> Result<LoopView, String> {
    if !directions.len().is_multiple_of(3) {
        return Err("directions must come in triples".into());
    }
    let states = directions
        .chunks_exact(3)
        .map(|c| SpherePoint::from_direction([c[0], c[1], c[2]]).map(bloch_state))
        .collect::<Result<Vec<_>, _>>()
        .map_err(message)?;
    let lp = ClosedLoop::new(states).map_err(message)?;
    Ok(LoopView {
        phase: pancharatnam_phase(&lp),
        solid_angle: solid_angle(&lp).map_err(message)?,
        holonomy_residual: holonomy_check(&lp).map_err(message)?,
    })
}

#[wasm_bindgen]
pub struct ChartView {
    x: f64,
    y: f64,
    names: Vec<String>,
    coordinates: Vec<f64>,
}

#[wasm_bindgen]
impl ChartView {
    #[wasm_bindgen(getter)]
    pub fn x(&self) -> f64 {
        self.x
    }

    #[wasm_bindgen(getter)]
    pub fn y(&self) -> f64 {
        self.y
    }

    #[wasm_bindgen(getter)]
    pub fn count(&self) -> usize {
        self.names.len()
    }

    pub fn name(&self, i: usize) -> Option<String> {
        self.names.get(i).cloned()
    }

    pub fn coordinate(&self, i: usize) -> Option<f64> {
        self.coordinates.get(i).copied()
    }
}

/// Coordinates of the circle point at `angle` in every chart of the
/// `"four-chart"` or `"angular"` atlas that contains it.
#[wasm_bindgen]
pub fn chart_coordinates(atlas: &str, angle: f64) -> Result<ChartView, String> {
    let atlas = match atlas {
        "four-chart" => four_chart_atlas(),
        "angular" => angular_atlas(),
        other => return Err(format!("unknown atlas {other:?}")),
    };
    let p = atlas.point_at(angle);
    let found = locate(&atlas, p).map_err(message)?;
    Ok(ChartView {
        x: p.x,
        y: p.y,
        names: found.iter().map(|c| c.chart.clone()).collect(),
        coordinates: found.iter().map(|c| c.coordinate).collect(),
    })
}
