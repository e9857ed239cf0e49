use std::f64::consts::PI;
use std::path::Path;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::json;

use raysphere::atlas::{
    angular_atlas, angular_transition_rule_error, four_chart_atlas, locate, verify_coverage,
    verify_coverage_par, verify_homeomorphism, verify_transitions, Atlas,
};
use raysphere::complex_coords::{inverse_stereographic, metric_residuals, MetricResiduals};
use raysphere::fubini_study::{fs_distance, overlap_modulus};
use raysphere::geodesic_opt::{
    analytic_geodesic, analytic_length, discrete_length, minimize_geodesic, SolverConfig,
};
use raysphere::harmonics::{level_set_radius, locus_as_manifold, sample_locus};
use raysphere::hilbert::normalize;
use raysphere::phase::{holonomy_check, pancharatnam_phase, solid_angle};
use raysphere::{ClosedLoop, ComplexPoint, LocusSpec, PlanePoint, StateVector};

use crate::error::CliError;
use crate::output::{num, Report, Table};

pub type CmdResult = Result<Report, CliError>;

#[derive(Debug, Clone, Copy)]
pub struct Globals {
    pub seed: u64,
    pub samples: Option<usize>,
    pub parallel: bool,
}

impl Globals {
    fn samples_or(&self, default: usize) -> Result<usize, CliError> {
        match self.samples.unwrap_or(default) {
            0 => Err(CliError::Usage("--samples must be at least 1".into())),
            n => Ok(n),
        }
    }
}

/// Inline JSON if the argument looks like JSON, otherwise a file path.
fn read_json_arg(arg: &str) -> Result<String, CliError> {
    let trimmed = arg.trim_start();
    if trimmed.starts_with('[') || trimmed.starts_with('{') {
        return Ok(arg.to_owned());
    }
    std::fs::read_to_string(Path::new(arg)).map_err(|e| CliError::Io(format!("{arg}: {e}")))
}

fn parse_json<T: serde::de::DeserializeOwned>(text: &str, what: &str) -> Result<T, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::Parse(format!("{what}: {e}")))
}

fn parse_state(arg: &str) -> Result<StateVector, CliError> {
    let pairs: Vec<[f64; 2]> = parse_json(&read_json_arg(arg)?, "state vector")?;
    Ok(StateVector::from_pairs(&pairs)?)
}

pub fn parse_point(s: &str) -> Result<(f64, f64), String> {
    let (x, y) = s
        .split_once(',')
        .ok_or_else(|| format!("expected x,y but got {s:?}"))?;
    let parse = |t: &str| {
        t.trim()
            .parse::<f64>()
            .map_err(|e| format!("{t:?}: {e}"))
            .and_then(|v| {
                if v.is_finite() {
                    Ok(v)
                } else {
                    Err(format!("{t:?} is not finite"))
                }
            })
    };
    Ok((parse(x)?, parse(y)?))
}

pub fn fsdist(a: &str, b: &str) -> CmdResult {
    let (a, b) = (parse_state(a)?, parse_state(b)?);
    let distance = fs_distance(&a, &b)?;
    let overlap = overlap_modulus(&normalize(&a), &normalize(&b))?;
    Ok(Report::summary(json!({
        "distance": distance,
        "overlap_modulus": overlap,
    })))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum AtlasName {
    #[value(name = "four-chart")]
    FourChart,
    Angular,
}

impl AtlasName {
    fn build(self) -> Atlas {
        match self {
            AtlasName::FourChart => four_chart_atlas(),
            AtlasName::Angular => angular_atlas(),
        }
    }
}

pub fn atlas_check(name: AtlasName, g: &Globals) -> CmdResult {
    let n = g.samples_or(100_000)?;
    let atlas = name.build();
    let reports: Vec<_> = atlas
        .charts()
        .iter()
        .map(|c| verify_homeomorphism(c, n))
        .collect();
    let roundtrip = reports
        .iter()
        .map(|r| r.max_roundtrip_error)
        .fold(0.0, f64::max);
    let escapes: usize = reports.iter().map(|r| r.codomain_escapes).sum();
    let coverage = if g.parallel {
        verify_coverage_par(&atlas, n)
    } else {
        verify_coverage(&atlas, n)
    };
    let mut transition = verify_transitions(&atlas, n)?;
    if name == AtlasName::Angular {
        transition = transition.max(angular_transition_rule_error(n)?);
    }
    Ok(Report::summary(json!({
        "atlas": atlas.name(),
        "samples": n,
        "max_roundtrip_error": roundtrip,
        "codomain_escapes": escapes,
        "uncovered_count": coverage.uncovered_points.len(),
        "transition_max_error": transition,
    })))
}

pub fn chart(name: AtlasName, point: Option<(f64, f64)>, angle: Option<f64>) -> CmdResult {
    let atlas = name.build();
    let p = match (point, angle) {
        (Some((x, y)), None) => PlanePoint::new(x, y),
        (None, Some(theta)) => atlas.point_at(theta),
        _ => {
            return Err(CliError::Usage(
                "give exactly one of --point or --angle".into(),
            ))
        }
    };
    let coords = locate(&atlas, p)?;
    let mut table = Table::new(&["chart", "coordinate"]);
    for c in &coords {
        table.push(vec![c.chart.clone(), num(c.coordinate)]);
    }
    Ok(Report {
        summary: json!({
            "atlas": atlas.name(),
            "x": p.x,
            "y": p.y,
            "coordinates": coords,
        }),
        table: Some(table),
    })
}

pub struct GeodesicArgs {
    pub from: (f64, f64),
    pub to: (f64, f64),
    pub points: usize,
    pub solver: Solver,
    pub max_iterations: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Solver {
    Minimize,
    Analytic,
}

pub fn geodesic(args: &GeodesicArgs) -> CmdResult {
    let a = ComplexPoint::new(args.from.0, args.from.1);
    let b = ComplexPoint::new(args.to.0, args.to.1);
    let (curve, iterations) = match args.solver {
        Solver::Minimize => {
            let cfg = SolverConfig {
                n_points: args.points,
                max_iterations: args.max_iterations,
                ..SolverConfig::default()
            };
            let sol = minimize_geodesic(a, b, &cfg)?;
            (sol.curve, sol.iterations)
        }
        Solver::Analytic => (analytic_geodesic(a, b, args.points)?, 0),
    };
    let numeric = discrete_length(&curve);
    let exact = analytic_length(a, b);
    let mut table = Table::new(&["index", "Zx", "Zy", "n1", "n2", "n3"]);
    for (k, z) in curve.points().iter().enumerate() {
        let [n1, n2, n3] = inverse_stereographic((*z).into()).coords();
        table.push(vec![
            k.to_string(),
            num(z.re),
            num(z.im),
            num(n1),
            num(n2),
            num(n3),
        ]);
    }
    Ok(Report {
        summary: json!({
            "length_numeric": numeric,
            "length_analytic": exact,
            "residual": (numeric - exact).abs(),
            "iterations": iterations,
        }),
        table: Some(table),
    })
}

/// `n` seeded samples `(p, dp)` with `p` uniform in the disk `|Z| ≤ 10`
/// and `dp` uniform in `[−1, 1]²`.
pub fn metric_samples(seed: u64, n: usize) -> Vec<(PlanePoint, (f64, f64))> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| {
            let rho = 10.0 * rng.gen::<f64>().sqrt();
            let phi = rng.gen_range(-PI..PI);
            let dp = (rng.gen_range(-1.0..=1.0), rng.gen_range(-1.0..=1.0));
            (PlanePoint::new(rho * phi.cos(), rho * phi.sin()), dp)
        })
        .collect()
}

pub fn metric_check(g: &Globals) -> CmdResult {
    let samples = metric_samples(g.seed, g.samples_or(1000)?);
    let residuals: Vec<MetricResiduals> = if g.parallel {
        samples
            .par_iter()
            .map(|&(p, dp)| metric_residuals(p, dp))
            .collect()
    } else {
        samples
            .iter()
            .map(|&(p, dp)| metric_residuals(p, dp))
            .collect()
    };
    let mut table = Table::new(&["x", "y", "dx", "dy", "euclid_residual", "sphere_residual"]);
    for ((p, dp), r) in samples.iter().zip(&residuals) {
        table.push(vec![
            num(p.x),
            num(p.y),
            num(dp.0),
            num(dp.1),
            num(r.euclid),
            num(r.sphere),
        ]);
    }
    Ok(Report {
        summary: json!({
            "samples": samples.len(),
            "seed": g.seed,
            "euclid_max": residuals.iter().map(|r| r.euclid).fold(0.0, f64::max),
            "sphere_max_rel": residuals.iter().map(|r| r.sphere).fold(0.0, f64::max),
        }),
        table: Some(table),
    })
}

pub fn phase(loop_arg: &str) -> CmdResult {
    let raw: Vec<Vec<[f64; 2]>> = parse_json(&read_json_arg(loop_arg)?, "loop")?;
    let vertices = raw
        .iter()
        .map(|pairs| StateVector::from_pairs(pairs))
        .collect::<Result<Vec<_>, _>>()?;
    let lp = ClosedLoop::new(vertices)?;
    let gamma = pancharatnam_phase(&lp);
    let summary = if lp.dim() == 2 {
        json!({
            "phase": gamma,
            "solid_angle": solid_angle(&lp)?,
            "holonomy_residual": holonomy_check(&lp)?,
        })
    } else {
        json!({ "phase": gamma })
    };
    Ok(Report::summary(summary))
}

pub fn locus(k: f64, r: f64, coeff: Option<f64>, g: &Globals) -> CmdResult {
    let spec = match coeff {
        Some(c) => LocusSpec::with_coefficient(k, r, c)?,
        None => LocusSpec::new(k, r)?,
    };
    let n = g.samples_or(1000)?;
    let points = sample_locus(&spec, n);
    let target = k * k;
    let residual = points
        .iter()
        .map(|s| (s.density - target).abs())
        .fold(0.0, f64::max);
    let atlas = locus_as_manifold(&spec);
    let roundtrip = atlas
        .charts()
        .iter()
        .map(|c| verify_homeomorphism(c, n).max_roundtrip_error)
        .fold(0.0, f64::max);
    let mut table = Table::new(&["angle", "x", "y", "psi_re", "psi_im", "density"]);
    for s in &points {
        table.push(vec![
            num(s.angle),
            num(s.x),
            num(s.y),
            num(s.psi.re),
            num(s.psi.im),
            num(s.density),
        ]);
    }
    Ok(Report {
        summary: json!({
            "R": level_set_radius(&spec),
            "max_level_residual": residual,
            "atlas_max_roundtrip_error": roundtrip,
            "uncovered_count": verify_coverage(&atlas, n).uncovered_points.len(),
        }),
        table: Some(table),
    })
}
