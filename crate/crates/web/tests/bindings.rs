use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

use raysphere_web::{chart_coordinates, geodesic, loop_phase, plane_to_sphere, sphere_to_plane};

#[test]
fn geodesic_quarter_circle() {
    let view = geodesic(1.0, 0.0, 0.0, 1.0, 128).unwrap();
    assert_eq!(view.numeric().len(), 3 * 128);
    assert_eq!(view.analytic().len(), 3 * 128);
    assert!((view.length_analytic() - FRAC_PI_2).abs() < 1e-15);
    assert!((view.length_numeric() - FRAC_PI_2).abs() < 1e-4);
    assert!(view.deviation() < 1e-3);
    assert!(view.iterations() > 0);
    for p in view.numeric().chunks(3) {
        assert!((p.iter().map(|c| c * c).sum::<f64>() - 1.0).abs() < 1e-14);
    }
}

#[test]
fn geodesic_rejects_degenerate_endpoints() {
    let err = geodesic(1.0, 0.0, -1.0, 0.0, 32).err().unwrap();
    assert!(err.starts_with("degenerate_geodesic"));
    assert!(geodesic(0.3, 0.3, 0.3, 0.3, 32).is_err());
    assert!(geodesic(0.0, 0.0, 1.0, 0.0, 2).is_err());
}

#[test]
fn plane_sphere_round_trip() {
    let n = plane_to_sphere(0.4, -1.3);
    let z = sphere_to_plane(n[0], n[1], n[2]).unwrap();
    assert!((z[0] - 0.4).abs() < 1e-14 && (z[1] + 1.3).abs() < 1e-14);
    assert!(sphere_to_plane(0.0, 0.0, 1.0)
        .unwrap_err()
        .starts_with("pole_singularity"));
}

#[test]
fn octant_loop_phase() {
    let view = loop_phase(&[1.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, -1.0]).unwrap();
    assert!((view.phase() + FRAC_PI_4).abs() < 1e-12);
    assert!((view.solid_angle() - FRAC_PI_2).abs() < 1e-12);
    assert!(view.holonomy_residual() < 1e-12);

    let back = loop_phase(&[0.0, 0.0, -1.0, 0.0, 1.0, 0.0, 1.0, 0.0, 0.0]).unwrap();
    assert!((back.phase() - FRAC_PI_4).abs() < 1e-12);
}

#[test]
fn loop_phase_errors() {
    assert!(loop_phase(&[1.0, 0.0, 0.0, 0.0, 1.0]).is_err());
    assert!(loop_phase(&[1.0, 0.0, 0.0, 0.0, 1.0, 0.0]).is_err());
    assert!(loop_phase(&[0.0; 9]).is_err());
    // successive antipodal vertices are orthogonal states
    let err = loop_phase(&[0.0, 0.0, 1.0, 0.0, 0.0, -1.0, 1.0, 0.0, 0.0])
        .err()
        .unwrap();
    assert!(err.starts_with("orthogonal_segment"));
}

#[test]
fn chart_views() {
    let v = chart_coordinates("four-chart", 0.9272952180016122).unwrap();
    assert_eq!(v.count(), 2);
    assert_eq!(v.name(0).as_deref(), Some("U1"));
    assert!((v.coordinate(0).unwrap() - 0.6).abs() < 1e-15);
    assert_eq!(v.name(1).as_deref(), Some("U3"));
    assert!((v.coordinate(1).unwrap() - 0.8).abs() < 1e-15);
    assert_eq!(v.name(2), None);

    let v = chart_coordinates("angular", 1.5 * PI).unwrap();
    assert_eq!(v.count(), 2);
    assert!((v.coordinate(0).unwrap() + FRAC_PI_2).abs() < 1e-15);
    assert!((v.coordinate(1).unwrap() - 1.5 * PI).abs() < 1e-15);

    assert!(chart_coordinates("torus", 0.0).is_err());
}
