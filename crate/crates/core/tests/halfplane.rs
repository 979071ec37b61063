mod common;

use std::f64::consts::PI;

use common::{csv_fixture, json_fixture, max_rel, rel};
use cpshift::halfplane::{
    bracket_values, force_direction, xi_halfplane_nonretarded, xi_halfplane_retarded, ForceOptions,
};
use cpshift::{xi_halfplane, Error, HalfPlaneConfig, QuadSettings};

fn tight() -> QuadSettings {
    QuadSettings::default().with_rel_tol(1e-12)
}

#[test]
fn brackets_match_oracle_grid() {
    let rows = csv_fixture("halfplane_brackets.csv");
    assert!(rows.len() >= 90);
    let mut worst = 0.0f64;
    for r in &rows {
        let (eta, phi): (f64, f64) = (r[0].parse().unwrap(), r[1].parse().unwrap());
        let got = bracket_values(eta, phi);
        let want: [f64; 3] = [2, 3, 4].map(|i| r[i].parse().unwrap());
        // Relative to the largest component: f_φ vanishes at the edge.
        let scale = want.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        for i in 0..3 {
            let err = (got[i] - want[i]).abs() / scale;
            worst = worst.max(err);
            assert!(err < 1e-12, "eta={eta} phi={phi} comp {i}: {} vs {}", got[i], want[i]);
        }
    }
    assert!(worst < 1e-12);
}

#[test]
fn integral_matches_oracle() {
    let fx = json_fixture("misc.json");
    let want = common::triple(&fx["halfplane_1_2pi3_1"]);
    let got = xi_halfplane(&HalfPlaneConfig::new(1.0, 2.0 * PI / 3.0, 1.0), &tight()).unwrap();
    assert!(max_rel(&got, &want) < 1e-11, "{got:?} vs {want:?}");
}

#[test]
fn static_closed_forms_match_small_energy() {
    for phi in [0.3, PI / 4.0, PI / 2.0, 2.0, 3.0 * PI / 4.0, 3.1, PI] {
        let nr = xi_halfplane_nonretarded(1.0, phi).unwrap();
        let got = xi_halfplane(&HalfPlaneConfig::new(1.0, phi, 1e-7), &tight()).unwrap();
        for i in 0..3 {
            let (a, b) = (got.components()[i], nr.components()[i]);
            assert!((a - b).abs() < 1e-5 * nr.sum(), "phi={phi} comp {i}: {a} vs {b}");
        }
    }
}

#[test]
fn closed_forms_at_edge_direction() {
    let edge = xi_halfplane_nonretarded(1.0, PI).unwrap();
    assert!(rel(edge.rho_comp, 5.0 / (24.0 * PI)) < 1e-15);
    assert_eq!(edge.phi_comp, 0.0);
}

#[test]
fn retarded_closed_forms_match_large_energy() {
    for phi in [PI / 3.0, PI / 2.0, 3.0 * PI / 4.0, PI] {
        let e = 2000.0;
        let ret = xi_halfplane_retarded(1.0, phi, e).unwrap();
        assert!(ret.valid);
        let got = xi_halfplane(&HalfPlaneConfig::new(1.0, phi, e), &tight()).unwrap();
        assert!(
            max_rel(&got, &ret.xi.components()) < 2e-3,
            "phi={phi}: {got:?} vs {ret:?}"
        );
    }
    assert!(!xi_halfplane_retarded(1.0, 0.1, 1.0).unwrap().valid);
    assert!(xi_halfplane_retarded(1.0, 1.0, 0.0).is_err());
}

#[test]
fn mirror_symmetric() {
    for phi in [0.2, 1.0, 2.5, 3.1] {
        let a = xi_halfplane(&HalfPlaneConfig::new(1.3, phi, 0.7), &tight()).unwrap();
        let b = xi_halfplane(&HalfPlaneConfig::new(1.3, 2.0 * PI - phi, 0.7), &tight()).unwrap();
        assert!(max_rel(&a, &b.components()) < 1e-13);
    }
}

#[test]
fn force_direction_matches_oracle() {
    let fx = json_fixture("force_direction.json");
    let want = [fx["e_rho"].as_str().unwrap(), fx["e_phi"].as_str().unwrap()].map(|s| s.parse::<f64>().unwrap());
    let opts = ForceOptions {
        use_asymptotic_when_valid: false,
        ..ForceOptions::default()
    };
    let f = force_direction(1.0, 3.0 * PI / 4.0, 50.0, &tight(), &opts).unwrap();
    assert!(!f.degenerate && !f.asymptotic);
    assert!(
        (f.e_rho - want[0]).abs() < 1e-7 && (f.e_phi - want[1]).abs() < 1e-7,
        "{f:?} vs {want:?}"
    );
    // The closed forms give the same picture at this distance.
    let g = force_direction(1.0, 3.0 * PI / 4.0, 50.0, &tight(), &ForceOptions::default()).unwrap();
    assert!(g.asymptotic);
    assert!((g.e_rho - want[0]).abs() < 1e-4 && (g.e_phi - want[1]).abs() < 1e-4);
}

#[test]
fn force_points_towards_the_conductor() {
    let s = QuadSettings::default();
    let opts = ForceOptions::default();
    // Straight into the edge along the symmetry axis.
    let f = force_direction(1.0, PI, 3.0, &s, &opts).unwrap();
    assert!(rel(f.e_rho, -1.0) < 1e-12 && f.e_phi == 0.0);
    // Mirror images have mirrored angular components.
    let a = force_direction(0.8, 2.0, 3.0, &s, &opts).unwrap();
    let b = force_direction(0.8, 2.0 * PI - 2.0, 3.0, &s, &opts).unwrap();
    assert!((a.e_rho - b.e_rho).abs() < 1e-9 && (a.e_phi + b.e_phi).abs() < 1e-9);
    // Above the upper face the atom is drawn towards φ = 0.
    assert!(a.e_phi < 0.0);
}

#[test]
fn plane_limit_is_refused() {
    let err = xi_halfplane(&HalfPlaneConfig::new(1.0, 1e-8, 1.0), &QuadSettings::default()).unwrap_err();
    assert!(matches!(err, Error::PlaneLimit { .. }));
    assert!(xi_halfplane(&HalfPlaneConfig::new(0.0, 1.0, 1.0), &QuadSettings::default()).is_err());
}
