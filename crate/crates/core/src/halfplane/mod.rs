//! Response functions for an atom near a perfectly reflecting half-plane.
//!
//! Cylindrical coordinates have the edge on the z axis and the conductor at
//! `φ = 0 ≡ 2π`. Results are symmetric under `φ ↔ 2π - φ`, so every entry
//! point first maps `φ` into `(0, π]`.

mod integrand;
mod series;

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{require, Error, Result};
use crate::quad::{integrate_semi_infinite_vec, QuadSettings};
use crate::xi::XiTriple;

pub use integrand::{bracket_values, bracket_values_naive};
pub(crate) use integrand::{brackets, Angle};

/// Smallest supported `sin φ`; closer to the surface use the plane mirror.
pub const PLANE_LIMIT_SIN: f64 = 1e-6;

/// Number of wavelengths between atom and half-plane from which the retarded
/// closed forms are considered valid.
pub const RETARDED_VALIDITY_THRESHOLD: f64 = 5.0;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HalfPlaneConfig {
    /// Distance from the edge.
    pub rho: f64,
    /// Polar angle measured from the half-plane, in `(0, 2π)`.
    pub phi: f64,
    /// Transition energy `E_ji` (inverse length).
    pub energy: f64,
}

impl HalfPlaneConfig {
    pub fn new(rho: f64, phi: f64, energy: f64) -> Self {
        HalfPlaneConfig { rho, phi, energy }
    }

    pub fn validate(&self) -> Result<()> {
        validate_position(self.rho, self.phi)?;
        require(self.energy >= 0.0 && self.energy.is_finite(), || {
            format!("transition energy must be non-negative, got {}", self.energy)
        })
    }

    /// Distance from the conducting sheet: `ρ sin φ` in front of it, `ρ`
    /// beyond the edge.
    pub fn surface_distance(&self) -> f64 {
        let phi = canonical_phi(self.phi);
        if phi < PI / 2.0 {
            self.rho * phi.sin()
        } else {
            self.rho
        }
    }
}

fn validate_position(rho: f64, phi: f64) -> Result<()> {
    require(rho > 0.0 && rho.is_finite(), || {
        format!("distance from the edge must be positive, got {rho}")
    })?;
    require(phi > 0.0 && phi < 2.0 * PI, || {
        format!("polar angle must lie in (0, 2π), got {phi}")
    })
}

/// Maps `φ ∈ (0, 2π)` onto `(0, π]`.
pub fn canonical_phi(phi: f64) -> f64 {
    if phi > PI {
        2.0 * PI - phi
    } else {
        phi
    }
}

/// `Ξ_ρ, Ξ_φ, Ξ_z` from the exact single-integral representation.
pub fn xi_halfplane(cfg: &HalfPlaneConfig, settings: &QuadSettings) -> Result<XiTriple> {
    cfg.validate()?;
    settings.validate()?;
    let phi = canonical_phi(cfg.phi);
    let sin = phi.sin();
    if phi < PI / 2.0 && sin < PLANE_LIMIT_SIN {
        return Err(Error::PlaneLimit {
            distance: cfg.rho * sin,
        });
    }
    let ang = Angle::new(phi);
    let a = 2.0 * cfg.rho * cfg.energy;
    // The bracket varies on the scale sin φ when the atom is in front of the
    // sheet; the weight decays on the scale 1/a.
    let mut scale = if phi < PI / 2.0 { sin.clamp(1e-3, 1.0) } else { 1.0 };
    if a > 0.0 {
        scale = scale.min(1.0 / a);
    }
    let res = integrate_semi_infinite_vec(
        |eta| {
            if eta == 0.0 {
                return [0.0; 3];
            }
            let w = (-a * eta).exp();
            if w == 0.0 {
                return [0.0; 3];
            }
            brackets(eta, &ang).map(|f| w * f)
        },
        scale,
        settings,
    )?;
    let pre = 1.0 / (16.0 * PI * cfg.rho.powi(3));
    Ok(
        XiTriple::new(pre * res[0].value, pre * res[1].value, pre * res[2].value)
            .with_error(pre * res.iter().map(|r| r.error_estimate).fold(0.0, f64::max)),
    )
}

/// Below this distance from the edge direction (`π - φ`) the electrostatic
/// closed forms are evaluated from their Taylor series, whose terms shrink by
/// about `(e/π)²` each.
const EDGE_SERIES_LIMIT: f64 = 0.5;

/// Taylor coefficients in `e²` of `π ρ³ Ξ` about `e = π - φ = 0`.
const EDGE_SERIES: [[f64; 13]; 3] = [
    [
        5.0 / 24.0,
        11.0 / 480.0,
        151.0 / 40320.0,
        677.0 / 1209600.0,
        8483.0 / 106444800.0,
        1.092_406_248_036_208_3e-5,
        1.449_699_880_482_783_9e-6,
        1.871_575_482_899_352_6e-7,
        2.360_552_004_081_681_3e-8,
        2.919_115_991_440_611_4e-9,
        3.549_787_500_511_607_7e-10,
        4.255_141_647_312_607_6e-11,
        5.037_816_241_096_224_5e-12,
    ],
    [
        0.0,
        7.0 / 480.0,
        31.0 / 8064.0,
        127.0 / 172800.0,
        73.0 / 608256.0,
        1.784_761_640_292_394_3e-5,
        2.493_772_115_444_569e-6,
        3.332_089_628_088_062_4e-7,
        4.304_592_804_652_354_7e-8,
        5.416_213_080_464_325e-9,
        6.671_979_231_512_874e-10,
        8.077_037_889_981_522e-11,
        9.636_663_031_649_975e-12,
    ],
    [
        1.0 / 12.0,
        1.0 / 80.0,
        17.0 / 6720.0,
        29.0 / 67200.0,
        1181.0 / 17740800.0,
        9.590_559_627_762_008e-6,
        1.314_490_665_309_117_7e-6,
        1.734_555_036_995_804_8e-7,
        2.221_714_936_244_678_5e-8,
        2.778_443_023_968_312e-9,
        3.407_255_577_341_494_3e-10,
        4.110_726_512_431_376e-11,
        4.891_493_090_915_4e-12,
    ],
];

/// Electrostatic (`E → 0`) closed forms.
pub fn xi_halfplane_nonretarded(rho: f64, phi: f64) -> Result<XiTriple> {
    validate_position(rho, phi)?;
    let phi = canonical_phi(phi);
    let e = PI - phi;
    let pre = 1.0 / (PI * rho.powi(3));
    if e < EDGE_SERIES_LIMIT {
        // The 1/sin² and 1/sin³ terms cancel; expand in e = π - φ.
        let e2 = e * e;
        let [r, p, z] = EDGE_SERIES.map(|c| c.iter().rev().fold(0.0, |acc, &x| acc * e2 + x));
        return Ok(XiTriple::new(pre * r, pre * p, pre * z));
    }
    // Work with e throughout so the cancelling terms see the same angle.
    let (s, c) = (e.sin(), -e.cos());
    let (s2, s3) = (s * s, s * s * s);
    Ok(XiTriple::new(
        pre * (5.0 / 48.0 + c / (16.0 * s2) + e * (1.0 + s2) / (16.0 * s3)),
        pre * (-1.0 / 48.0 + c / (8.0 * s2) + e * (1.0 + c * c) / (16.0 * s3)),
        pre * (1.0 / 24.0 + c / (16.0 * s2) + e / (16.0 * s3)),
    ))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RetardedHalfPlane {
    pub xi: XiTriple,
    /// Whether the atom is at least [`RETARDED_VALIDITY_THRESHOLD`]
    /// wavelengths from the half-plane.
    pub valid: bool,
}

/// Whether the retarded closed forms apply at this position.
pub fn retarded_validity(rho: f64, phi: f64, energy: f64) -> bool {
    HalfPlaneConfig::new(rho, phi, energy).surface_distance() * energy >= RETARDED_VALIDITY_THRESHOLD
}

/// Fully retarded closed forms (leading `1/E` behaviour).
pub fn xi_halfplane_retarded(rho: f64, phi: f64, energy: f64) -> Result<RetardedHalfPlane> {
    validate_position(rho, phi)?;
    require(energy > 0.0 && energy.is_finite(), || {
        format!("retarded limit needs a positive transition energy, got {energy}")
    })?;
    let phi = canonical_phi(phi);
    let s2 = (0.5 * phi).sin().powi(2);
    let common = 1.0 / (s2 * s2) + 2.0 / s2;
    let pre = 1.0 / (64.0 * PI * rho.powi(4) * energy);
    let even = pre * (3.0 + common);
    Ok(RetardedHalfPlane {
        xi: XiTriple::new(even, pre * (common - 3.0), even),
        valid: retarded_validity(rho, phi, energy),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ForceOptions {
    /// Finite-difference step in units of `ρ` (for both `ρ` and `ρφ`).
    pub rel_step: f64,
    /// Difference the retarded closed forms instead of the exact integrals
    /// when they are valid.
    pub use_asymptotic_when_valid: bool,
}

impl Default for ForceOptions {
    fn default() -> Self {
        ForceOptions {
            rel_step: 1e-4,
            use_asymptotic_when_valid: true,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ForceDirection {
    pub e_rho: f64,
    pub e_phi: f64,
    /// The gradient vanished to working precision; the direction is
    /// meaningless.
    pub degenerate: bool,
    /// The closed retarded forms were differenced.
    pub asymptotic: bool,
}

/// Unit vector along `-∇ΔW` in the `(ê_ρ, ê_φ)` basis for an isotropically
/// polarizable atom.
pub fn force_direction(
    rho: f64,
    phi: f64,
    energy: f64,
    settings: &QuadSettings,
    opts: &ForceOptions,
) -> Result<ForceDirection> {
    HalfPlaneConfig::new(rho, phi, energy).validate()?;
    require(opts.rel_step > 0.0 && opts.rel_step < 0.1, || {
        format!("finite-difference step must be in (0, 0.1), got {}", opts.rel_step)
    })?;
    // Work on the canonical side and mirror the angular component back.
    let mirrored = phi > PI;
    let phi = canonical_phi(phi);
    let asymptotic = opts.use_asymptotic_when_valid && energy > 0.0 && retarded_validity(rho, phi, energy);
    // Differencing quadrature output needs more digits than the default.
    let fine = settings.with_rel_tol(settings.rel_tol.min(1e-12));
    let shift = |r: f64, p: f64| -> Result<f64> {
        let xi = if asymptotic {
            xi_halfplane_retarded(r, p, energy)?.xi
        } else {
            xi_halfplane(&HalfPlaneConfig::new(r, p, energy), &fine)?
        };
        Ok(-xi.sum() / 3.0)
    };
    let h = opts.rel_step * rho;
    let dw_drho = (shift(rho + h, phi)? - shift(rho - h, phi)?) / (2.0 * h);
    let dphi = opts.rel_step;
    let dw_dphi = if phi == PI {
        0.0
    } else {
        (shift(rho, phi + dphi)? - shift(rho, phi - dphi)?) / (2.0 * dphi)
    };
    let f_rho = -dw_drho;
    let mut f_phi = -dw_dphi / rho;
    if mirrored {
        f_phi = -f_phi;
    }
    let norm = f_rho.hypot(f_phi);
    let reference = shift(rho, phi)?.abs() / rho;
    if !(norm > 1e-12 * reference) {
        return Ok(ForceDirection {
            e_rho: 0.0,
            e_phi: 0.0,
            degenerate: true,
            asymptotic,
        });
    }
    Ok(ForceDirection {
        e_rho: f_rho / norm,
        e_phi: f_phi / norm,
        degenerate: false,
        asymptotic,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nonretarded_examples() {
        let x = xi_halfplane_nonretarded(1.0, PI / 2.0).unwrap();
        assert!((x.rho_comp - (5.0 / (48.0 * PI) + 1.0 / 16.0)).abs() < 1e-15);
        let edge = xi_halfplane_nonretarded(1.0, PI).unwrap();
        assert_eq!(edge.phi_comp, 0.0);
    }

    #[test]
    fn nonretarded_series_joins_closed_form() {
        let e = EDGE_SERIES_LIMIT;
        let a = xi_halfplane_nonretarded(1.0, PI - e * (1.0 + 1e-14)).unwrap();
        let b = xi_halfplane_nonretarded(1.0, PI - e * (1.0 - 1e-14)).unwrap();
        assert!(a.max_rel_diff(&b) < 1e-13, "{a:?} vs {b:?}");
    }

    #[test]
    fn retarded_examples() {
        let r = xi_halfplane_retarded(1.0, PI, 1.0).unwrap();
        let v = 6.0 / (64.0 * PI);
        assert!((r.xi.rho_comp - v).abs() < 1e-16 && r.xi.phi_comp.abs() < 1e-16);
        assert!(!r.valid);
        let q = xi_halfplane_retarded(1.0, PI / 2.0, 1.0).unwrap();
        assert!((q.xi.phi_comp - 5.0 / (64.0 * PI)).abs() < 1e-15);
        assert!(retarded_validity(1.0, 3.0, 5.0));
        assert!(!retarded_validity(1.0, 0.1, 20.0));
    }

    #[test]
    fn plane_guard() {
        let s = QuadSettings::default();
        assert!(matches!(
            xi_halfplane(&HalfPlaneConfig::new(1.0, 1e-7, 1.0), &s),
            Err(Error::PlaneLimit { .. })
        ));
        assert!(xi_halfplane(&HalfPlaneConfig::new(1.0, 0.0, 1.0), &s).is_err());
    }

    #[test]
    fn static_limit_of_integral() {
        let s = QuadSettings::default();
        for &phi in &[0.7, PI / 2.0, 2.5, PI] {
            let x = xi_halfplane(&HalfPlaneConfig::new(1.0, phi, 0.0), &s).unwrap();
            let c = xi_halfplane_nonretarded(1.0, phi).unwrap();
            assert!(x.rho_comp.is_finite());
            assert!((x.rho_comp / c.rho_comp - 1.0).abs() < 1e-7, "{phi}: {x:?} {c:?}");
            assert!((x.z_comp / c.z_comp - 1.0).abs() < 1e-7, "{phi}: {x:?} {c:?}");
            assert!(
                (x.phi_comp - c.phi_comp).abs() < 1e-7 * c.rho_comp,
                "{phi}: {x:?} {c:?}"
            );
        }
    }

    #[test]
    fn force_points_at_the_sheet() {
        let s = QuadSettings::default();
        let o = ForceOptions::default();
        let f = force_direction(1.0, 0.05, 2000.0, &s, &o).unwrap();
        assert!(f.asymptotic && f.e_phi < -0.99);
        let g = force_direction(1.0, PI / 2.0 - 0.01, 100.0, &s, &o).unwrap();
        assert!(g.e_phi < 0.0 && g.e_rho < 0.0);
        let m = force_direction(1.0, 2.0 * PI - 0.05, 2000.0, &s, &o).unwrap();
        assert!((m.e_phi + f.e_phi).abs() < 1e-9 && (m.e_rho - f.e_rho).abs() < 1e-9);
        let e = force_direction(1.0, PI, 3.0, &s, &o).unwrap();
        assert_eq!(e.e_phi, 0.0);
        assert!(e.e_rho < 0.0);
    }
}
