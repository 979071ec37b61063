//! Reference results for an infinite, perfectly reflecting plane mirror.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{require, Result};
use crate::quad::{integrate_semi_infinite, QuadSettings};
use crate::xi::XiTriple;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PlaneConfig {
    /// Atom-mirror distance.
    pub d: f64,
    /// Transition energy `E_ji` (inverse length).
    pub energy: f64,
}

impl PlaneConfig {
    pub fn new(d: f64, energy: f64) -> Self {
        PlaneConfig { d, energy }
    }

    pub fn validate(&self) -> Result<()> {
        require(self.d > 0.0 && self.d.is_finite(), || {
            format!("plane distance must be positive, got {}", self.d)
        })?;
        require(self.energy >= 0.0 && self.energy.is_finite(), || {
            format!("transition energy must be non-negative, got {}", self.energy)
        })
    }
}

/// `(Ξ_⊥, Ξ_∥, Ξ_∥)` for arbitrary retardation.
pub fn xi_plane(cfg: &PlaneConfig, settings: &QuadSettings) -> Result<XiTriple> {
    cfg.validate()?;
    settings.validate()?;
    if cfg.energy == 0.0 {
        return Ok(xi_plane_nonretarded(cfg.d));
    }
    let a = 2.0 * cfg.d * cfg.energy;
    let scale = 1.0f64.min(1.0 / a);
    let perp = integrate_semi_infinite(
        |eta| {
            let q = 1.0 + eta * eta;
            (-a * eta).exp() / (q * q)
        },
        scale,
        settings,
    )?;
    let para = integrate_semi_infinite(
        |eta| {
            let q = 1.0 + eta * eta;
            (-a * eta).exp() * (1.0 - eta * eta) / (q * q * q)
        },
        scale,
        settings,
    )?;
    let pre = 1.0 / (2.0 * PI * cfg.d.powi(3));
    Ok(XiTriple::new(pre * perp.value, pre * para.value, pre * para.value)
        .with_error(pre * (perp.error_estimate + para.error_estimate)))
}

/// Electrostatic limit `(1/(8d³), 1/(16d³), 1/(16d³))`.
pub fn xi_plane_nonretarded(d: f64) -> XiTriple {
    let d3 = d * d * d;
    XiTriple::new(1.0 / (8.0 * d3), 1.0 / (16.0 * d3), 1.0 / (16.0 * d3))
}

/// Retarded limit, every component `1/(4π d⁴ E)`.
pub fn xi_plane_retarded(d: f64, energy: f64) -> XiTriple {
    let v = 1.0 / (4.0 * PI * d.powi(4) * energy);
    XiTriple::new(v, v, v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_forms() {
        let x = xi_plane_nonretarded(2.0);
        assert_eq!(x.components(), [1.0 / 64.0, 1.0 / 128.0, 1.0 / 128.0]);
        let r = xi_plane_retarded(1.0, 10.0);
        assert!((r.rho_comp - 1.0 / (40.0 * PI)).abs() < 1e-17);
    }

    #[test]
    fn small_energy_approaches_electrostatics() {
        let s = QuadSettings::default();
        let x = xi_plane(&PlaneConfig::new(1.0, 5e-5), &s).unwrap();
        assert!(x.max_rel_diff(&xi_plane_nonretarded(1.0)) < 1e-3);
    }

    #[test]
    fn parallel_never_exceeds_normal() {
        let s = QuadSettings::default();
        for &e in &[0.0, 0.01, 0.3, 1.0, 7.0, 100.0] {
            let x = xi_plane(&PlaneConfig::new(1.0, e), &s).unwrap();
            assert!(x.phi_comp <= x.rho_comp);
            assert_eq!(x.phi_comp, x.z_comp);
        }
    }

    #[test]
    fn rejects_invalid() {
        let s = QuadSettings::default();
        assert!(xi_plane(&PlaneConfig::new(0.0, 1.0), &s).is_err());
        assert!(xi_plane(&PlaneConfig::new(1.0, -1.0), &s).is_err());
    }
}
