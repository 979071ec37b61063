//! Energy shift of a ground-state atom assembled from the response functions
//! and its dipole transitions.
//!
//! Units: `ΔW` is in `μ² / (4πε₀ L³)` for whatever length unit `L` the
//! geometry and transition energies are expressed in.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{require, Error, Result};
use crate::halfplane::{xi_halfplane, HalfPlaneConfig};
use crate::plane::{xi_plane, PlaneConfig};
use crate::quad::QuadSettings;
use crate::wire::{xi_wire, WireConfig};
use crate::xi::XiTriple;

/// Where the atom is. The transition energy stored in each configuration is
/// ignored; [`energy_shift`] substitutes each transition's energy.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "geometry", rename_all = "lowercase")]
pub enum Geometry {
    Plane { d: f64 },
    Wire { radius: f64, rho: f64 },
    HalfPlane { rho: f64, phi: f64 },
}

impl Geometry {
    /// `Ξ` at transition energy `energy`.
    pub fn xi(&self, energy: f64, settings: &QuadSettings) -> Result<XiTriple> {
        match *self {
            Geometry::Plane { d } => xi_plane(&PlaneConfig::new(d, energy), settings),
            Geometry::Wire { radius, rho } => xi_wire(&WireConfig::new(radius, rho, energy), settings),
            Geometry::HalfPlane { rho, phi } => xi_halfplane(&HalfPlaneConfig::new(rho, phi, energy), settings),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Geometry::Plane { .. } => "plane",
            Geometry::Wire { .. } => "wire",
            Geometry::HalfPlane { .. } => "halfplane",
        }
    }
}

/// One dipole transition `i → j` out of the atom's ground state.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Transition {
    /// `E_j - E_i` (inverse length). Zero selects the electrostatic limit.
    pub energy: f64,
    /// `(|μ_ρ|², |μ_φ|², |μ_z|²)`; for the plane, `(|μ_⊥|², |μ_∥|², |μ_∥|²)`.
    pub mu_sq: [f64; 3],
}

impl Transition {
    pub fn new(energy: f64, mu_sq: [f64; 3]) -> Self {
        Transition { energy, mu_sq }
    }

    /// Equal weight `mu_sq_total / 3` on each component.
    pub fn isotropic(energy: f64, mu_sq_total: f64) -> Self {
        Transition::new(energy, [mu_sq_total / 3.0; 3])
    }

    pub fn validate(&self) -> Result<()> {
        require(self.energy >= 0.0 && self.energy.is_finite(), || {
            format!(
                "transition energy must be non-negative (ground-state atom), got {}",
                self.energy
            )
        })?;
        require(self.mu_sq.iter().all(|m| *m >= 0.0 && m.is_finite()), || {
            format!("dipole components must be non-negative, got {:?}", self.mu_sq)
        })?;
        require(self.mu_sq.iter().any(|m| *m > 0.0), || {
            "dipole matrix element is zero".to_string()
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EnergyShift {
    pub value: f64,
    pub per_transition: Vec<f64>,
    pub error_estimate: f64,
}

/// `ΔW = -Σ_j Σ_i Ξ_i(E_j) |μ_i|²`, evaluated in parallel over transitions.
pub fn energy_shift(geometry: &Geometry, transitions: &[Transition], settings: &QuadSettings) -> Result<EnergyShift> {
    require(!transitions.is_empty(), || "at least one transition is required".into())?;
    settings.validate()?;
    for (index, t) in transitions.iter().enumerate() {
        t.validate().map_err(|e| Error::Transition {
            index,
            source: Box::new(e),
        })?;
    }
    let parts: Vec<Result<(f64, f64)>> = transitions
        .par_iter()
        .enumerate()
        .map(|(index, t)| {
            let xi = geometry.xi(t.energy, settings).map_err(|e| Error::Transition {
                index,
                source: Box::new(e),
            })?;
            let c = xi.components();
            let value = -(0..3).map(|i| c[i] * t.mu_sq[i]).sum::<f64>();
            let weight: f64 = t.mu_sq.iter().sum();
            Ok((value, xi.error_estimate * weight))
        })
        .collect();
    let mut per_transition = Vec::with_capacity(parts.len());
    let mut error_estimate = 0.0;
    for p in parts {
        let (v, e) = p?;
        per_transition.push(v);
        error_estimate += e;
    }
    Ok(EnergyShift {
        value: per_transition.iter().sum(),
        per_transition,
        error_estimate,
    })
}

/// Single transition of an isotropically polarizable atom.
pub fn isotropic_shift(
    geometry: &Geometry,
    energy: f64,
    mu_sq_total: f64,
    settings: &QuadSettings,
) -> Result<EnergyShift> {
    require(mu_sq_total > 0.0 && mu_sq_total.is_finite(), || {
        format!("total dipole strength must be positive, got {mu_sq_total}")
    })?;
    energy_shift(geometry, &[Transition::isotropic(energy, mu_sq_total)], settings)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plane_electrostatic_example() {
        let s = QuadSettings::default();
        let w = energy_shift(
            &Geometry::Plane { d: 1.0 },
            &[Transition::new(0.0, [1.0, 0.0, 0.0])],
            &s,
        )
        .unwrap();
        assert!((w.value + 0.125).abs() < 1e-15);
    }

    #[test]
    fn rejects_empty_dipole_and_labels_transition() {
        let s = QuadSettings::default();
        let g = Geometry::Plane { d: 1.0 };
        let e = energy_shift(
            &g,
            &[Transition::new(1.0, [1.0; 3]), Transition::new(1.0, [0.0; 3])],
            &s,
        )
        .unwrap_err();
        assert!(matches!(e, Error::Transition { index: 1, .. }));
        assert!(energy_shift(&g, &[], &s).is_err());
        assert!(energy_shift(&g, &[Transition::new(-1.0, [1.0; 3])], &s).is_err());
    }

    #[test]
    fn evaluation_failures_name_the_transition() {
        let s = QuadSettings::default();
        let g = Geometry::HalfPlane { rho: 1.0, phi: 1e-8 };
        let e = energy_shift(&g, &[Transition::new(1.0, [1.0; 3])], &s).unwrap_err();
        match e {
            Error::Transition { index, source } => {
                assert_eq!(index, 0);
                assert!(matches!(*source, Error::PlaneLimit { .. }));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn isotropic_retarded_plane() {
        let s = QuadSettings::default().with_rel_tol(1e-12);
        let w = isotropic_shift(&Geometry::Plane { d: 1.0 }, 1e4, 3.0, &s).unwrap();
        let expect = -3.0 / (4.0 * std::f64::consts::PI * 1e4);
        assert!((w.value / expect - 1.0).abs() < 1e-3);
    }
}
