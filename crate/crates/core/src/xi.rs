use serde::{Deserialize, Serialize};

/// The three dipole-orientation response functions `(Ξ_ρ, Ξ_φ, Ξ_z)`.
///
/// For the plane mirror the slots hold `(normal, parallel, parallel)`.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct XiTriple {
    pub rho_comp: f64,
    pub phi_comp: f64,
    pub z_comp: f64,
    pub error_estimate: f64,
}

impl XiTriple {
    pub fn new(rho_comp: f64, phi_comp: f64, z_comp: f64) -> Self {
        XiTriple {
            rho_comp,
            phi_comp,
            z_comp,
            error_estimate: 0.0,
        }
    }

    pub fn with_error(mut self, error_estimate: f64) -> Self {
        self.error_estimate = error_estimate;
        self
    }

    pub fn components(&self) -> [f64; 3] {
        [self.rho_comp, self.phi_comp, self.z_comp]
    }

    pub fn sum(&self) -> f64 {
        self.rho_comp + self.phi_comp + self.z_comp
    }

    /// Multiplies every component and the error estimate by `factor`.
    pub fn scaled(&self, factor: f64) -> Self {
        XiTriple {
            rho_comp: self.rho_comp * factor,
            phi_comp: self.phi_comp * factor,
            z_comp: self.z_comp * factor,
            error_estimate: self.error_estimate * factor.abs(),
        }
    }

    pub fn is_finite(&self) -> bool {
        self.components().iter().all(|c| c.is_finite())
    }

    /// Largest componentwise relative deviation from `other`.
    pub fn max_rel_diff(&self, other: &XiTriple) -> f64 {
        self.components()
            .iter()
            .zip(other.components())
            .map(|(a, b)| {
                if *a == b {
                    0.0
                } else {
                    (a - b).abs() / b.abs().max(a.abs())
                }
            })
            .fold(0.0, f64::max)
    }
}
