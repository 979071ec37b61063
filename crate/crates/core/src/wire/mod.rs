//! Response functions for an atom outside a perfectly reflecting cylinder.

mod asymptotic;
pub mod kernel;
mod regime;

use std::cell::RefCell;

use serde::{Deserialize, Serialize};

use crate::error::{require, Error, Result};
use crate::quad::{integrate_semi_infinite_vec, QuadResult, QuadSettings};
use crate::xi::XiTriple;

pub use asymptotic::{xi_wire_large_radius_approx, xi_wire_small_radius_approx};
use kernel::{Kernel, MSums, Retardation};
pub use regime::{classify_regime, wavelength, Regime, RegimeClass, REGIME_SEPARATION};

/// Smallest supported `d/R`; closer atoms should use the plane-mirror results.
pub const MIN_GAP_RATIO: f64 = 1e-3;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WireConfig {
    /// Wire radius `R`.
    pub radius: f64,
    /// Radial coordinate of the atom.
    pub rho: f64,
    /// Transition energy `E_ji` (inverse length).
    pub energy: f64,
}

impl WireConfig {
    pub fn new(radius: f64, rho: f64, energy: f64) -> Self {
        WireConfig { radius, rho, energy }
    }

    /// Surface distance `d = ρ - R`.
    pub fn gap(&self) -> f64 {
        self.rho - self.radius
    }

    pub fn validate(&self) -> Result<()> {
        validate_geometry(self.radius, self.rho)?;
        require(self.energy >= 0.0 && self.energy.is_finite(), || {
            format!("transition energy must be non-negative, got {}", self.energy)
        })
    }
}

fn validate_geometry(radius: f64, rho: f64) -> Result<()> {
    require(radius > 0.0 && radius.is_finite(), || {
        format!("wire radius must be positive, got {radius}")
    })?;
    require(rho > radius && rho.is_finite(), || {
        format!("atom must sit outside the wire (rho = {rho}, R = {radius})")
    })?;
    let ratio = (rho - radius) / radius;
    if ratio < MIN_GAP_RATIO * (1.0 - 1e-9) {
        return Err(Error::GapTooSmall {
            ratio,
            floor: MIN_GAP_RATIO,
        });
    }
    Ok(())
}

/// `Ξ_ρ, Ξ_φ, Ξ_z` for arbitrary retardation. `E = 0` is routed to
/// [`xi_wire_nonretarded`].
pub fn xi_wire(cfg: &WireConfig, settings: &QuadSettings) -> Result<XiTriple> {
    cfg.validate()?;
    if cfg.energy == 0.0 {
        return xi_wire_nonretarded(cfg.radius, cfg.rho, settings);
    }
    let d = cfg.gap();
    integrate(cfg.radius, cfg.rho, Retardation::Finite(cfg.energy * d), settings).map(|x| x.scaled(d.powi(-3)))
}

/// Electrostatic limit `E → 0` of [`xi_wire`].
pub fn xi_wire_nonretarded(radius: f64, rho: f64, settings: &QuadSettings) -> Result<XiTriple> {
    validate_geometry(radius, rho)?;
    let d = rho - radius;
    integrate(radius, rho, Retardation::None, settings).map(|x| x.scaled(d.powi(-3)))
}

/// `lim_{E→∞} E·Ξ`: the coefficient of `1/E` in the fully retarded regime.
pub fn xi_wire_retarded_limit(radius: f64, rho: f64, settings: &QuadSettings) -> Result<XiTriple> {
    validate_geometry(radius, rho)?;
    let d = rho - radius;
    integrate(radius, rho, Retardation::Limit, settings).map(|x| x.scaled(d.powi(-4)))
}

fn retardation_for(cfg: &WireConfig) -> Retardation {
    if cfg.energy == 0.0 {
        Retardation::None
    } else {
        Retardation::Finite(cfg.energy * cfg.gap())
    }
}

/// Contribution of the single order `m` to `Ξ` (without the primed weight of
/// `m = 0`), i.e. `(2/π) ∫ dk k {..}_m`.
pub fn xi_wire_summand(cfg: &WireConfig, m: usize, settings: &QuadSettings) -> Result<XiTriple> {
    cfg.validate()?;
    let d = cfg.gap();
    summand(cfg.radius, cfg.rho, retardation_for(cfg), m, settings).map(|x| x.scaled(d.powi(-3)))
}

/// Single-order contribution to [`xi_wire_retarded_limit`].
pub fn xi_wire_retarded_limit_summand(radius: f64, rho: f64, m: usize, settings: &QuadSettings) -> Result<XiTriple> {
    validate_geometry(radius, rho)?;
    let d = rho - radius;
    summand(radius, rho, Retardation::Limit, m, settings).map(|x| x.scaled(d.powi(-4)))
}

/// `Ξ` with the m-series cut after `m = m_cut` (primed weighting kept).
pub fn xi_wire_partial(cfg: &WireConfig, m_cut: usize, settings: &QuadSettings) -> Result<XiTriple> {
    cfg.validate()?;
    settings.validate()?;
    let d = cfg.gap();
    let kern = Kernel::new(cfg.radius, cfg.rho, settings.series_tail_tol, settings.m_max);
    let ret = retardation_for(cfg);
    run_quadrature(settings, |t, buf| {
        let s = kern.sums_upto(t, m_cut, buf)?;
        Ok(kern.integrand(t, &s, ret))
    })
    .map(|x| x.scaled(d.powi(-3)))
}

/// Integrates a per-`t` triple over `(0, ∞)`, threading a scratch buffer and
/// any error raised inside the integrand.
fn run_quadrature<F>(settings: &QuadSettings, f: F) -> Result<XiTriple>
where
    F: Fn(f64, &mut Vec<f64>) -> Result<[f64; 3]>,
{
    let scratch = RefCell::new(Vec::new());
    let failure: RefCell<Option<Error>> = RefCell::new(None);
    let res = integrate_semi_infinite_vec(
        |t| {
            if failure.borrow().is_some() {
                return [0.0; 3];
            }
            match f(t, &mut scratch.borrow_mut()) {
                Ok(v) => v,
                Err(e) => {
                    *failure.borrow_mut() = Some(e);
                    [0.0; 3]
                }
            }
        },
        0.5,
        settings,
    );
    if let Some(e) = failure.into_inner() {
        return Err(e);
    }
    Ok(triple(res?))
}

fn triple(r: [QuadResult; 3]) -> XiTriple {
    XiTriple::new(r[0].value, r[1].value, r[2].value).with_error(r.iter().map(|q| q.error_estimate).fold(0.0, f64::max))
}

/// Dimensionless triple (to be scaled by a power of `d`).
fn integrate(radius: f64, rho: f64, ret: Retardation, settings: &QuadSettings) -> Result<XiTriple> {
    settings.validate()?;
    let kern = Kernel::new(radius, rho, settings.series_tail_tol, settings.m_max);
    let mut x = run_quadrature(settings, |t, buf| {
        let s: MSums = kern.sums(t, buf)?;
        Ok(kern.integrand(t, &s, ret))
    })?;
    let truncation = 3.0 * settings.series_tail_tol * x.components().iter().fold(0.0f64, |m, c| m.max(c.abs()));
    x.error_estimate += truncation;
    Ok(x)
}

fn summand(radius: f64, rho: f64, ret: Retardation, m: usize, settings: &QuadSettings) -> Result<XiTriple> {
    settings.validate()?;
    let kern = Kernel::new(radius, rho, settings.series_tail_tol, settings.m_max);
    let m2 = (m * m) as f64;
    run_quadrature(settings, |t, buf| {
        let k = kern.single(t, m, buf)?;
        let s = MSums {
            a: k.a,
            b_m2: m2 * k.b,
            c: k.c,
            d_m2: m2 * k.d,
            d: k.d,
            terms: m,
        };
        Ok(kern.integrand(t, &s, ret))
    })
}
