//! Closed-form-like approximations to the fully retarded wire response.

use std::f64::consts::PI;

use crate::error::Result;
use crate::quad::{integrate_semi_infinite_vec, QuadSettings};
use crate::specfun::{i01_scaled, k01_scaled};
use crate::xi::XiTriple;

use super::validate_geometry;

/// Lowest-order Bessel combinations at `t = k d`, each carrying the damping
/// `e^{-2t}`.
struct LowOrder {
    /// `(I_0/K_0)(ta) K_0(tb)²`
    i0k0_k0: f64,
    /// `(I_0/K_0)(ta) K_1(tb)²`
    i0k0_k1: f64,
    /// `(I_1/K_1)(ta) K_1(tb)²`
    i1k1_k1: f64,
    /// `-(I_1'/K_1')(ta) K_1(tb)²`
    di1dk1_k1: f64,
    /// `-(I_1'/K_1')(ta) K_1'(tb)²`
    di1dk1_dk1: f64,
}

fn low_order(t: f64, a: f64, b: f64) -> LowOrder {
    let (x, y) = (t * a, t * b);
    let (i0, i1) = i01_scaled(x);
    let (k0x, k1x) = k01_scaled(x);
    let (k0y, k1y) = k01_scaled(y);
    let damp = (-2.0 * t).exp();
    let i1_over_x = if x < 1e-8 { 0.5 } else { i1 / x };
    let di1 = i0 - i1_over_x;
    let dk1 = k0x + k1x / x;
    let dk1y = k0y + k1y / y;
    let ik0 = i0 / k0x * damp;
    let dd = di1 / dk1 * damp;
    LowOrder {
        i0k0_k0: ik0 * k0y * k0y,
        i0k0_k1: ik0 * k1y * k1y,
        i1k1_k1: i1 / k1x * damp * k1y * k1y,
        di1dk1_k1: dd * k1y * k1y,
        di1dk1_dk1: dd * dk1y * dk1y,
    }
}

/// `A(x)(A² + 4A + 1)/(1 - A)⁴` with
/// `A(x) = r² ((1+√(1+x²))/(1+√(1+r²x²)))² exp(2(√(1+r²x²) - √(1+x²)))`.
fn geometric_sum(x: f64, r: f64) -> f64 {
    let s1 = x.hypot(1.0);
    let s2 = (r * x).hypot(1.0);
    let diff = -x * x * (1.0 - r * r) / (s1 + s2);
    let ln_a = 2.0 * r.ln() + 2.0 * (-diff / (1.0 + s2)).ln_1p() + 2.0 * diff;
    let a = ln_a.exp();
    let one_minus = -ln_a.exp_m1();
    a * (a * a + 4.0 * a + 1.0) / one_minus.powi(4)
}

/// Large-radius (`d ≲ R`) approximation to [`super::xi_wire_retarded_limit`].
///
/// The lowest Bessel orders are kept exactly; all higher orders are replaced
/// by their uniform asymptotic forms and summed as a geometric series.
pub fn xi_wire_large_radius_approx(radius: f64, rho: f64, settings: &QuadSettings) -> Result<XiTriple> {
    validate_geometry(radius, rho)?;
    settings.validate()?;
    let d = rho - radius;
    let (a, b) = (radius / d, rho / d);
    let low = integrate_semi_infinite_vec(
        |t| {
            let l = low_order(t, a, b);
            let t3 = t * t * t;
            [t3 * l.i0k0_k1, t3 * l.i1k1_k1, t3 * l.i0k0_k0]
        },
        0.5,
        settings,
    )?;
    let r = radius / rho;
    let rest = integrate_semi_infinite_vec(
        |x| {
            let g = geometric_sum(x, r);
            if g == 0.0 {
                return [0.0; 2];
            }
            let s = x.hypot(1.0);
            [x * (s + 1.0 / s) * g, x * x * x / s * g]
        },
        1.0,
        settings,
    )?;
    let (d4, rho4) = (d.powi(4), rho.powi(4));
    let xr = rest[0].value / rho4;
    let xz = rest[1].value / rho4;
    let err = low.iter().map(|q| q.error_estimate / d4).fold(0.0, f64::max)
        + rest.iter().map(|q| q.error_estimate / rho4).fold(0.0, f64::max);
    Ok(XiTriple::new(
        (low[0].value / d4 + xr) / (2.0 * PI),
        (low[1].value / d4 + xr) / (2.0 * PI),
        (low[2].value / d4 + xz) / PI,
    )
    .with_error(err / PI))
}

/// Thin-wire (`R ≪ d`) approximation to [`super::xi_wire_retarded_limit`],
/// keeping only the orders `m = 0, 1`.
pub fn xi_wire_small_radius_approx(radius: f64, rho: f64, settings: &QuadSettings) -> Result<XiTriple> {
    validate_geometry(radius, rho)?;
    settings.validate()?;
    let d = rho - radius;
    let (a, b) = (radius / d, rho / d);
    let inv_b2 = 1.0 / (b * b);
    let r = integrate_semi_infinite_vec(
        |t| {
            let l = low_order(t, a, b);
            let t2 = t * t;
            [
                t * (t2 * l.i0k0_k1 + 2.0 * inv_b2 * l.di1dk1_k1),
                t * ((t2 + 2.0 * inv_b2) * l.i1k1_k1 + 2.0 * t2 * l.di1dk1_dk1),
                t * t2 * l.i0k0_k0,
            ]
        },
        0.5,
        settings,
    )?;
    let d4 = d.powi(4);
    let err = r.iter().map(|q| q.error_estimate).fold(0.0, f64::max) / (PI * d4);
    Ok(XiTriple::new(
        r[0].value / (2.0 * PI * d4),
        r[1].value / (2.0 * PI * d4),
        r[2].value / (PI * d4),
    )
    .with_error(err))
}
