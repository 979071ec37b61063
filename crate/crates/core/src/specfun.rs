//! Exponentially scaled modified Bessel functions `I_m`, `K_m` of integer order
//! together with their first derivatives.
//!
//! Orders 0 and 1 are evaluated directly (power series / asymptotic series for
//! `I`, a trapezoidal rule on `∫ exp(-x cosh t) cosh(νt) dt` for `K`). Higher
//! orders use ratio recurrences: downward for `I` (seeded by a continued
//! fraction), upward for `K`.

use crate::error::{Error, Result};

/// Largest order accepted by the public evaluators.
pub const MAX_ORDER: usize = 100_000;

const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;
const RESCALE: f64 = 1e200;
const LN_RESCALE: f64 = 460.517_018_598_809_1;

/// A scaled Bessel value and derivative.
///
/// The unscaled function is `value * exp(scale_exponent)` and likewise for the
/// derivative. For `I_m(x)` the exponent is normally `x`, for `K_m(x)` it is
/// `-x`; when the conventionally scaled value would leave the normal `f64`
/// range an additional multiple of `ln(1e200)` is moved into the exponent.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BesselPair {
    pub value: f64,
    pub derivative: f64,
    pub scale_exponent: f64,
}

impl BesselPair {
    /// `(f(x), f'(x))` without scaling. Overflows to infinity for large arguments.
    pub fn unscaled(&self) -> (f64, f64) {
        let s = self.scale_exponent.exp();
        (self.value * s, self.derivative * s)
    }

    /// Natural logarithm of the unscaled function value.
    pub fn ln_value(&self) -> f64 {
        self.value.ln() + self.scale_exponent
    }

    /// `f'(x) / f(x)`, independent of the scaling.
    pub fn log_derivative(&self) -> f64 {
        self.derivative / self.value
    }
}

fn check_args(m: usize, x: f64) -> Result<()> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::Domain(format!(
            "Bessel argument must be positive and finite, got {x}"
        )));
    }
    if m > MAX_ORDER {
        return Err(Error::OrderTooLarge {
            order: m,
            max: MAX_ORDER,
        });
    }
    Ok(())
}

/// `e^{-x} I_m(x)` and `e^{-x} I'_m(x)` (see [`BesselPair`] for the exponent).
pub fn bessel_i_scaled(m: usize, x: f64) -> Result<BesselPair> {
    check_args(m, x)?;
    let (i0, _) = i01_scaled(x);
    let top = m.max(x.ceil() as usize) + 16;
    let mut r = i_ratio_cf(top, x);
    let mut prod = 1.0;
    let mut shifts = 0i32;
    let mut r_m = 0.0;
    let mut r_m1 = 0.0;
    for j in (0..=top).rev() {
        if j == m {
            r_m = r;
        }
        if j + 1 == m {
            r_m1 = r;
        }
        if j < m {
            prod *= r;
            if prod < 1.0 / RESCALE {
                prod *= RESCALE;
                shifts += 1;
            }
        }
        if j > 0 {
            r = 1.0 / (2.0 * j as f64 / x + r);
        }
    }
    let value = i0 * prod;
    let dlog = if m == 0 { r_m } else { 0.5 * (1.0 / r_m1 + r_m) };
    Ok(BesselPair {
        value,
        derivative: value * dlog,
        scale_exponent: x - shifts as f64 * LN_RESCALE,
    })
}

/// `e^{x} K_m(x)` and `e^{x} K'_m(x)` (see [`BesselPair`] for the exponent).
pub fn bessel_k_scaled(m: usize, x: f64) -> Result<BesselPair> {
    check_args(m, x)?;
    let (k0, k1) = k01_scaled(x);
    let mut s = k1 / k0;
    let mut prod = 1.0;
    let mut shifts = 0i32;
    let mut s_prev = s;
    for j in 0..m {
        prod *= s;
        if prod > RESCALE {
            prod /= RESCALE;
            shifts += 1;
        }
        s_prev = s;
        s = 1.0 / s + 2.0 * (j + 1) as f64 / x;
    }
    let value = k0 * prod;
    let dlog = if m == 0 { -s } else { -0.5 * (1.0 / s_prev + s) };
    Ok(BesselPair {
        value,
        derivative: value * dlog,
        scale_exponent: -x + shifts as f64 * LN_RESCALE,
    })
}

/// `I_m K'_m - I'_m K_m` assembled from the scaled pairs; equals `-1/x`.
pub fn wronskian_check(m: usize, x: f64) -> Result<f64> {
    let i = bessel_i_scaled(m, x)?;
    let k = bessel_k_scaled(m, x)?;
    let scale = (i.scale_exponent + k.scale_exponent).exp();
    Ok(scale * (i.value * k.derivative - i.derivative * k.value))
}

/// `(e^{-x} I_0(x), e^{-x} I_1(x))`.
pub fn i01_scaled(x: f64) -> (f64, f64) {
    if x <= 25.0 {
        let q = 0.25 * x * x;
        let mut t0 = 1.0;
        let mut t1 = 0.5 * x;
        let mut s0 = t0;
        let mut s1 = t1;
        let mut k = 1.0;
        loop {
            t0 *= q / (k * k);
            t1 *= q / (k * (k + 1.0));
            s0 += t0;
            s1 += t1;
            if t0 <= 1e-17 * s0 {
                break;
            }
            k += 1.0;
        }
        let e = (-x).exp();
        (s0 * e, s1 * e)
    } else {
        (i_asymptotic(0.0, x), i_asymptotic(1.0, x))
    }
}

fn i_asymptotic(nu: f64, x: f64) -> f64 {
    let mu = 4.0 * nu * nu;
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 1..=60 {
        let kf = k as f64;
        let odd = 2.0 * kf - 1.0;
        term *= -(mu - odd * odd) / (8.0 * kf * x);
        sum += term;
        if term.abs() < 1e-17 * sum.abs() {
            break;
        }
    }
    sum / (2.0 * std::f64::consts::PI * x).sqrt()
}

/// `(e^{x} K_0(x), e^{x} K_1(x))`.
pub fn k01_scaled(x: f64) -> (f64, f64) {
    if x < 1e-5 {
        let l = (0.5 * x).ln() + EULER_GAMMA;
        let q = 0.25 * x * x;
        let k0 = -l * (1.0 + q) + q;
        let k1 = 1.0 / x + 0.5 * x * l - 0.25 * x;
        let e = x.exp();
        return (k0 * e, k1 * e);
    }
    // e^x K_nu(x) = ∫_0^∞ exp(-2x sinh²(t/2)) cosh(nu t) dt; the integrand is
    // analytic and doubly decaying, so the trapezoidal rule converges
    // geometrically in 1/h.
    let h = 0.25f64.min(0.5 / x.sqrt());
    let t_end = (1.0 + 45.0 / x).acosh();
    let n = (t_end / h).ceil() as usize + 1;
    let mut s0 = 0.5;
    let mut s1 = 0.5;
    for j in 1..=n {
        let t = j as f64 * h;
        let sh = (0.5 * t).sinh();
        let w = (-2.0 * x * sh * sh).exp();
        s0 += w;
        s1 += w * t.cosh();
    }
    (s0 * h, s1 * h)
}

/// `I_{nu+1}(x) / I_nu(x)` from the continued fraction (modified Lentz).
pub fn i_ratio_cf(nu: usize, x: f64) -> f64 {
    const TINY: f64 = 1e-300;
    let mut f = TINY;
    let mut c = f;
    let mut d = 0.0;
    let max_iter = 100_000 + 10 * (x as usize);
    for j in 1..=max_iter {
        let b = 2.0 * (nu + j) as f64 / x;
        d += b;
        if d == 0.0 {
            d = TINY;
        }
        c = b + 1.0 / c;
        if c == 0.0 {
            c = TINY;
        }
        d = 1.0 / d;
        let delta = c * d;
        f *= delta;
        if (delta - 1.0).abs() < 1e-16 {
            break;
        }
    }
    f
}

/// Fills `out[j] = I_{j+1}(x) / I_j(x)` for `j = 0..=top`.
pub fn i_ratios(x: f64, top: usize, out: &mut Vec<f64>) {
    out.clear();
    out.resize(top + 1, 0.0);
    let mut r = i_ratio_cf(top, x);
    for j in (0..=top).rev() {
        out[j] = r;
        if j > 0 {
            r = 1.0 / (2.0 * j as f64 / x + r);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_argument_limits() {
        let i0 = bessel_i_scaled(0, 1e-12).unwrap();
        assert!((i0.value - 1.0).abs() < 1e-11);
        let i3 = bessel_i_scaled(3, 1e-6).unwrap();
        assert!(i3.unscaled().0 < 1e-18);
    }

    #[test]
    fn k0_derivative_is_minus_k1() {
        for &x in &[1e-3, 0.5, 3.0, 70.0] {
            let k0 = bessel_k_scaled(0, x).unwrap();
            let k1 = bessel_k_scaled(1, x).unwrap();
            assert!((k0.derivative + k1.value).abs() < 1e-15 * k1.value);
        }
    }

    #[test]
    fn large_argument_k() {
        let k = bessel_k_scaled(0, 1e6).unwrap();
        let lead = (std::f64::consts::PI / 2e6).sqrt() * (1.0 - 1.0 / 8e6);
        assert!((k.value / lead - 1.0).abs() < 1e-12);
    }

    #[test]
    fn wronskian_examples() {
        assert!((wronskian_check(0, 1.0).unwrap() + 1.0).abs() < 1e-13);
        assert!((wronskian_check(5, 0.1).unwrap() + 10.0).abs() < 1e-11);
        assert!((wronskian_check(50, 30.0).unwrap() + 1.0 / 30.0).abs() < 1e-15);
    }

    #[test]
    fn rejects_bad_arguments() {
        assert!(bessel_i_scaled(0, 0.0).is_err());
        assert!(bessel_k_scaled(1, -1.0).is_err());
        assert!(bessel_i_scaled(MAX_ORDER + 1, 1.0).is_err());
        assert!(bessel_k_scaled(0, f64::NAN).is_err());
    }

    #[test]
    fn huge_orders_stay_finite() {
        let k = bessel_k_scaled(2000, 1e-4).unwrap();
        assert!(k.value.is_finite() && k.value > 0.0);
        let i = bessel_i_scaled(2000, 1e-4).unwrap();
        assert!(i.value.is_finite() && i.value > 0.0);
        assert!((wronskian_check(2000, 1e-4).unwrap() * 1e-4 + 1.0).abs() < 1e-10);
    }
}
