//! The curly-bracket integrands of the half-plane response, `f(η)`, so that
//! `Ξ = (16πρ³)⁻¹ ∫ e^{-2ρEη} f(η) dη`.
//!
//! Each bracket is split as `f = P + T`. The free-space part
//! `P = N/(η⁴ w^k) - 4/η⁴` (with `w = √(1+η²)`) is rationalized so that it
//! has no cancellation at small `η`. The image part
//! `T = (α w^k + cos φ · β) / (w^k (η² + sin²φ)³)` is evaluated in one of three
//! ways depending on `h = η²` and `p = 1 + cos φ`:
//!
//! * both small: the joint series in [`super::series`];
//! * `p` small: the numerator is regrouped as `(α - β) + α (w^k - 1) + p β`,
//!   with `α - β` expanded symbolically;
//! * otherwise: the literal expression.

use super::series::{self, Monomial};

/// Above this `max(h, p)` the joint series is no longer accurate to `1e-16`.
const SERIES_LIMIT: f64 = 0.02;
/// Below this `p` the regrouped form is used instead of the literal one.
const REGROUP_LIMIT: f64 = 0.5;
/// Below this `p` its contribution is beneath double precision, and the
/// integrand is evaluated at the edge (`φ = π`) exactly.
const EDGE_LIMIT: f64 = 1e-17;

#[derive(Debug, Clone, Copy)]
pub(crate) struct Angle {
    /// `sin²φ`
    pub s2: f64,
    pub cos: f64,
    /// `1 + cos φ = 2 cos²(φ/2)`
    pub p: f64,
}

impl Angle {
    /// `phi` in `(0, π]`.
    pub fn new(phi: f64) -> Self {
        let half = 0.5 * phi;
        let p = 2.0 * half.cos().powi(2);
        let q = 2.0 * half.sin().powi(2);
        Angle {
            s2: p * q,
            cos: phi.cos(),
            p,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Comp {
    Rho,
    Phi,
    Z,
}

impl Comp {
    fn k(self) -> i32 {
        match self {
            Comp::Rho => 3,
            _ => 5,
        }
    }

    fn table(self) -> &'static [Monomial] {
        match self {
            Comp::Rho => &series::RHO,
            Comp::Phi => &series::PHI,
            Comp::Z => &series::Z,
        }
    }

    /// `P` as `R / (w^k (N + 4 w^k))`, where `R = (N² - 16 w^{2k}) / η⁴`.
    fn free(self, h: f64, wk: f64) -> f64 {
        let (n, r) = match self {
            Comp::Rho => ((3.0 * h + 6.0) * h + 4.0, (9.0 * h + 20.0) * h + 12.0),
            Comp::Phi => (
                ((3.0 * h + 6.0) * h + 10.0) * h + 4.0,
                (((9.0 * h + 20.0) * h + 16.0) * h - 16.0) * h - 12.0,
            ),
            Comp::Z => ((9.0 * h + 10.0) * h + 4.0, -(((16.0 * h - 1.0) * h - 20.0) * h - 12.0)),
        };
        r / (wk * (n + 4.0 * wk))
    }

    /// `(α, β)` of the image part.
    fn alpha_beta(self, h: f64, s: f64) -> (f64, f64) {
        match self {
            Comp::Rho => (
                4.0 * ((2.0 * h + 1.0) * s - h),
                (2.0 + h) * s * s + 2.0 * s * ((3.0 * h + 6.0) * h + 2.0) - h * ((3.0 * h + 6.0) * h + 4.0),
            ),
            Comp::Phi => (
                4.0 * ((1.0 - 2.0 * h) * s + h),
                (2.0 - 2.0 * h - h * h) * s * s
                    + 2.0 * s * (2.0 + 2.0 * h - (6.0 + 3.0 * h) * h * h)
                    + h * (((3.0 * h + 6.0) * h + 10.0) * h + 4.0),
            ),
            Comp::Z => (
                4.0 * (s - h),
                -((h - 2.0) * s * s + 2.0 * ((h - 4.0) * h - 2.0) * s + h * ((9.0 * h + 10.0) * h + 4.0)),
            ),
        }
    }

    /// `α - β`, expanded so that the leading cancellations are exact.
    fn alpha_minus_beta(self, h: f64, s: f64) -> f64 {
        let s2 = s * s;
        match self {
            Comp::Rho => h * h * (3.0 * h + 6.0 - 6.0 * s) - s2 * (h + 2.0) - 4.0 * s * h,
            Comp::Phi => {
                s2 * (h * h + 2.0 * h - 2.0) + 6.0 * s * h * (h * h + 2.0 * h - 2.0)
                    - h * h * ((3.0 * h + 6.0) * h + 10.0)
            }
            Comp::Z => s2 * (h - 2.0) + 2.0 * s * h * (h - 4.0) + h * h * (9.0 * h + 10.0),
        }
    }

    fn image_series(self, h: f64, p: f64) -> f64 {
        let mut hp = [1.0; 11];
        let mut pp = [1.0; 11];
        for i in 1..11 {
            hp[i] = hp[i - 1] * h;
            pp[i] = pp[i - 1] * p;
        }
        // Highest degree first so the small terms accumulate before the large.
        self.table()
            .iter()
            .rev()
            .fold(0.0, |acc, &(i, j, c)| acc + c * hp[i as usize] * pp[j as usize])
    }

    fn eval(self, eta: f64, ang: &Angle) -> f64 {
        let h = eta * eta;
        let k = self.k();
        let wk1 = (0.5 * k as f64 * h.ln_1p()).exp_m1();
        let wk = 1.0 + wk1;
        let free = self.free(h, wk);
        if ang.p < EDGE_LIMIT {
            return match self {
                Comp::Phi => 0.0,
                _ => 2.0 * free,
            };
        }
        let p = ang.p;
        let s = ang.s2;
        let image = if h.max(p) < SERIES_LIMIT {
            self.image_series(h, p)
        } else {
            let u = h + s;
            let (a, b) = self.alpha_beta(h, s);
            if p < REGROUP_LIMIT {
                let num = self.alpha_minus_beta(h, s) + a * wk1 + p * b;
                num / (wk * u * u * u)
            } else {
                (a + ang.cos * b / wk) / (u * u * u)
            }
        };
        free + image
    }

    /// The bracket exactly as printed; loses accuracy for small `η`.
    fn naive(self, eta: f64, phi: f64) -> f64 {
        let h = eta * eta;
        let (s, c) = (phi.sin().powi(2), phi.cos());
        let w = (1.0 + h).sqrt();
        let wk = w.powi(self.k());
        let u = h + s;
        let n = match self {
            Comp::Rho => 3.0 * h * h + 6.0 * h + 4.0,
            Comp::Phi => 3.0 * h * h * h + 6.0 * h * h + 10.0 * h + 4.0,
            Comp::Z => 9.0 * h * h + 10.0 * h + 4.0,
        };
        let (a, b) = self.alpha_beta(h, s);
        n / (h * h * wk) - 4.0 / (h * h) + a / (u * u * u) + c * b / (wk * u * u * u)
    }
}

const COMPS: [Comp; 3] = [Comp::Rho, Comp::Phi, Comp::Z];

/// `(f_ρ, f_φ, f_z)` at `η > 0` and `φ ∈ (0, 2π)`.
pub fn bracket_values(eta: f64, phi: f64) -> [f64; 3] {
    brackets(eta, &Angle::new(super::canonical_phi(phi)))
}

/// As [`bracket_values`], but evaluating the printed expressions literally.
pub fn bracket_values_naive(eta: f64, phi: f64) -> [f64; 3] {
    brackets_naive(eta, super::canonical_phi(phi))
}

pub(crate) fn brackets(eta: f64, ang: &Angle) -> [f64; 3] {
    COMPS.map(|c| c.eval(eta, ang))
}

/// Literal evaluation of the printed brackets, for cross-checks.
fn brackets_naive(eta: f64, phi: f64) -> [f64; 3] {
    COMPS.map(|c| c.naive(eta, phi))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn agrees_with_literal_form_away_from_zero() {
        for &phi in &[0.3, PI / 2.0, 2.0, 2.8, 3.1] {
            let ang = Angle::new(phi);
            for &eta in &[0.1, 0.5, 2.0, 7.0] {
                let a = brackets(eta, &ang);
                let b = brackets_naive(eta, phi);
                for i in 0..3 {
                    // The literal P term alone carries ~4e-12 of rounding at
                    // eta = 0.1, which dominates for the tiny edge value of f_phi.
                    assert!(
                        (a[i] - b[i]).abs() < 1e-9 * a[i].abs() + 1e-11,
                        "phi={phi} eta={eta} i={i}: {} vs {}",
                        a[i],
                        b[i]
                    );
                }
            }
        }
    }

    #[test]
    fn branches_join_smoothly() {
        // Straddle the series/regrouped boundary in h and in p.
        for &phi in &[PI - 0.19, PI - 0.21, PI - 1.04, PI - 1.06] {
            let ang = Angle::new(phi);
            let e0 = SERIES_LIMIT.sqrt();
            let lo = brackets(e0 * (1.0 - 1e-13), &ang);
            let hi = brackets(e0 * (1.0 + 1e-13), &ang);
            for i in 0..3 {
                assert!(
                    (lo[i] - hi[i]).abs() < 1e-12 * lo[i].abs().max(1.0),
                    "phi={phi} {lo:?} {hi:?}"
                );
            }
        }
    }

    #[test]
    fn edge_null_is_exact() {
        let ang = Angle::new(PI);
        for k in 0..200 {
            let eta = 1e-6 * 1.1f64.powi(k);
            assert!(brackets(eta, &ang)[1].abs() < 1e-14);
        }
    }

    #[test]
    fn finite_at_the_origin() {
        for &phi in &[0.5, PI / 2.0, 3.0, PI] {
            let f = brackets(1e-12, &Angle::new(phi));
            assert!(f.iter().all(|v| v.is_finite()));
        }
        // Leading constant of P + T at the edge: 2 · 3/2.
        let f = brackets(1e-12, &Angle::new(PI));
        assert!((f[0] - 3.0).abs() < 1e-12 && (f[2] - 3.0).abs() < 1e-12);
    }
}
