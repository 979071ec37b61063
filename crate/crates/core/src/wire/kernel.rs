//! The k-integrand of the wire response functions with the m-series summed
//! inside the integral.
//!
//! Everything is expressed in units of the gap `d = ρ - R`: `t = k d`,
//! `a = R/d`, `b = ρ/d`. For order `m` define
//!
//! ```text
//! Q_m = I_m(ta)/K_m(ta) · K_m(tb)²
//! A_m = Q_m (K'_m/K_m)(tb)²        B_m = Q_m (I'_m/I_m)(ta) / (K'_m/K_m)(ta)
//! C_m = B_m (K'_m/K_m)(tb)²        D_m = Q_m
//! ```
//!
//! so that with the retardation factors `g1, g2, g3`
//!
//! ```text
//! Ξ_ρ ∝ ∫ dt t [g1 Σ'A + g2 Σ' m² B / (t b)²]
//! Ξ_φ ∝ ∫ dt t [g2 Σ'C + g1 Σ' m² D / (t b)²]
//! Ξ_z ∝ ∫ dt t  g3 Σ'D
//! ```
//!
//! `Q_m` is built from `Q_0` by the ratio recurrences of the Bessel functions,
//! which keeps the explicit `e^{-2t}` damping factor exact.

use crate::error::{Error, Result};
use crate::quad::SeriesStop;
use crate::specfun::{i01_scaled, i_ratios, k01_scaled};

/// How the frequency integral has been reduced.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Retardation {
    /// `E = 0`: factors `(t, 0, t)`.
    None,
    /// Finite `e = E d`.
    Finite(f64),
    /// Coefficient of `1/E` as `E → ∞`: factors `(t²/2, -t²/2, t²)`.
    Limit,
}

impl Retardation {
    /// `(g1, g2, g3)` at `t`, in cancellation-free form.
    pub fn factors(&self, t: f64) -> (f64, f64, f64) {
        match *self {
            Retardation::None => (t, 0.0, t),
            Retardation::Finite(e) => {
                let s = e.hypot(t);
                let t2 = t * t;
                (t2 / (s + e), -e * t2 / (s * (s + e)), t2 / s)
            }
            Retardation::Limit => {
                let t2 = t * t;
                (0.5 * t2, -0.5 * t2, t2)
            }
        }
    }
}

/// The five m-series at one value of `t`.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct MSums {
    pub a: f64,
    pub b_m2: f64,
    pub c: f64,
    pub d_m2: f64,
    pub d: f64,
    /// Highest order that contributed.
    pub terms: usize,
}

/// Per-order kernel values `(A_m, B_m, C_m, D_m)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MTerms {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
}

#[derive(Debug, Clone, Copy)]
pub struct Kernel {
    pub a: f64,
    pub b: f64,
    pub tol: f64,
    pub m_max: usize,
}

/// Beyond this `t` the damping `e^{-2t}` makes the integrand negligible
/// (below ~1e-18 of its peak even after the ~sqrt(t a b) growth of the sums).
const T_NEGLIGIBLE: f64 = 32.0;

impl Kernel {
    pub fn new(r: f64, rho: f64, tol: f64, m_max: usize) -> Self {
        let d = rho - r;
        Kernel {
            a: r / d,
            b: rho / d,
            tol,
            m_max,
        }
    }

    fn initial_top(&self, t: f64) -> usize {
        let gauss = 6.0 * (t * self.a * self.b).sqrt();
        let geometric = 12.0 / (self.b / self.a).ln();
        32 + gauss.min(geometric).min(self.m_max as f64) as usize
    }

    /// Visits `(m, A_m, B_m, C_m, D_m)` for `m = 0, 1, ...` until `visit`
    /// returns true. The visitor sees every order at most once per call of
    /// `visit`, but orders may be replayed from 0 after the ratio table grows,
    /// so `visit` must reset its state when it sees `m == 0`.
    fn walk<V: FnMut(usize, MTerms) -> bool>(&self, t: f64, ratios: &mut Vec<f64>, mut visit: V) -> Result<()> {
        let x = t * self.a;
        let y = t * self.b;
        let (i0, _) = i01_scaled(x);
        let (k0x, k1x) = k01_scaled(x);
        let (k0y, k1y) = k01_scaled(y);
        let q0 = i0 / k0x * k0y * k0y * (-2.0 * t).exp();
        let mut top = self.initial_top(t);
        loop {
            i_ratios(x, top, ratios);
            let mut q = q0;
            let mut sx = k1x / k0x;
            let mut sy = k1y / k0y;
            let (mut sx_prev, mut sy_prev) = (sx, sy);
            for m in 0..top {
                let ri = ratios[m];
                let (lkx, lky, lix) = if m == 0 {
                    (-sx, -sy, ri)
                } else {
                    (
                        -0.5 * (1.0 / sx_prev + sx),
                        -0.5 * (1.0 / sy_prev + sy),
                        0.5 * (1.0 / ratios[m - 1] + ri),
                    )
                };
                let ky2 = lky * lky;
                let bm = q * lix / lkx;
                let terms = MTerms {
                    a: q * ky2,
                    b: bm,
                    c: bm * ky2,
                    d: q,
                };
                if visit(m, terms) {
                    return Ok(());
                }
                q *= ri * sy * sy / sx;
                sx_prev = sx;
                sy_prev = sy;
                let two_m1 = 2.0 * (m + 1) as f64;
                sx = 1.0 / sx + two_m1 / x;
                sy = 1.0 / sy + two_m1 / y;
            }
            if top >= self.m_max {
                return Err(Error::SeriesNoConvergence {
                    value: f64::NAN,
                    error_estimate: f64::NAN,
                    terms: top,
                });
            }
            top = (2 * top).min(self.m_max);
        }
    }

    /// The five primed m-series at `t`, truncated by the series stopping rule.
    pub fn sums(&self, t: f64, ratios: &mut Vec<f64>) -> Result<MSums> {
        self.sums_inner(t, None, ratios)
    }

    /// The five primed m-series at `t` summed over exactly `m = 0..=m_cut`.
    pub fn sums_upto(&self, t: f64, m_cut: usize, ratios: &mut Vec<f64>) -> Result<MSums> {
        let probe = Kernel {
            m_max: self.m_max.max(m_cut + 2),
            ..*self
        };
        probe.sums_inner(t, Some(m_cut), ratios)
    }

    fn sums_inner(&self, t: f64, cut: Option<usize>, ratios: &mut Vec<f64>) -> Result<MSums> {
        if t >= T_NEGLIGIBLE {
            return Ok(MSums::default());
        }
        let mut s = MSums::default();
        let mut stop = SeriesStop::new(self.tol);
        self.walk(t, ratios, |m, k| {
            if m == 0 {
                s = MSums::default();
                stop = SeriesStop::new(self.tol);
            }
            let w = if m == 0 { 0.5 } else { 1.0 };
            let m2 = (m * m) as f64;
            let terms = [w * k.a, m2 * k.b, w * k.c, m2 * k.d, w * k.d];
            s.a += terms[0];
            s.b_m2 += terms[1];
            s.c += terms[2];
            s.d_m2 += terms[3];
            s.d += terms[4];
            s.terms = m;
            if let Some(cut) = cut {
                return m >= cut;
            }
            let totals = [s.a, s.b_m2, s.c, s.d_m2, s.d];
            let small = m >= 2
                && terms
                    .iter()
                    .zip(totals.iter())
                    .all(|(t, tot)| t.abs() <= self.tol * tot.abs());
            stop.push_small(small)
        })
        .map_err(|e| match e {
            Error::SeriesNoConvergence { terms, .. } => Error::SeriesNoConvergence {
                value: s.d,
                error_estimate: f64::NAN,
                terms,
            },
            other => other,
        })?;
        Ok(s)
    }

    /// Kernel values of the single order `m` at `t`.
    pub fn single(&self, t: f64, m: usize, ratios: &mut Vec<f64>) -> Result<MTerms> {
        if t >= T_NEGLIGIBLE {
            return Ok(MTerms {
                a: 0.0,
                b: 0.0,
                c: 0.0,
                d: 0.0,
            });
        }
        let mut out = None;
        let probe = Kernel {
            m_max: self.m_max.max(m + 2),
            ..*self
        };
        probe.walk(t, ratios, |j, k| {
            if j == m {
                out = Some(k);
                true
            } else {
                false
            }
        })?;
        Ok(out.expect("walk visits every order up to m"))
    }

    /// `(2/π) t [..]` for the three components at `t`, given the m-sums.
    pub fn integrand(&self, t: f64, s: &MSums, ret: Retardation) -> [f64; 3] {
        if t == 0.0 {
            return [0.0; 3];
        }
        let (g1, g2, g3) = ret.factors(t);
        let tb2 = (t * self.b) * (t * self.b);
        let pre = std::f64::consts::FRAC_2_PI * t;
        let rho = g1 * s.a + if g2 == 0.0 { 0.0 } else { g2 * s.b_m2 / tb2 };
        let phi = (if g2 == 0.0 { 0.0 } else { g2 * s.c }) + g1 * s.d_m2 / tb2;
        [pre * rho, pre * phi, pre * g3 * s.d]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::{bessel_i_scaled, bessel_k_scaled};

    #[test]
    fn recurrence_matches_direct_evaluation() {
        let k = Kernel::new(1.0, 1.7, 1e-14, 5000);
        let mut buf = Vec::new();
        for &t in &[1e-3, 0.3, 2.0, 15.0] {
            for &m in &[0usize, 1, 4, 17] {
                let got = k.single(t, m, &mut buf).unwrap();
                let (x, y) = (t * k.a, t * k.b);
                let i = bessel_i_scaled(m, x).unwrap();
                let kx = bessel_k_scaled(m, x).unwrap();
                let ky = bessel_k_scaled(m, y).unwrap();
                let q = (i.ln_value() - kx.ln_value() + 2.0 * ky.ln_value()).exp();
                let lky = ky.log_derivative();
                let b = q * i.log_derivative() / kx.log_derivative();
                assert!((got.d / q - 1.0).abs() < 1e-11, "t={t} m={m}");
                assert!((got.a / (q * lky * lky) - 1.0).abs() < 1e-11);
                assert!((got.b / b - 1.0).abs() < 1e-11);
                assert!((got.c / (b * lky * lky) - 1.0).abs() < 1e-11);
            }
        }
    }

    #[test]
    fn signs_of_kernel_terms() {
        let k = Kernel::new(1.0, 1.2, 1e-12, 5000);
        let mut buf = Vec::new();
        for m in 0..6 {
            let v = k.single(0.8, m, &mut buf).unwrap();
            assert!(v.a > 0.0 && v.d > 0.0 && v.b < 0.0 && v.c < 0.0);
        }
    }

    #[test]
    fn factors_are_cancellation_free() {
        let (g1, g2, g3) = Retardation::Finite(1e8).factors(1e-3);
        assert!((g1 / (1e-6 / 2e8) - 1.0).abs() < 1e-12);
        assert!((g2 / (-1e-6 / 2e8) - 1.0).abs() < 1e-12);
        assert!(g3 > 0.0);
    }
}
