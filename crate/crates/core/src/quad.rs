//! Adaptive Gauss-Kronrod quadrature and primed-series summation.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use serde::{Deserialize, Serialize};

use crate::error::{require, Error, Result};

/// Tolerances and truncation limits shared by every integral and series.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadSettings {
    pub rel_tol: f64,
    /// Absolute floor for values near zero.
    pub abs_tol: f64,
    pub max_subdivisions: usize,
    pub series_tail_tol: f64,
    /// Hard cap on the order of the wire m-series.
    pub m_max: usize,
}

impl Default for QuadSettings {
    fn default() -> Self {
        QuadSettings {
            rel_tol: 1e-8,
            abs_tol: 1e-14,
            max_subdivisions: 2000,
            series_tail_tol: 1e-10,
            m_max: 50_000,
        }
    }
}

impl QuadSettings {
    pub fn validate(&self) -> Result<()> {
        require(self.rel_tol > 0.0 && self.rel_tol.is_finite(), || {
            format!("rel_tol must be positive, got {}", self.rel_tol)
        })?;
        require(self.abs_tol > 0.0 && self.abs_tol.is_finite(), || {
            format!("abs_tol must be positive, got {}", self.abs_tol)
        })?;
        require(self.series_tail_tol > 0.0 && self.series_tail_tol.is_finite(), || {
            format!("series_tail_tol must be positive, got {}", self.series_tail_tol)
        })?;
        require(self.m_max >= 1, || "m_max must be at least 1".into())?;
        require(self.max_subdivisions >= 1, || {
            "max_subdivisions must be at least 1".into()
        })
    }

    pub fn with_rel_tol(mut self, rel_tol: f64) -> Self {
        self.rel_tol = rel_tol;
        self
    }

    pub fn tolerance_for(&self, value: f64) -> f64 {
        (self.rel_tol * value.abs()).max(self.abs_tol)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadResult {
    pub value: f64,
    pub error_estimate: f64,
    pub evaluations: usize,
    pub converged: bool,
}

// 21-point Kronrod extension of the 10-point Gauss rule. Nodes are the
// non-negative abscissae in decreasing order; odd indices are Gauss nodes.
const XGK: [f64; 11] = [
    0.995_657_163_025_808_1,
    0.973_906_528_517_171_7,
    0.930_157_491_355_708_2,
    0.865_063_366_688_984_5,
    0.780_817_726_586_416_9,
    0.679_409_568_299_024_4,
    0.562_757_134_668_604_7,
    0.433_395_394_129_247_2,
    0.294_392_862_701_460_2,
    0.148_874_338_981_631_22,
    0.0,
];
const WGK: [f64; 11] = [
    0.011_694_638_867_371_874,
    0.032_558_162_307_964_725,
    0.054_755_896_574_351_995,
    0.075_039_674_810_919_96,
    0.093_125_454_583_697_6,
    0.109_387_158_802_297_64,
    0.123_491_976_262_065_84,
    0.134_709_217_311_473_34,
    0.142_775_938_577_060_09,
    0.147_739_104_901_338_49,
    0.149_445_554_002_916_9,
];
const WG: [f64; 5] = [
    0.066_671_344_308_688_14,
    0.149_451_349_150_580_6,
    0.219_086_362_515_982_04,
    0.269_266_719_309_996_35,
    0.295_524_224_714_752_87,
];

#[derive(Debug, Clone, Copy)]
struct Panel<const N: usize> {
    a: f64,
    b: f64,
    value: [f64; N],
    error: [f64; N],
    priority: f64,
}

impl<const N: usize> PartialEq for Panel<N> {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}
impl<const N: usize> Eq for Panel<N> {}
impl<const N: usize> PartialOrd for Panel<N> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl<const N: usize> Ord for Panel<N> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.priority
            .total_cmp(&other.priority)
            .then_with(|| other.a.total_cmp(&self.a))
    }
}

fn eval<const N: usize, F: Fn(f64) -> [f64; N]>(f: &F, x: f64) -> Result<[f64; N]> {
    let v = f(x);
    if v.iter().all(|c| c.is_finite()) {
        Ok(v)
    } else {
        Err(Error::NonFinite { at: x })
    }
}

/// One 21-point Gauss-Kronrod panel with the QUADPACK error heuristic,
/// applied to each component.
fn gk21<const N: usize, F: Fn(f64) -> [f64; N]>(f: &F, a: f64, b: f64) -> Result<Panel<N>> {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let mut fv = [[0.0; N]; 21];
    fv[20] = eval(f, c)?;
    for j in 0..10 {
        let dx = h * XGK[j];
        fv[2 * j] = eval(f, c - dx)?;
        fv[2 * j + 1] = eval(f, c + dx)?;
    }
    let mut value = [0.0; N];
    let mut error = [0.0; N];
    for i in 0..N {
        let fc = fv[20][i];
        let mut res_k = WGK[10] * fc;
        let mut res_g = 0.0;
        let mut res_abs = res_k.abs();
        for j in 0..10 {
            let (f1, f2) = (fv[2 * j][i], fv[2 * j + 1][i]);
            res_k += WGK[j] * (f1 + f2);
            res_abs += WGK[j] * (f1.abs() + f2.abs());
            if j % 2 == 1 {
                res_g += WG[j / 2] * (f1 + f2);
            }
        }
        let mean = 0.5 * res_k;
        let mut res_asc = WGK[10] * (fc - mean).abs();
        for j in 0..10 {
            res_asc += WGK[j] * ((fv[2 * j][i] - mean).abs() + (fv[2 * j + 1][i] - mean).abs());
        }
        let hh = h.abs();
        res_abs *= hh;
        res_asc *= hh;
        let mut err = ((res_k - res_g) * h).abs();
        if res_asc != 0.0 && err != 0.0 {
            err = res_asc * (200.0 * err / res_asc).powf(1.5).min(1.0);
        }
        if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
            err = err.max(50.0 * f64::EPSILON * res_abs);
        }
        value[i] = res_k * h;
        error[i] = err;
    }
    Ok(Panel {
        a,
        b,
        value,
        error,
        priority: 0.0,
    })
}

fn with_priority<const N: usize>(mut p: Panel<N>, tol: &[f64; N]) -> Panel<N> {
    p.priority = (0..N).map(|i| p.error[i] / tol[i]).sum();
    p
}

fn tolerances<const N: usize>(value: &[f64; N], settings: &QuadSettings) -> [f64; N] {
    let mut t = [0.0; N];
    for i in 0..N {
        t[i] = settings.tolerance_for(value[i]);
    }
    t
}

fn all_within<const N: usize>(value: &[f64; N], error: &[f64; N], settings: &QuadSettings) -> bool {
    (0..N).all(|i| error[i] <= settings.tolerance_for(value[i]))
}

fn totals<const N: usize>(heap: &BinaryHeap<Panel<N>>) -> ([f64; N], [f64; N]) {
    // Sum in a fixed order so results do not depend on heap layout.
    let mut v: Vec<&Panel<N>> = heap.iter().collect();
    v.sort_by(|p, q| p.a.total_cmp(&q.a));
    let mut value = [0.0; N];
    let mut error = [0.0; N];
    for p in v {
        for i in 0..N {
            value[i] += p.value[i];
            error[i] += p.error[i];
        }
    }
    (value, error)
}

/// Adaptive 21-point Gauss-Kronrod integration of a vector-valued `f` over
/// `[a, b]`, starting from the given breakpoints. All components share the
/// abscissae; refinement continues until every component meets its tolerance.
pub fn integrate_vec_with_breaks<const N: usize, F: Fn(f64) -> [f64; N]>(
    f: F,
    a: f64,
    b: f64,
    breaks: &[f64],
    settings: &QuadSettings,
) -> Result<[QuadResult; N]> {
    let mut pts: Vec<f64> = std::iter::once(a)
        .chain(breaks.iter().copied().filter(|&p| p > a && p < b))
        .chain(std::iter::once(b))
        .collect();
    pts.sort_by(f64::total_cmp);
    pts.dedup();
    let mut initial = Vec::with_capacity(pts.len());
    let mut evaluations = 0;
    for w in pts.windows(2) {
        initial.push(gk21(&f, w[0], w[1])?);
        evaluations += 21;
    }
    let mut heap: BinaryHeap<Panel<N>> = initial.into_iter().collect();
    let (mut value, mut error) = totals(&heap);
    let tol = tolerances(&value, settings);
    heap = heap.into_iter().map(|p| with_priority(p, &tol)).collect();
    let mut panels = pts.len() - 1;
    let finish = |value: [f64; N], error: [f64; N], evaluations: usize, converged: bool| {
        let mut out = [QuadResult {
            value: 0.0,
            error_estimate: 0.0,
            evaluations,
            converged,
        }; N];
        for i in 0..N {
            out[i].value = value[i];
            out[i].error_estimate = error[i];
        }
        out
    };
    loop {
        if all_within(&value, &error, settings) {
            // Re-sum exactly before accepting; the running totals drift.
            (value, error) = totals(&heap);
            if all_within(&value, &error, settings) {
                return Ok(finish(value, error, evaluations, true));
            }
        }
        let worst = *heap.peek().expect("at least one panel");
        let mid = 0.5 * (worst.a + worst.b);
        let too_narrow = mid <= worst.a || mid >= worst.b;
        if panels >= settings.max_subdivisions || too_narrow {
            let (value, error) = totals(&heap);
            let worst_comp = (0..N)
                .max_by(|&i, &j| {
                    (error[i] / settings.tolerance_for(value[i]))
                        .total_cmp(&(error[j] / settings.tolerance_for(value[j])))
                })
                .unwrap_or(0);
            return Err(Error::NoConvergence {
                value: value[worst_comp],
                error_estimate: error[worst_comp],
                evaluations,
            });
        }
        heap.pop();
        let tol = tolerances(&value, settings);
        let left = with_priority(gk21(&f, worst.a, mid)?, &tol);
        let right = with_priority(gk21(&f, mid, worst.b)?, &tol);
        for i in 0..N {
            value[i] += left.value[i] + right.value[i] - worst.value[i];
            error[i] += left.error[i] + right.error[i] - worst.error[i];
        }
        heap.push(left);
        heap.push(right);
        evaluations += 42;
        panels += 1;
    }
}

/// Adaptive 21-point Gauss-Kronrod integration of `f` over `[a, b]`, starting
/// from the given breakpoints (which must lie inside `[a, b]`).
pub fn integrate_with_breaks<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    breaks: &[f64],
    settings: &QuadSettings,
) -> Result<QuadResult> {
    let [r] = integrate_vec_with_breaks(|x| [f(x)], a, b, breaks, settings)?;
    Ok(r)
}

/// Adaptive integration of `f` over the finite interval `[a, b]`.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, settings: &QuadSettings) -> Result<QuadResult> {
    integrate_with_breaks(f, a, b, &[], settings)
}

/// Vector-valued version of [`integrate_semi_infinite`].
pub fn integrate_semi_infinite_vec<const N: usize, F: Fn(f64) -> [f64; N]>(
    f: F,
    decay_scale: f64,
    settings: &QuadSettings,
) -> Result<[QuadResult; N]> {
    if !(decay_scale > 0.0) || !decay_scale.is_finite() {
        return Err(Error::Domain(format!(
            "decay scale must be positive, got {decay_scale}"
        )));
    }
    let s = decay_scale;
    let g = move |t: f64| {
        if t >= 1.0 {
            return [0.0; N];
        }
        let u = 1.0 - t;
        let jac = s / (u * u);
        let mut v = f(s * t / u);
        for c in v.iter_mut() {
            if *c != 0.0 {
                *c *= jac;
            }
        }
        v
    };
    integrate_vec_with_breaks(g, 0.0, 1.0, &[0.2, 0.5, 0.8], settings)
}

/// Integrates `f` over `(0, ∞)`.
///
/// The half line is mapped onto `[0, 1)` with `x = s·t/(1-t)`, `s =
/// decay_scale`, which handles both exponential and algebraic (`x^-2` or
/// faster) decay; the interval is pre-split at `x = s/4, s, 4s`.
pub fn integrate_semi_infinite<F: Fn(f64) -> f64>(
    f: F,
    decay_scale: f64,
    settings: &QuadSettings,
) -> Result<QuadResult> {
    let [r] = integrate_semi_infinite_vec(|x| [f(x)], decay_scale, settings)?;
    Ok(r)
}

/// Stopping rule for primed m-series: stop after `needed` consecutive terms
/// that are below `tol` relative to the partial sum.
#[derive(Debug, Clone)]
pub struct SeriesStop {
    tol: f64,
    needed: usize,
    run: usize,
    prev_abs: f64,
    ratio: f64,
}

impl SeriesStop {
    pub fn new(tol: f64) -> Self {
        SeriesStop {
            tol,
            needed: 3,
            run: 0,
            prev_abs: f64::NAN,
            ratio: 1.0,
        }
    }

    /// Records term `m` and returns true once the series may be truncated.
    pub fn push(&mut self, m: usize, term: f64, partial: f64) -> bool {
        let a = term.abs();
        if self.prev_abs > 0.0 {
            self.ratio = a / self.prev_abs;
        }
        self.prev_abs = a;
        if m >= 1 && a <= self.tol * partial.abs() {
            self.run += 1;
        } else {
            self.run = 0;
        }
        self.run >= self.needed
    }

    /// Counts a term as small or not, for multi-component series where the
    /// caller decides smallness itself.
    pub fn push_small(&mut self, small: bool) -> bool {
        self.run = if small { self.run + 1 } else { 0 };
        self.run >= self.needed
    }

    /// Geometric estimate of the neglected tail after the last term.
    pub fn tail_estimate(&self) -> f64 {
        let a = if self.prev_abs.is_nan() { 0.0 } else { self.prev_abs };
        if self.ratio < 1.0 {
            a * self.ratio / (1.0 - self.ratio)
        } else {
            a * self.needed as f64
        }
    }
}

/// `term(0)/2 + Σ_{m≥1} term(m)`, truncated by the three-small-terms rule.
pub fn sum_primed_series<F: FnMut(usize) -> f64>(mut term: F, settings: &QuadSettings) -> Result<QuadResult> {
    try_sum_primed_series(|m| Ok((term(m), 0.0)), settings)
}

/// Like [`sum_primed_series`] for terms that carry their own error bound and
/// may fail.
pub fn try_sum_primed_series<F: FnMut(usize) -> Result<(f64, f64)>>(
    mut term: F,
    settings: &QuadSettings,
) -> Result<QuadResult> {
    let mut stop = SeriesStop::new(settings.series_tail_tol);
    let mut sum = 0.0;
    let mut err = 0.0;
    for m in 0..=settings.m_max {
        let w = if m == 0 { 0.5 } else { 1.0 };
        let (t, e) = term(m)?;
        if !t.is_finite() {
            return Err(Error::NonFinite { at: m as f64 });
        }
        sum += w * t;
        err += w * e;
        if stop.push(m, w * t, sum) {
            return Ok(QuadResult {
                value: sum,
                error_estimate: err + stop.tail_estimate(),
                evaluations: m + 1,
                converged: true,
            });
        }
    }
    Err(Error::SeriesNoConvergence {
        value: sum,
        error_estimate: err + stop.tail_estimate(),
        terms: settings.m_max + 1,
    })
}
