use cpshift::specfun::{bessel_i_scaled, bessel_k_scaled, BesselPair};

use super::{csv_fixture, decimal, rel};

pub const ORACLE_TOL: f64 = 1e-12;
pub const IDENTITY_TOL: f64 = 1e-10;

struct Entry {
    m: usize,
    x: f64,
    fields: [String; 4],
}

fn table() -> Vec<Entry> {
    csv_fixture("bessel.csv")
        .iter()
        .map(|r| Entry {
            m: r[0].parse().unwrap(),
            x: r[1].parse().unwrap(),
            fields: [2, 3, 4, 5].map(|i| r[i].to_string()),
        })
        .collect()
}

/// Compares a computed pair with oracle `(f, f')`. Pairs in the conventional
/// scaling are compared directly; extra-rescaled pairs carry an `f64`
/// exponent of magnitude up to ~10⁴, so only `ln f` is meaningful there and
/// it is compared to a few ulp of that exponent.
fn check(name: &str, e: &Entry, p: &BesselPair, value: &str, deriv: &str, conventional: f64) -> Option<String> {
    let (v, d) = (decimal(value), decimal(deriv));
    let want_dlog = d.mantissa / v.mantissa * 10f64.powi(d.exp10 - v.exp10);
    let mut errs = Vec::new();
    if rel(p.log_derivative(), want_dlog) > ORACLE_TOL {
        errs.push(format!("log-derivative {} vs {}", p.log_derivative(), want_dlog));
    }
    if p.scale_exponent == conventional {
        let want = v.times_exp(p.scale_exponent);
        if rel(p.value, want) > ORACLE_TOL {
            errs.push(format!(
                "scaled value {} vs {} (rel {:e})",
                p.value,
                want,
                rel(p.value, want)
            ));
        }
    } else {
        let tol = ORACLE_TOL + 4.0 * f64::EPSILON * p.scale_exponent.abs();
        if (p.ln_value() - v.ln()).abs() > tol {
            errs.push(format!("ln value {} vs {}", p.ln_value(), v.ln()));
        }
    }
    (!errs.is_empty()).then(|| format!("{name}_{}({}): {}", e.m, e.x, errs.join("; ")))
}

/// Every mismatch between the computed pairs and the oracle table.
pub fn oracle_failures() -> Vec<String> {
    let rows = table();
    assert!(rows.len() >= 150);
    let mut failures = Vec::new();
    for e in &rows {
        let i = bessel_i_scaled(e.m, e.x).unwrap();
        let k = bessel_k_scaled(e.m, e.x).unwrap();
        failures.extend(check("I", e, &i, &e.fields[0], &e.fields[2], e.x));
        failures.extend(check("K", e, &k, &e.fields[1], &e.fields[3], -e.x));
    }
    failures
}

/// Ratio of two unscaled values `a/b` from their scaled pairs.
pub fn ratio(a: &BesselPair, b: &BesselPair) -> f64 {
    a.value / b.value * (a.scale_exponent - b.scale_exponent).exp()
}

/// Largest violation of the Wronskian and the value and derivative
/// recurrences over a fixed grid, each relative to its terms.
pub fn identity_error() -> f64 {
    let mut worst = 0.0f64;
    for m in [1, 2, 7, 33, 250, 1500, 4000, 20_000] {
        for x in [1e-4, 1e-3, 0.03, 0.4, 0.9, 3.0, 25.0, 55.0, 900.0, 1e4, 5e4] {
            let w = cpshift::specfun::wronskian_check(m, x).unwrap();
            worst = worst.max(rel(-x * w, 1.0));
            let c = 2.0 * m as f64 / x;
            let i = [m - 1, m, m + 1].map(|n| bessel_i_scaled(n, x).unwrap());
            let k = [m - 1, m, m + 1].map(|n| bessel_k_scaled(n, x).unwrap());
            let (a, b) = (ratio(&i[0], &i[1]), ratio(&i[2], &i[1]));
            worst = worst.max(((a - b) - c).abs() / (a.abs() + b.abs()));
            worst = worst.max(rel(i[1].log_derivative(), 0.5 * (a + b)));
            let (a, b) = (ratio(&k[2], &k[1]), ratio(&k[0], &k[1]));
            worst = worst.max(((a - b) - c).abs() / (a.abs() + b.abs()));
            worst = worst.max(rel(k[1].log_derivative(), -0.5 * (a + b)));
        }
    }
    worst
}
