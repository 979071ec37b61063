#![allow(dead_code)]

use std::path::PathBuf;

use cpshift::XiTriple;
use serde_json::Value;

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

pub fn json_fixture(name: &str) -> Value {
    let text = std::fs::read_to_string(fixture_path(name)).unwrap();
    serde_json::from_str(&text).unwrap()
}

pub mod bessel;

pub fn csv_fixture(name: &str) -> Vec<csv::StringRecord> {
    let mut r = csv::Reader::from_path(fixture_path(name)).unwrap();
    r.records().map(|x| x.unwrap()).collect()
}

/// A decimal string split as `mantissa · 10^exp10`, so that values far
/// outside the `f64` range survive parsing.
#[derive(Debug, Clone, Copy)]
pub struct Decimal {
    pub mantissa: f64,
    pub exp10: i32,
}

pub fn decimal(s: &str) -> Decimal {
    match s.split_once(['e', 'E']) {
        Some((m, e)) => Decimal {
            mantissa: m.parse().unwrap(),
            exp10: e.trim_start_matches('+').parse().unwrap(),
        },
        None => Decimal {
            mantissa: s.parse().unwrap(),
            exp10: 0,
        },
    }
}

// ln 10 = LN10_HI + LN10_LO with LN10_HI holding 36 fractional bits, so
// `k * LN10_HI` is exact for every decimal exponent in the fixtures.
const LN10_HI: f64 = 2.302_585_092_984_372_7;
const LN10_LO: f64 = 9.672_934_093_331_725e-12;

impl Decimal {
    /// `self · e^{-shift}` as a plain `f64`, accurate to a few ulp whenever
    /// the result is in range.
    pub fn times_exp(&self, shift: f64) -> f64 {
        let k = self.exp10 as f64;
        let delta = (k * LN10_HI - shift) + k * LN10_LO;
        self.mantissa * delta.exp()
    }

    pub fn ln(&self) -> f64 {
        let k = self.exp10 as f64;
        self.mantissa.abs().ln() + k * LN10_HI + k * LN10_LO
    }
}

pub fn triple(v: &Value) -> [f64; 3] {
    let a = v.as_array().unwrap();
    [0, 1, 2].map(|i| a[i].as_str().unwrap().parse::<f64>().unwrap())
}

pub fn rel(a: f64, b: f64) -> f64 {
    if a == b {
        0.0
    } else {
        (a - b).abs() / b.abs()
    }
}

pub fn max_rel(x: &XiTriple, expect: &[f64; 3]) -> f64 {
    x.components()
        .iter()
        .zip(expect)
        .map(|(a, b)| rel(*a, *b))
        .fold(0.0, f64::max)
}
