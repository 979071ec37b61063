use std::fmt;

use serde::{Deserialize, Serialize};

/// The six asymptotic regimes, named by the ordering of the gap `d`, the wire
/// radius `R` and the transition wavelength `λ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Regime {
    /// `d ≪ R ≪ λ`
    #[serde(rename = "NR_close")]
    NrClose,
    /// `d ≪ λ ≪ R`
    #[serde(rename = "NR_mid")]
    NrMid,
    /// `R ≪ d ≪ λ`
    #[serde(rename = "NR_thin")]
    NrThin,
    /// `λ ≪ d ≪ R`
    #[serde(rename = "RET_close")]
    RetClose,
    /// `λ ≪ R ≪ d`
    #[serde(rename = "RET_thin")]
    RetThin,
    /// `R ≪ λ ≪ d`
    #[serde(rename = "RET_thin2")]
    RetThin2,
}

impl Regime {
    pub fn tag(&self) -> &'static str {
        match self {
            Regime::NrClose => "NR_close",
            Regime::NrMid => "NR_mid",
            Regime::NrThin => "NR_thin",
            Regime::RetClose => "RET_close",
            Regime::RetThin => "RET_thin",
            Regime::RetThin2 => "RET_thin2",
        }
    }

    pub fn ordering(&self) -> &'static str {
        match self {
            Regime::NrClose => "d << R << lambda",
            Regime::NrMid => "d << lambda << R",
            Regime::NrThin => "R << d << lambda",
            Regime::RetClose => "lambda << d << R",
            Regime::RetThin => "lambda << R << d",
            Regime::RetThin2 => "R << lambda << d",
        }
    }

    pub fn is_retarded(&self) -> bool {
        matches!(self, Regime::RetClose | Regime::RetThin | Regime::RetThin2)
    }

    pub const ALL: [Regime; 6] = [
        Regime::NrClose,
        Regime::NrMid,
        Regime::NrThin,
        Regime::RetClose,
        Regime::RetThin,
        Regime::RetThin2,
    ];
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// Neighbouring length scales closer than this factor give no clear regime.
pub const REGIME_SEPARATION: f64 = 3.0;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RegimeClass {
    pub regime: Regime,
    /// False when two neighbouring scales are within [`REGIME_SEPARATION`].
    pub clear: bool,
}

/// Transition wavelength used for regime classification, `λ = 1/E`
/// (infinite for `E = 0`).
pub fn wavelength(energy: f64) -> f64 {
    1.0 / energy
}

#[derive(Clone, Copy, PartialEq)]
enum Scale {
    D,
    R,
    L,
}

pub fn classify_regime(d: f64, radius: f64, lambda: f64) -> RegimeClass {
    let mut s = [(d, Scale::D), (radius, Scale::R), (lambda, Scale::L)];
    s.sort_by(|p, q| p.0.total_cmp(&q.0));
    let order = [s[0].1, s[1].1, s[2].1];
    let regime = match order {
        [Scale::D, Scale::R, Scale::L] => Regime::NrClose,
        [Scale::D, Scale::L, Scale::R] => Regime::NrMid,
        [Scale::R, Scale::D, Scale::L] => Regime::NrThin,
        [Scale::L, Scale::D, Scale::R] => Regime::RetClose,
        [Scale::L, Scale::R, Scale::D] => Regime::RetThin,
        _ => Regime::RetThin2,
    };
    let clear = s[1].0 >= REGIME_SEPARATION * s[0].0 && s[2].0 >= REGIME_SEPARATION * s[1].0;
    RegimeClass { regime, clear }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(
            classify_regime(0.01, 1.0, 100.0),
            RegimeClass {
                regime: Regime::NrClose,
                clear: true
            }
        );
        assert_eq!(classify_regime(100.0, 1.0, 0.01).regime, Regime::RetThin);
        assert!(!classify_regime(1.0, 1.0, 1.0).clear);
        assert_eq!(classify_regime(10.0, 0.1, 1.0).regime, Regime::RetThin2);
        assert_eq!(classify_regime(0.1, 10.0, 1.0).regime, Regime::NrMid);
        assert_eq!(classify_regime(1.0, 0.1, f64::INFINITY).regime, Regime::NrThin);
    }

    #[test]
    fn every_regime_reachable() {
        let v = [0.01, 1.0, 100.0];
        let mut seen = std::collections::HashSet::new();
        for &d in &v {
            for &r in &v {
                for &l in &v {
                    if d != r && r != l && d != l {
                        seen.insert(classify_regime(d, r, l).regime);
                    }
                }
            }
        }
        assert_eq!(seen.len(), 6);
    }
}
