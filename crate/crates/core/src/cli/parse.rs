//! Numeric argument parsing shared by all subcommands.

use std::f64::consts::PI;

/// Parses a real number, also accepting multiples of `pi` such as `pi`,
/// `pi/2`, `0.75pi`, `3pi/4`, `2*pi/3` and `-pi/4`.
pub fn parse_number(s: &str) -> Result<f64, String> {
    let t: String = s
        .chars()
        .filter(|c| !c.is_whitespace())
        .collect::<String>()
        .to_ascii_lowercase();
    let Some(pos) = t.find("pi") else {
        return t.parse::<f64>().map_err(|_| format!("not a number: {s:?}"));
    };
    let (head, tail) = (&t[..pos], &t[pos + 2..]);
    let head = head.strip_suffix('*').unwrap_or(head);
    let coef = match head {
        "" | "+" => 1.0,
        "-" => -1.0,
        h => h.parse::<f64>().map_err(|_| format!("bad coefficient in {s:?}"))?,
    };
    let div = match tail {
        "" => 1.0,
        t => t
            .strip_prefix('/')
            .and_then(|d| d.parse::<f64>().ok())
            .filter(|d| *d != 0.0)
            .ok_or_else(|| format!("bad divisor in {s:?}"))?,
    };
    Ok(coef * PI / div)
}

pub fn parse_positive(s: &str) -> Result<f64, String> {
    let v = parse_number(s)?;
    if v > 0.0 && v.is_finite() {
        Ok(v)
    } else {
        Err(format!("expected a positive number, got {s:?}"))
    }
}

pub fn parse_nonnegative(s: &str) -> Result<f64, String> {
    let v = parse_number(s)?;
    if v >= 0.0 && v.is_finite() {
        Ok(v)
    } else {
        Err(format!("expected a non-negative number, got {s:?}"))
    }
}

/// `count` points from `min` to `max` inclusive.
pub fn grid(min: f64, max: f64, count: usize, log: bool) -> Vec<f64> {
    if count == 1 {
        return vec![min];
    }
    let n = (count - 1) as f64;
    (0..count)
        .map(|i| {
            let f = i as f64 / n;
            if i == count - 1 {
                max
            } else if log {
                (min.ln() + f * (max.ln() - min.ln())).exp()
            } else {
                min + f * (max - min)
            }
        })
        .collect()
}
