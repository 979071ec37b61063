use clap::{Args, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::shift::Geometry;

use super::parse::{grid, parse_number};
use super::{point, CliError, Context};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GeometryName {
    Plane,
    Wire,
    Halfplane,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
pub enum Variable {
    #[value(name = "d")]
    #[serde(rename = "d")]
    D,
    #[value(name = "rho")]
    #[serde(rename = "rho")]
    Rho,
    #[value(name = "phi")]
    #[serde(rename = "phi")]
    Phi,
    #[value(name = "E")]
    #[serde(rename = "E")]
    E,
    #[value(name = "R")]
    #[serde(rename = "R")]
    R,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Spacing {
    Linear,
    Log,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct SweepArgs {
    #[arg(value_enum)]
    pub geometry: GeometryName,
    /// Swept parameter. For the wire, sweeping `d` keeps `R` fixed and
    /// moves `rho = R + d`.
    #[arg(long, value_enum)]
    pub var: Variable,
    /// First grid value (accepts `pi` expressions).
    #[arg(long, value_parser = parse_number)]
    pub min: f64,
    /// Last grid value, included exactly.
    #[arg(long, value_parser = parse_number)]
    pub max: f64,
    /// Number of grid points.
    #[arg(long, default_value_t = 20)]
    pub count: usize,
    /// Grid spacing.
    #[arg(long, value_enum, default_value_t = Spacing::Linear)]
    pub spacing: Spacing,
    /// Fixed gap to the surface (plane, or wire with `rho = R + d`).
    #[arg(long, value_parser = parse_number)]
    pub d: Option<f64>,
    /// Fixed wire radius.
    #[arg(long = "R", value_parser = parse_number)]
    pub radius: Option<f64>,
    /// Fixed distance from the wire axis or the half-plane edge.
    #[arg(long, value_parser = parse_number)]
    pub rho: Option<f64>,
    /// Fixed half-plane angle, measured from the conductor.
    #[arg(long, value_parser = parse_number)]
    pub phi: Option<f64>,
    /// Fixed transition energy (inverse length).
    #[arg(long = "E", value_parser = parse_number)]
    pub energy: Option<f64>,
}

fn need(v: Option<f64>, name: &str) -> Result<f64, CliError> {
    v.ok_or_else(|| CliError::Usage(format!("missing fixed parameter --{name}")))
}

impl SweepArgs {
    fn validate(&self) -> Result<(), CliError> {
        if !(self.min < self.max) {
            return Err(CliError::Usage(format!(
                "need min < max, got {} and {}",
                self.min, self.max
            )));
        }
        if self.count < 2 {
            return Err(CliError::Usage("need --count of at least 2".into()));
        }
        if self.spacing == Spacing::Log && !(self.min > 0.0) {
            return Err(CliError::Usage("log spacing needs a positive --min".into()));
        }
        let allowed: &[Variable] = match self.geometry {
            GeometryName::Plane => &[Variable::D, Variable::E],
            GeometryName::Wire => &[Variable::D, Variable::Rho, Variable::R, Variable::E],
            GeometryName::Halfplane => &[Variable::Rho, Variable::Phi, Variable::E],
        };
        if !allowed.contains(&self.var) {
            return Err(CliError::Usage(format!(
                "cannot sweep {:?} for this geometry",
                self.var
            )));
        }
        Ok(())
    }

    /// The point at swept value `x`.
    fn point(&self, x: f64) -> Result<(Geometry, f64), CliError> {
        let pick = |v: Variable, fixed: Option<f64>, name: &str| {
            if self.var == v {
                Ok(x)
            } else {
                need(fixed, name)
            }
        };
        let energy = pick(Variable::E, self.energy, "E")?;
        let g = match self.geometry {
            GeometryName::Plane => Geometry::Plane {
                d: pick(Variable::D, self.d, "d")?,
            },
            GeometryName::Wire => {
                let radius = pick(Variable::R, self.radius, "R")?;
                let rho = match (self.var, self.rho, self.d) {
                    (Variable::Rho, _, _) => x,
                    (Variable::D, _, _) => radius + x,
                    (_, Some(rho), _) => rho,
                    (_, None, Some(d)) => radius + d,
                    _ => return Err(CliError::Usage("missing fixed parameter --rho or --d".into())),
                };
                Geometry::Wire { radius, rho }
            }
            GeometryName::Halfplane => Geometry::HalfPlane {
                rho: pick(Variable::Rho, self.rho, "rho")?,
                phi: pick(Variable::Phi, self.phi, "phi")?,
            },
        };
        Ok((g, energy))
    }
}

pub fn run(ctx: &Context, args: &SweepArgs) -> Result<(), CliError> {
    args.validate()?;
    let xs = grid(args.min, args.max, args.count, args.spacing == Spacing::Log);
    let points = xs.iter().map(|&x| args.point(x)).collect::<Result<Vec<_>, _>>()?;
    let rows: Vec<_> = ctx.install(|| {
        points
            .par_iter()
            .map(|(g, e)| point::row(g, *e, &point::evaluate(g, *e, &ctx.settings), &ctx.units))
            .collect()
    });
    let mut table = point::table();
    let failed = rows
        .iter()
        .filter(|r| r[point::COLUMNS.len() - 1] != super::Cell::Empty)
        .count();
    for r in rows {
        table.push(r);
    }
    if failed > 0 {
        eprintln!("cpshift: {failed} of {} points failed; see the error column", xs.len());
    }
    ctx.emit(&table, "sweep", json!(args), false)
}
