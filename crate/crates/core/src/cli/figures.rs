//! Data files behind the standard plots. Plotting itself is left to external
//! tools.

use std::f64::consts::PI;

use clap::{Args, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::error::Result;
use crate::halfplane::{force_direction, ForceOptions};
use crate::quad::QuadSettings;
use crate::wire::{
    xi_wire, xi_wire_large_radius_approx, xi_wire_retarded_limit, xi_wire_small_radius_approx, WireConfig,
};
use crate::xi::XiTriple;

use super::output::{Cell, Table};
use super::parse::{grid, parse_positive};
use super::{CliError, Context};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
pub enum FigureName {
    /// Wire, retarded limit: E·d⁴·Ξ against d/R, exact and both approximations.
    #[value(name = "fig2")]
    Fig2,
    /// Wire: 4πd⁴E·Ξ_ρ against d/R for several E, plus the retarded limit.
    #[value(name = "fig3")]
    Fig3,
    /// Half-plane: retarded force direction on a (ρ, φ) grid.
    #[value(name = "fig4_direction")]
    Fig4Direction,
    /// Wire: as fig3 for Ξ_φ and Ξ_z.
    #[value(name = "fig5")]
    Fig5,
    /// Wire: 4πd⁴E·Ξ against d·E for several radii.
    #[value(name = "fig6_combined")]
    Fig6Combined,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct FigureArgs {
    #[arg(value_enum)]
    pub name: FigureName,
    /// Transition energies (fig3, fig5: in units of 1/R; fig4: first entry).
    #[arg(long = "E", value_delimiter = ',', value_parser = parse_positive)]
    pub energies: Vec<f64>,
    /// Wire radii for fig6, in units of 1/E.
    #[arg(long = "R", value_delimiter = ',', value_parser = parse_positive)]
    pub radii: Vec<f64>,
    /// Distances from the edge for fig4.
    #[arg(long, value_delimiter = ',', value_parser = parse_positive)]
    pub rho: Vec<f64>,
    /// Abscissa points (angles for fig4).
    #[arg(long)]
    pub points: Option<usize>,
    /// Smallest abscissa (d/R, or d·E for fig6).
    #[arg(long, value_parser = parse_positive)]
    pub min: Option<f64>,
    /// Largest abscissa.
    #[arg(long, value_parser = parse_positive)]
    pub max: Option<f64>,
}

fn or_default(v: &[f64], d: &[f64]) -> Vec<f64> {
    if v.is_empty() {
        d.to_vec()
    } else {
        v.to_vec()
    }
}

fn num_cells(r: &Result<XiTriple>, scale: f64, pick: &[usize]) -> (Vec<Cell>, Option<String>) {
    match r {
        Ok(x) => {
            let c = x.components();
            (pick.iter().map(|&i| Cell::Num(scale * c[i])).collect(), None)
        }
        Err(e) => (pick.iter().map(|_| Cell::Empty).collect(), Some(e.to_string())),
    }
}

/// Plane retarded normalization `4π d⁴ E`.
fn cp_factor(d: f64, e: f64) -> f64 {
    4.0 * PI * d.powi(4) * e
}

pub fn run(ctx: &Context, args: &FigureArgs) -> std::result::Result<(), CliError> {
    let points = args
        .points
        .unwrap_or(if args.name == FigureName::Fig4Direction { 24 } else { 30 });
    if points < 2 {
        return Err(CliError::Usage("--points must be at least 2".into()));
    }
    let (min, max) = (args.min.unwrap_or(0.01), args.max.unwrap_or(50.0));
    if !(min < max) {
        return Err(CliError::Usage("need --min < --max".into()));
    }
    let xs = grid(min, max, points, true);
    let s = ctx.settings;
    let table = ctx.install(|| match args.name {
        FigureName::Fig2 => fig2(&xs, &s),
        FigureName::Fig3 => wire_energies(&xs, &or_default(&args.energies, &[0.1, 1.0, 10.0]), &[0], &s),
        FigureName::Fig5 => wire_energies(&xs, &or_default(&args.energies, &[0.1, 1.0, 10.0]), &[1, 2], &s),
        FigureName::Fig6Combined => fig6(&xs, &or_default(&args.radii, &[0.1, 1.0, 10.0]), &s),
        FigureName::Fig4Direction => fig4(
            &or_default(&args.rho, &[0.5, 1.0, 1.5, 2.0]),
            points,
            or_default(&args.energies, &[50.0])[0],
            &s,
        ),
    });
    ctx.emit(&table, "figure", json!(args), false)
}

const COMP: [&str; 3] = ["rho", "phi", "z"];

fn fig2(xs: &[f64], s: &QuadSettings) -> Table {
    let mut cols = vec!["d_over_R".to_string()];
    for set in ["exact", "large_R", "small_R"] {
        cols.extend(COMP.iter().map(|c| format!("{set}_{c}")));
    }
    cols.push("error".into());
    let mut t = Table::new(cols);
    let rows: Vec<Vec<Cell>> = xs
        .par_iter()
        .map(|&x| {
            let (r, rho) = (1.0, 1.0 + x);
            let d4 = x.powi(4);
            let mut row = vec![Cell::Num(x)];
            let mut errs = Vec::new();
            for res in [
                xi_wire_retarded_limit(r, rho, s),
                xi_wire_large_radius_approx(r, rho, s),
                xi_wire_small_radius_approx(r, rho, s),
            ] {
                let (c, e) = num_cells(&res, d4, &[0, 1, 2]);
                row.extend(c);
                errs.extend(e);
            }
            row.push(if errs.is_empty() {
                Cell::Empty
            } else {
                errs.join("; ").into()
            });
            row
        })
        .collect();
    rows.into_iter().for_each(|r| t.push(r));
    t
}

fn wire_energies(xs: &[f64], energies: &[f64], comps: &[usize], s: &QuadSettings) -> Table {
    let mut cols = vec!["d_over_R".to_string()];
    for &c in comps {
        cols.push(format!("retarded_{}", COMP[c]));
        cols.extend(energies.iter().map(|e| format!("{}_E{e}", COMP[c])));
    }
    cols.push("error".into());
    let mut t = Table::new(cols);
    let rows: Vec<Vec<Cell>> = xs
        .par_iter()
        .map(|&x| {
            let rho = 1.0 + x;
            let mut errs = Vec::new();
            let lim = xi_wire_retarded_limit(1.0, rho, s);
            let at: Vec<_> = energies
                .iter()
                .map(|&e| (e, xi_wire(&WireConfig::new(1.0, rho, e), s)))
                .collect();
            let mut row = vec![Cell::Num(x)];
            for &c in comps {
                let (v, e) = num_cells(&lim, cp_factor(x, 1.0), &[c]);
                row.extend(v);
                errs.extend(e);
                for (en, r) in &at {
                    let (v, e) = num_cells(r, cp_factor(x, *en), &[c]);
                    row.extend(v);
                    errs.extend(e);
                }
            }
            errs.dedup();
            row.push(if errs.is_empty() {
                Cell::Empty
            } else {
                errs.join("; ").into()
            });
            row
        })
        .collect();
    rows.into_iter().for_each(|r| t.push(r));
    t
}

fn fig6(xs: &[f64], radii: &[f64], s: &QuadSettings) -> Table {
    let mut cols = vec!["dE".to_string()];
    for r in radii {
        cols.extend(COMP.iter().map(|c| format!("{c}_R{r}")));
    }
    cols.push("error".into());
    let mut t = Table::new(cols);
    let rows: Vec<Vec<Cell>> = xs
        .par_iter()
        .map(|&x| {
            let mut row = vec![Cell::Num(x)];
            let mut errs = Vec::new();
            for &r in radii {
                let res = xi_wire(&WireConfig::new(r, r + x, 1.0), s);
                let (v, e) = num_cells(&res, cp_factor(x, 1.0), &[0, 1, 2]);
                row.extend(v);
                errs.extend(e);
            }
            row.push(if errs.is_empty() {
                Cell::Empty
            } else {
                errs.join("; ").into()
            });
            row
        })
        .collect();
    rows.into_iter().for_each(|r| t.push(r));
    t
}

fn fig4(rhos: &[f64], points: usize, energy: f64, s: &QuadSettings) -> Table {
    let mut t = Table::new([
        "rho",
        "phi",
        "x",
        "y",
        "e_rho",
        "e_phi",
        "f_x",
        "f_y",
        "asymptotic",
        "degenerate",
        "error",
    ]);
    let grid: Vec<(f64, f64)> = rhos
        .iter()
        .flat_map(|&r| (1..points).map(move |k| (r, PI * ((2 * k) as f64 / points as f64))))
        .collect();
    let opts = ForceOptions::default();
    let rows: Vec<Vec<Cell>> = grid
        .par_iter()
        .map(|&(rho, phi)| {
            let (sn, cs) = phi.sin_cos();
            let mut row = vec![rho.into(), phi.into(), (rho * cs).into(), (rho * sn).into()];
            match force_direction(rho, phi, energy, s, &opts) {
                Ok(f) => {
                    row.extend([
                        f.e_rho.into(),
                        f.e_phi.into(),
                        (f.e_rho * cs - f.e_phi * sn).into(),
                        (f.e_rho * sn + f.e_phi * cs).into(),
                        f.asymptotic.into(),
                        f.degenerate.into(),
                        Cell::Empty,
                    ]);
                }
                Err(e) => {
                    row.extend([
                        Cell::Empty,
                        Cell::Empty,
                        Cell::Empty,
                        Cell::Empty,
                        Cell::Empty,
                        Cell::Empty,
                    ]);
                    row.push(e.to_string().into());
                }
            }
            row
        })
        .collect();
    rows.into_iter().for_each(|r| t.push(r));
    t
}
