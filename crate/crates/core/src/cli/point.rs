//! Single-point evaluation shared by `eval` and `sweep`.

use std::fmt;

use crate::error::Result;
use crate::halfplane::HalfPlaneConfig;
use crate::quad::QuadSettings;
use crate::shift::Geometry;
use crate::wire::{classify_regime, wavelength, REGIME_SEPARATION};
use crate::xi::XiTriple;

use super::output::{Cell, Table};
use super::Units;

/// Regime tag of a single point.
#[derive(Debug, Clone, PartialEq)]
pub struct RegimeTag {
    pub tag: String,
    pub clear: bool,
}

impl fmt::Display for RegimeTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.tag)
    }
}

/// For the wire, the six-way classification of `(d, R, λ)`. For the flat
/// geometries only distance versus wavelength matters.
pub fn regime(geometry: &Geometry, energy: f64) -> RegimeTag {
    let lambda = wavelength(energy);
    let distance = match *geometry {
        Geometry::Wire { radius, rho } => {
            let c = classify_regime(rho - radius, radius, lambda);
            return RegimeTag {
                tag: c.regime.tag().to_string(),
                clear: c.clear,
            };
        }
        Geometry::Plane { d } => d,
        Geometry::HalfPlane { rho, phi } => HalfPlaneConfig::new(rho, phi, energy).surface_distance(),
    };
    let (tag, clear) = if lambda >= REGIME_SEPARATION * distance {
        ("NR", true)
    } else if distance >= REGIME_SEPARATION * lambda {
        ("RET", true)
    } else if lambda >= distance {
        ("NR", false)
    } else {
        ("RET", false)
    };
    RegimeTag {
        tag: tag.to_string(),
        clear,
    }
}

pub const COLUMNS: [&str; 15] = [
    "geometry",
    "d",
    "R",
    "rho",
    "phi",
    "E",
    "xi_rho",
    "xi_phi",
    "xi_z",
    "error_estimate",
    "dW_iso",
    "regime",
    "regime_clear",
    "converged",
    "error",
];

pub fn table() -> Table {
    Table::new(COLUMNS)
}

fn geometry_cells(g: &Geometry) -> [Cell; 5] {
    match *g {
        Geometry::Plane { d } => [g.name().into(), d.into(), Cell::Empty, Cell::Empty, Cell::Empty],
        Geometry::Wire { radius, rho } => [
            g.name().into(),
            (rho - radius).into(),
            radius.into(),
            rho.into(),
            Cell::Empty,
        ],
        Geometry::HalfPlane { rho, phi } => [g.name().into(), Cell::Empty, Cell::Empty, rho.into(), phi.into()],
    }
}

/// Evaluates `Ξ` and the isotropic unit-dipole shift at one point.
pub fn evaluate(g: &Geometry, energy: f64, settings: &QuadSettings) -> Result<XiTriple> {
    g.xi(energy, settings)
}

/// One output row. Failed points keep their inputs and carry the message.
pub fn row(g: &Geometry, energy: f64, result: &Result<XiTriple>, units: &Units) -> Vec<Cell> {
    let reg = regime(g, energy);
    let mut cells: Vec<Cell> = geometry_cells(g).into_iter().collect();
    cells.push(energy.into());
    match result {
        Ok(xi) => {
            let f = units.xi_factor();
            cells.extend([
                (f * xi.rho_comp).into(),
                (f * xi.phi_comp).into(),
                (f * xi.z_comp).into(),
                (f * xi.error_estimate).into(),
                (-units.energy_factor() * xi.sum() / 3.0).into(),
            ]);
            cells.extend([reg.tag.into(), reg.clear.into(), true.into(), Cell::Empty]);
        }
        Err(e) => {
            let best = e.best_estimate();
            cells.extend([Cell::Empty, Cell::Empty, Cell::Empty]);
            cells.push(best.map_or(Cell::Empty, |(_, err)| Cell::Num(err)));
            cells.push(Cell::Empty);
            cells.extend([reg.tag.into(), reg.clear.into(), false.into(), e.to_string().into()]);
        }
    }
    cells
}
