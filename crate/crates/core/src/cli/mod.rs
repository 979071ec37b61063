//! The `cpshift` command-line front end.

mod figures;
pub mod output;
pub mod parse;
mod point;
mod sweep;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value as Json};

use crate::error::Error;
use crate::quad::QuadSettings;
use crate::shift::Geometry;
use crate::wire::{classify_regime, wavelength, Regime};

use output::{Cell, Table};
use parse::{parse_nonnegative, parse_number, parse_positive};

/// Vacuum permittivity in F/m.
pub const EPSILON_0: f64 = 8.854_187_812_8e-12;

#[derive(Debug, Parser)]
#[command(
    name = "cpshift",
    version,
    about = "Casimir-Polder energy shifts near a perfectly reflecting wire, half-plane or plane"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Relative tolerance for every integral.
    #[arg(long, global = true, default_value = "1e-8", value_parser = parse_positive)]
    pub tol: f64,

    /// Worker threads for sweeps and figures (default: all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,

    /// Output file (default: standard output).
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Output format. `eval` prints a plain listing unless this is given.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// `reduced`: lengths in an arbitrary unit L, Ξ in L⁻³, ΔW in μ²/(4πε₀L³).
    /// `si`: Ξ in m⁻³ and ΔW in joules, using --dipole and --length-unit.
    #[arg(long, global = true, value_enum, default_value_t = UnitSystem::Reduced)]
    pub units: UnitSystem,

    /// Transition dipole moment in C·m (with --units si).
    #[arg(long, global = true, value_parser = parse_positive)]
    pub dipole: Option<f64>,

    /// Length of the reduced unit in metres (with --units si).
    #[arg(long = "length-unit", global = true, value_parser = parse_positive)]
    pub length_unit: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum UnitSystem {
    Reduced,
    Si,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate Ξ, the isotropic shift and the regime at one point.
    Eval {
        #[command(subcommand)]
        geometry: GeometryArgs,
    },
    /// Emit the data behind one of the standard figures.
    Figure(figures::FigureArgs),
    /// Evaluate over a one-dimensional parameter grid.
    Sweep(sweep::SweepArgs),
    /// Classify (d, R, λ) for the wire, or list all regimes.
    Regimes(RegimeArgs),
}

#[derive(Debug, Clone, Copy, Subcommand)]
pub enum GeometryArgs {
    /// Infinite plane mirror; components are (normal, parallel, parallel).
    Plane {
        #[arg(long, value_parser = parse_positive)]
        d: f64,
        #[arg(long = "E", value_parser = parse_nonnegative)]
        energy: f64,
    },
    /// Cylindrical wire of radius R, atom at distance rho from its axis.
    Wire {
        #[arg(long = "R", value_parser = parse_positive)]
        radius: f64,
        #[arg(long, value_parser = parse_positive)]
        rho: f64,
        #[arg(long = "E", value_parser = parse_nonnegative)]
        energy: f64,
    },
    /// Half-plane; rho is the distance from the edge, phi the polar angle.
    Halfplane {
        #[arg(long, value_parser = parse_positive)]
        rho: f64,
        #[arg(long, value_parser = parse_number)]
        phi: f64,
        #[arg(long = "E", value_parser = parse_nonnegative)]
        energy: f64,
    },
}

impl GeometryArgs {
    fn split(self) -> (Geometry, f64) {
        match self {
            GeometryArgs::Plane { d, energy } => (Geometry::Plane { d }, energy),
            GeometryArgs::Wire { radius, rho, energy } => (Geometry::Wire { radius, rho }, energy),
            GeometryArgs::Halfplane { rho, phi, energy } => (Geometry::HalfPlane { rho, phi }, energy),
        }
    }
}

#[derive(Debug, Args)]
pub struct RegimeArgs {
    /// Gap between atom and wire surface.
    #[arg(long, value_parser = parse_positive, requires_all = ["radius", "energy"])]
    d: Option<f64>,
    #[arg(long = "R", value_parser = parse_positive, requires_all = ["d", "energy"])]
    radius: Option<f64>,
    #[arg(long = "E", value_parser = parse_nonnegative, requires_all = ["d", "radius"])]
    energy: Option<f64>,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Numeric(#[from] Error),
    #[error("{0}")]
    Usage(String),
    #[error("i/o error: {0}")]
    Io(#[from] io::Error),
    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
    #[error("thread pool: {0}")]
    Pool(#[from] rayon::ThreadPoolBuildError),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Numeric(_) => 1,
            CliError::Usage(_) => 2,
            _ => 3,
        }
    }
}

/// Unit conversion applied to outputs only.
#[derive(Debug, Clone, Copy)]
pub struct Units {
    pub system: UnitSystem,
    pub dipole: f64,
    pub length: f64,
}

impl Units {
    fn from_cli(cli: &Cli) -> Result<Self, CliError> {
        match cli.units {
            UnitSystem::Reduced => Ok(Units {
                system: UnitSystem::Reduced,
                dipole: 1.0,
                length: 1.0,
            }),
            UnitSystem::Si => match (cli.dipole, cli.length_unit) {
                (Some(dipole), Some(length)) => Ok(Units {
                    system: UnitSystem::Si,
                    dipole,
                    length,
                }),
                _ => Err(CliError::Usage("--units si needs --dipole and --length-unit".into())),
            },
        }
    }

    /// Multiplies a Ξ value.
    pub fn xi_factor(&self) -> f64 {
        match self.system {
            UnitSystem::Reduced => 1.0,
            UnitSystem::Si => self.length.powi(-3),
        }
    }

    /// Multiplies a ΔW value given in μ²/(4πε₀L³).
    pub fn energy_factor(&self) -> f64 {
        match self.system {
            UnitSystem::Reduced => 1.0,
            UnitSystem::Si => {
                self.dipole * self.dipole / (4.0 * std::f64::consts::PI * EPSILON_0 * self.length.powi(3))
            }
        }
    }

    fn meta(&self) -> Json {
        match self.system {
            UnitSystem::Reduced => json!({
                "system": "reduced",
                "xi": "1/L^3",
                "dW": "mu^2/(4 pi eps0 L^3)",
            }),
            UnitSystem::Si => json!({
                "system": "si",
                "xi": "1/m^3",
                "dW": "J",
                "dipole_Cm": self.dipole,
                "length_unit_m": self.length,
            }),
        }
    }
}

/// Everything a subcommand needs besides its own arguments.
pub struct Context {
    pub settings: QuadSettings,
    pub units: Units,
    pub format: Option<Format>,
    pub out: Option<PathBuf>,
    pool: rayon::ThreadPool,
}

impl Context {
    fn new(cli: &Cli) -> Result<Self, CliError> {
        let settings = QuadSettings::default().with_rel_tol(cli.tol);
        settings.validate()?;
        if cli.jobs == Some(0) {
            return Err(CliError::Usage("--jobs must be at least 1".into()));
        }
        let mut pool = rayon::ThreadPoolBuilder::new();
        if let Some(j) = cli.jobs {
            pool = pool.num_threads(j);
        }
        Ok(Context {
            settings,
            units: Units::from_cli(cli)?,
            format: cli.format,
            out: cli.out.clone(),
            pool: pool.build()?,
        })
    }

    /// Runs `f` on the configured worker pool.
    pub fn install<R: Send>(&self, f: impl FnOnce() -> R + Send) -> R {
        self.pool.install(f)
    }

    fn meta(&self, command: &str, parameters: Json) -> Json {
        json!({
            "command": command,
            "version": env!("CARGO_PKG_VERSION"),
            "parameters": parameters,
            "tolerances": self.settings,
            "units": self.units.meta(),
        })
    }

    /// Writes `table` in the requested format (CSV unless `text_default`).
    fn emit(&self, table: &Table, command: &str, parameters: Json, text_default: bool) -> Result<(), CliError> {
        let sink: Box<dyn Write> = match &self.out {
            Some(p) => Box::new(File::create(p)?),
            None => Box::new(io::stdout().lock()),
        };
        let mut sink = BufWriter::new(sink);
        match (self.format, text_default) {
            (Some(Format::Json), _) => {
                serde_json::to_writer_pretty(&mut sink, &table.to_json(self.meta(command, parameters)))?;
                sink.write_all(b"\n")?;
            }
            (Some(Format::Csv), _) | (None, false) => table.write_csv(&mut sink)?,
            (None, true) => table.write_text(&mut sink)?,
        }
        sink.flush()?;
        Ok(())
    }
}

pub fn run(cli: Cli) -> Result<(), CliError> {
    let ctx = Context::new(&cli)?;
    match cli.command {
        Command::Eval { geometry } => eval(&ctx, geometry),
        Command::Figure(args) => figures::run(&ctx, &args),
        Command::Sweep(args) => sweep::run(&ctx, &args),
        Command::Regimes(args) => regimes(&ctx, &args),
    }
}

/// Parses the process arguments, runs, and maps failures to exit codes.
pub fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("cpshift: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn eval(ctx: &Context, args: GeometryArgs) -> Result<(), CliError> {
    let (geometry, energy) = args.split();
    let result = point::evaluate(&geometry, energy, &ctx.settings);
    let mut table = point::table();
    table.push(point::row(&geometry, energy, &result, &ctx.units));
    let params = json!({ "geometry": geometry, "E": energy });
    match result {
        Ok(_) => ctx.emit(&table, "eval", params, true),
        Err(e) => Err(e.into()),
    }
}

fn regimes(ctx: &Context, args: &RegimeArgs) -> Result<(), CliError> {
    let mut table = Table::new(["regime", "ordering", "retarded", "clear", "d", "R", "lambda"]);
    match (args.d, args.radius, args.energy) {
        (Some(d), Some(r), Some(e)) => {
            let lambda = wavelength(e);
            let c = classify_regime(d, r, lambda);
            table.push(vec![
                c.regime.tag().into(),
                c.regime.ordering().into(),
                c.regime.is_retarded().into(),
                c.clear.into(),
                d.into(),
                r.into(),
                lambda.into(),
            ]);
        }
        _ => {
            for reg in Regime::ALL {
                table.push(vec![
                    reg.tag().into(),
                    reg.ordering().into(),
                    reg.is_retarded().into(),
                    Cell::Empty,
                    Cell::Empty,
                    Cell::Empty,
                    Cell::Empty,
                ]);
            }
        }
    }
    let params = json!({ "d": args.d, "R": args.radius, "E": args.energy });
    ctx.emit(&table, "regimes", params, false)
}
