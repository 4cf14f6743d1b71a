//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 on usage errors, 2 when an input fails to
//! parse, has the wrong dimension, or is otherwise rejected.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{ArgGroup, Parser, Subcommand};

use crate::bounds::{self, SystemSpec};
use crate::constants::PhysicalConstants;
use crate::error::{Error, Result};
use crate::format::sig6;
use crate::qparser;
use crate::quantity::{Dimension, Quantity};
use crate::scenarios::{self, BoundReport, ReportFormat};
use crate::schwarzschild::{self as bh, BlackHole, RELATIVISTIC_MU};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "infobound",
    version,
    about = "Black-hole and thermodynamic limits on information storage"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate a quantity expression
    Eval {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        /// Express the result in this unit
        #[arg(long = "in", value_name = "UNIT", allow_hyphen_values = true)]
        unit: Option<String>,
    },
    /// Properties of a Schwarzschild black hole
    #[command(group(ArgGroup::new("size").required(true).args(["mass", "radius"])))]
    Blackhole {
        #[arg(long, value_name = "EXPR", allow_hyphen_values = true)]
        mass: Option<String>,
        #[arg(long, value_name = "EXPR", allow_hyphen_values = true)]
        radius: Option<String>,
        #[arg(long, default_value_t = RELATIVISTIC_MU, allow_negative_numbers = true)]
        mu: f64,
    },
    /// All bounds for a single system
    #[command(group(ArgGroup::new("content").required(true).args(["energy", "mass"])))]
    Bound {
        #[arg(long, value_name = "EXPR", allow_hyphen_values = true)]
        length: String,
        #[arg(long, value_name = "EXPR", allow_hyphen_values = true)]
        energy: Option<String>,
        #[arg(long, value_name = "EXPR", allow_hyphen_values = true)]
        mass: Option<String>,
        #[arg(long, value_name = "EXPR", default_value = "0 kB", allow_hyphen_values = true)]
        entropy: String,
        #[arg(long, default_value_t = RELATIVISTIC_MU, allow_negative_numbers = true)]
        mu: f64,
        #[arg(long, default_value = "table")]
        format: ReportFormat,
    },
    /// Per-bit entropy floor and erasure cost
    Landauer {
        #[arg(long, default_value_t = RELATIVISTIC_MU, allow_negative_numbers = true)]
        mu: f64,
        #[arg(long, value_name = "N", allow_negative_numbers = true)]
        bits: Option<f64>,
    },
    /// Evaluate a scenario file
    Report {
        file: PathBuf,
        #[arg(long, default_value = "table")]
        format: ReportFormat,
        /// Write to this file instead of standard output
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
}

struct Lines(String);

impl Lines {
    fn new() -> Self {
        Lines(String::new())
    }

    fn kv(&mut self, key: &str, value: impl AsRef<str>) {
        self.0.push_str(&format!("{key:<22} = {}\n", value.as_ref()));
    }
}

fn quantity(text: &str, what: &'static str, want: Dimension, k: &PhysicalConstants) -> Result<Quantity> {
    let q = qparser::evaluate_str_with(text, k)?;
    if q.dimension() != want {
        return Err(Error::invalid(
            what,
            format!("expected {want}, got {} from '{text}'", q.dimension()),
        ));
    }
    Ok(q)
}

fn eval(expr: &str, unit: Option<&str>, k: &PhysicalConstants) -> Result<String> {
    let q = qparser::evaluate_str_with(expr, k)?;
    Ok(match unit {
        Some(u) => format!("{} {}\n", sig6(q.value_in_with(u, k)?), u.trim()),
        None => {
            let units = q.dimension().base_units();
            if units.is_empty() {
                format!("{}\n", sig6(q.magnitude()))
            } else {
                format!("{} {}\n", sig6(q.magnitude()), units)
            }
        }
    })
}

fn blackhole(mass: Option<&str>, radius: Option<&str>, mu: f64, k: &PhysicalConstants) -> Result<String> {
    let hole = match (mass, radius) {
        (Some(m), _) => BlackHole::new(quantity(m, "mass", Dimension::MASS, k)?)?,
        (None, Some(r)) => bh::mass_from_radius(k, &quantity(r, "radius", Dimension::LENGTH, k)?)?,
        (None, None) => return Err(Error::invalid("black hole", "give --mass or --radius")),
    };
    let entropy = bh::entropy(k, &hole)?;
    let mut out = Lines::new();
    out.kv("mass", format!("{} kg", sig6(hole.mass().magnitude())));
    out.kv("mu", sig6(mu));
    out.kv("radius", format!("{} m", sig6(bh::radius(k, &hole)?.magnitude())));
    out.kv("horizon_area", format!("{} m^2", sig6(bh::horizon_area(k, &hole)?.magnitude())));
    out.kv("entropy", format!("{} J/K", sig6(entropy.magnitude())));
    out.kv("entropy_kB", sig6(entropy.div(&k.k_b)?.to_number()?));
    out.kv(
        "capture_cross_section",
        format!("{} m^2", sig6(bh::capture_cross_section(k, &hole, mu)?.magnitude())),
    );
    out.kv(
        "min_capture_momentum",
        format!("{} kg * m * s^-1", sig6(bh::min_capture_momentum(k, &hole, mu)?.magnitude())),
    );
    out.kv("min_bit_energy", format!("{} J", sig6(bh::min_bit_energy(k, &hole, mu)?.magnitude())));
    Ok(out.0)
}

fn report_lines(r: &BoundReport, k: &PhysicalConstants) -> String {
    let mut out = Lines::new();
    out.kv("length", format!("{} m", sig6(r.length.magnitude())));
    out.kv("energy", format!("{} J", sig6(r.energy.magnitude())));
    out.kv("entropy", format!("{} kB", sig6(r.entropy.magnitude() / k.k_b.magnitude())));
    out.kv("mu", sig6(r.mu));
    out.kv("min_mass", format!("{} kg", sig6(r.storage.min_mass)));
    out.kv("term_quadratic", sig6(r.storage.term_quadratic));
    out.kv("term_entropy", sig6(r.storage.term_entropy));
    out.kv("term_linear", sig6(r.storage.term_linear));
    out.kv("rhs", sig6(r.storage.rhs));
    out.kv("n_max_bits", sig6(r.storage.n_max_bits));
    out.kv("bh_limit_bits", sig6(r.bh_limit_bits));
    out.kv("log10_gap", r.log10_gap.map(sig6).unwrap_or_else(|| "-".into()));
    out.kv("landauer_floor", format!("{} J/K", sig6(r.landauer_floor.magnitude())));
    out.kv("infeasible", r.storage.infeasible.to_string());
    out.0
}

#[allow(clippy::too_many_arguments)]
fn bound(
    length: &str,
    energy: Option<&str>,
    mass: Option<&str>,
    entropy: &str,
    mu: f64,
    format: ReportFormat,
    k: &PhysicalConstants,
) -> Result<String> {
    let length = quantity(length, "length", Dimension::LENGTH, k)?;
    let energy = match (energy, mass) {
        (Some(e), None) => quantity(e, "energy", Dimension::ENERGY, k)?,
        (None, Some(m)) => quantity(m, "mass", Dimension::MASS, k)?.mul(&k.c.pow_int(2)?)?,
        _ => return Err(Error::invalid("system", "give exactly one of --energy or --mass")),
    };
    let entropy = quantity(entropy, "entropy", Dimension::ENTROPY, k)?;
    let spec = SystemSpec::new(length, energy, entropy, mu)?;
    let report = BoundReport::compute(k, "system", &spec)?;
    Ok(match format {
        ReportFormat::Table => report_lines(&report, k),
        ReportFormat::Json => scenarios::render(std::slice::from_ref(&report), format, k),
    })
}

fn landauer(mu: f64, bits: Option<f64>, k: &PhysicalConstants) -> Result<String> {
    let floor = bounds::landauer_floor(k, mu)?;
    let mut out = Lines::new();
    out.kv("mu", sig6(mu));
    out.kv("floor", format!("{} J/K", sig6(floor.magnitude())));
    out.kv("floor_kB", sig6(floor.magnitude() / k.k_b.magnitude()));
    out.kv(
        "floor_bits",
        sig6(floor.magnitude() / (k.k_b.magnitude() * std::f64::consts::LN_2)),
    );
    if let Some(n) = bits {
        let s = bounds::landauer_erasure_entropy(k, n)?;
        out.kv("bits", sig6(n));
        out.kv("erasure_entropy", format!("{} J/K", sig6(s.magnitude())));
    }
    Ok(out.0)
}

fn report(file: &PathBuf, format: ReportFormat, k: &PhysicalConstants) -> Result<String> {
    let scenarios = scenarios::load_scenarios_path(file, k)?;
    let reports = scenarios::evaluate(&scenarios, k)?;
    Ok(scenarios::render(&reports, format, k))
}

fn execute(cli: Cli, k: &PhysicalConstants) -> Result<(String, Option<PathBuf>)> {
    let text = match cli.command {
        Command::Eval { expr, unit } => eval(&expr, unit.as_deref(), k)?,
        Command::Blackhole { mass, radius, mu } => {
            blackhole(mass.as_deref(), radius.as_deref(), mu, k)?
        }
        Command::Bound {
            length,
            energy,
            mass,
            entropy,
            mu,
            format,
        } => bound(&length, energy.as_deref(), mass.as_deref(), &entropy, mu, format, k)?,
        Command::Landauer { mu, bits } => landauer(mu, bits, k)?,
        Command::Report {
            file,
            format,
            output,
        } => return Ok((report(&file, format, k)?, output)),
    };
    Ok((text, None))
}

/// Runs the CLI on `argv` (including the program name) and returns the
/// process exit code.
pub fn run<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{}", e.render());
                    EXIT_OK
                }
                _ => {
                    let _ = write!(stderr, "{}", e.render());
                    EXIT_USAGE
                }
            };
        }
    };
    match execute(cli, &PhysicalConstants::SI) {
        Ok((text, None)) => {
            let _ = stdout.write_all(text.as_bytes());
            EXIT_OK
        }
        Ok((text, Some(path))) => match std::fs::write(&path, text) {
            Ok(()) => EXIT_OK,
            Err(e) => {
                let _ = writeln!(stderr, "error: {}: {e}", path.display());
                EXIT_INPUT
            }
        },
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_INPUT
        }
    }
}
