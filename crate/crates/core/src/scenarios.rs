//! Scenario files and bound reports.
//!
//! Input is JSON:
//!
//! ```json
//! {"scenarios": [
//!   {"name": "device", "length": "0.1 m", "mass": "1 kg", "entropy": "1e23 kB"},
//!   {"name": "pulse", "length": "1e-6 m", "energy": "1 GW * 10 fs", "mu": 2.6}
//! ]}
//! ```
//!
//! Every quantity is an expression string. Exactly one of `energy` and
//! `mass` is given; a mass is converted with U = mc². `entropy` defaults to
//! `0 kB` and `mu` to sqrt(27/4).

use std::collections::HashSet;
use std::io::Read;
use std::path::Path;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bounds::{self, StorageBoundBreakdown, SystemSpec};
use crate::constants::PhysicalConstants;
use crate::error::{Error, Result};
use crate::format::{sci6, sig6};
use crate::qparser;
use crate::quantity::{Dimension, Quantity};
use crate::schwarzschild::RELATIVISTIC_MU;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFile {
    scenarios: Vec<RawScenario>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawScenario {
    name: String,
    length: String,
    energy: Option<String>,
    mass: Option<String>,
    entropy: Option<String>,
    mu: Option<f64>,
}

/// A validated scenario.
#[derive(Debug, Clone, PartialEq)]
pub struct Scenario {
    pub name: String,
    pub spec: SystemSpec,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct ScenarioFile {
    pub scenarios: Vec<Scenario>,
}

impl ScenarioFile {
    pub fn len(&self) -> usize {
        self.scenarios.len()
    }

    pub fn is_empty(&self) -> bool {
        self.scenarios.is_empty()
    }
}

fn field(
    k: &PhysicalConstants,
    scenario: &str,
    name: &'static str,
    text: &str,
    want: Dimension,
) -> Result<Quantity> {
    let fail = |message: String| Error::Scenario {
        scenario: scenario.to_string(),
        field: name,
        message,
    };
    let q = qparser::evaluate_str_with(text, k).map_err(|e| fail(e.to_string()))?;
    if q.dimension() != want {
        return Err(fail(format!("expected {want}, got {}", q.dimension())));
    }
    Ok(q)
}

fn validate(k: &PhysicalConstants, raw: RawScenario) -> Result<Scenario> {
    let name = raw.name;
    let length = field(k, &name, "length", &raw.length, Dimension::LENGTH)?;
    let energy = match (&raw.energy, &raw.mass) {
        (Some(e), None) => field(k, &name, "energy", e, Dimension::ENERGY)?,
        (None, Some(m)) => {
            let m = field(k, &name, "mass", m, Dimension::MASS)?;
            m.mul(&k.c.pow_int(2)?).map_err(|e| Error::Scenario {
                scenario: name.clone(),
                field: "mass",
                message: e.to_string(),
            })?
        }
        _ => {
            return Err(Error::Scenario {
                scenario: name,
                field: "energy",
                message: "exactly one of 'energy' or 'mass' is required".into(),
            })
        }
    };
    let entropy = field(
        k,
        &name,
        "entropy",
        raw.entropy.as_deref().unwrap_or("0 kB"),
        Dimension::ENTROPY,
    )?;
    let mu = raw.mu.unwrap_or(RELATIVISTIC_MU);
    let spec = SystemSpec::new(length, energy, entropy, mu).map_err(|e| {
        let field = match &e {
            Error::InvalidArgument { what, .. } => match *what {
                "length" => "length",
                "energy" if raw.mass.is_some() => "mass",
                "energy" => "energy",
                "entropy" => "entropy",
                _ => "mu",
            },
            _ => "mu",
        };
        Error::Scenario {
            scenario: name.clone(),
            field,
            message: e.to_string(),
        }
    })?;
    Ok(Scenario { name, spec })
}

/// Parses and validates a scenario document. All expressions are evaluated
/// and dimension-checked here.
pub fn load_scenarios_str(text: &str, k: &PhysicalConstants) -> Result<ScenarioFile> {
    let raw: RawFile = serde_json::from_str(text)?;
    let mut seen = HashSet::new();
    let mut scenarios = Vec::with_capacity(raw.scenarios.len());
    for s in raw.scenarios {
        if s.name.trim().is_empty() {
            return Err(Error::ScenarioFile("scenario names must be non-empty".into()));
        }
        if !seen.insert(s.name.clone()) {
            return Err(Error::ScenarioFile(format!("duplicate scenario name '{}'", s.name)));
        }
        scenarios.push(validate(k, s)?);
    }
    Ok(ScenarioFile { scenarios })
}

pub fn load_scenarios<R: Read>(mut reader: R, k: &PhysicalConstants) -> Result<ScenarioFile> {
    let mut text = String::new();
    reader.read_to_string(&mut text).map_err(|source| Error::Io {
        path: "<input>".into(),
        source,
    })?;
    load_scenarios_str(&text, k)
}

pub fn load_scenarios_path(path: impl AsRef<Path>, k: &PhysicalConstants) -> Result<ScenarioFile> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })?;
    load_scenarios_str(&text, k)
}

/// Every bound computed for one system.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundReport {
    pub name: String,
    pub length: Quantity,
    pub energy: Quantity,
    pub entropy: Quantity,
    pub mu: f64,
    pub bh_limit_bits: f64,
    pub storage: StorageBoundBreakdown,
    pub landauer_floor: Quantity,
    /// log10(bh_limit / n_max), present only when n_max > 0.
    pub log10_gap: Option<f64>,
}

impl BoundReport {
    pub fn compute(k: &PhysicalConstants, name: &str, spec: &SystemSpec) -> Result<Self> {
        let storage = bounds::storage_bound_bits(k, spec)?;
        let bh_limit_bits = bounds::bekenstein_hawking_limit(k, &spec.length())?;
        let log10_gap =
            (storage.n_max_bits > 0.0).then(|| (bh_limit_bits / storage.n_max_bits).log10());
        Ok(BoundReport {
            name: name.to_string(),
            length: spec.length(),
            energy: spec.energy(),
            entropy: spec.entropy(),
            mu: spec.mu(),
            bh_limit_bits,
            storage,
            landauer_floor: bounds::landauer_floor(k, spec.mu())?,
            log10_gap,
        })
    }

    pub fn n_max_bits(&self) -> f64 {
        self.storage.n_max_bits
    }

    pub fn infeasible(&self) -> bool {
        self.storage.infeasible
    }
}

/// Computes one report per scenario, in input order.
pub fn evaluate(file: &ScenarioFile, k: &PhysicalConstants) -> Result<Vec<BoundReport>> {
    file.scenarios
        .par_iter()
        .map(|s| BoundReport::compute(k, &s.name, &s.spec))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ReportFormat {
    #[default]
    Table,
    Json,
}

impl std::str::FromStr for ReportFormat {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "table" => Ok(ReportFormat::Table),
            "json" => Ok(ReportFormat::Json),
            other => Err(format!("unknown format '{other}' (expected table or json)")),
        }
    }
}

/// A number in both raw and scientific-notation form.
#[derive(Debug, Serialize)]
struct Num {
    value: f64,
    sci: String,
}

impl From<f64> for Num {
    fn from(value: f64) -> Self {
        Num {
            value,
            sci: sci6(value),
        }
    }
}

#[allow(non_snake_case)]
#[derive(Debug, Serialize)]
struct JsonReport<'a> {
    name: &'a str,
    length_m: Num,
    energy_J: Num,
    entropy_J_per_K: Num,
    entropy_kB: Num,
    mu: Num,
    bh_limit_bits: Num,
    term_quadratic: Num,
    term_entropy: Num,
    term_linear: Num,
    rhs: Num,
    n_max_bits: Num,
    min_mass_kg: Num,
    landauer_floor_J_per_K: Num,
    log10_gap: Option<Num>,
    infeasible: bool,
}

fn json_view<'a>(r: &'a BoundReport, k: &PhysicalConstants) -> JsonReport<'a> {
    JsonReport {
        name: &r.name,
        length_m: r.length.magnitude().into(),
        energy_J: r.energy.magnitude().into(),
        entropy_J_per_K: r.entropy.magnitude().into(),
        entropy_kB: (r.entropy.magnitude() / k.k_b.magnitude()).into(),
        mu: r.mu.into(),
        bh_limit_bits: r.bh_limit_bits.into(),
        term_quadratic: r.storage.term_quadratic.into(),
        term_entropy: r.storage.term_entropy.into(),
        term_linear: r.storage.term_linear.into(),
        rhs: r.storage.rhs.into(),
        n_max_bits: r.storage.n_max_bits.into(),
        min_mass_kg: r.storage.min_mass.into(),
        landauer_floor_J_per_K: r.landauer_floor.magnitude().into(),
        log10_gap: r.log10_gap.map(Num::from),
        infeasible: r.storage.infeasible,
    }
}

const COLUMNS: [&str; 9] = [
    "L [m]", "U [J]", "S/kB", "T1", "T2", "T3", "n_max [bit]", "B-H [bit]", "gap",
];
const COL_WIDTH: usize = 13;

fn table(reports: &[BoundReport]) -> String {
    let name_width = reports
        .iter()
        .map(|r| r.name.chars().count())
        .chain(std::iter::once(4))
        .max()
        .unwrap_or(4);
    let mut out = format!("{:<name_width$}", "name");
    for c in COLUMNS {
        out.push_str(&format!(" {c:>COL_WIDTH$}"));
    }
    out.push('\n');
    for r in reports {
        out.push_str(&format!("{:<name_width$}", r.name));
        let cells = [
            sci6(r.length.magnitude()),
            sci6(r.energy.magnitude()),
            sci6(r.storage.term_entropy),
            sci6(r.storage.term_quadratic),
            sci6(r.storage.term_entropy),
            sci6(r.storage.term_linear),
            sci6(r.storage.n_max_bits),
            sci6(r.bh_limit_bits),
            r.log10_gap.map(sig6).unwrap_or_else(|| "-".into()),
        ];
        for c in cells {
            out.push_str(&format!(" {c:>COL_WIDTH$}"));
        }
        out.push('\n');
    }
    out
}

/// Renders reports. Output is deterministic: equal reports give
/// byte-identical text.
pub fn render(reports: &[BoundReport], format: ReportFormat, k: &PhysicalConstants) -> String {
    match format {
        ReportFormat::Table => table(reports),
        ReportFormat::Json => {
            let views: Vec<_> = reports.iter().map(|r| json_view(r, k)).collect();
            let mut s = serde_json::to_string_pretty(&views).expect("reports serialize");
            s.push('\n');
            s
        }
    }
}
