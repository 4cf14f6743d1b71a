use std::collections::BTreeMap;

use super::{Dimension, Quantity};
use crate::constants::PhysicalConstants;

/// SI decimal prefixes, `y` (1e-24) through `Y` (1e24). `u`, `µ` and `μ`
/// all mean micro.
pub const PREFIXES: &[(&str, f64)] = &[
    ("y", 1e-24),
    ("z", 1e-21),
    ("a", 1e-18),
    ("f", 1e-15),
    ("p", 1e-12),
    ("n", 1e-9),
    ("u", 1e-6),
    ("\u{b5}", 1e-6),
    ("\u{3bc}", 1e-6),
    ("m", 1e-3),
    ("c", 1e-2),
    ("d", 1e-1),
    ("da", 1e1),
    ("h", 1e2),
    ("k", 1e3),
    ("M", 1e6),
    ("G", 1e9),
    ("T", 1e12),
    ("P", 1e15),
    ("E", 1e18),
    ("Z", 1e21),
    ("Y", 1e24),
];

#[derive(Debug, Clone, Copy, PartialEq)]
struct UnitDef {
    scale: Quantity,
    prefixable: bool,
}

/// Unit symbols and their SI scales.
#[derive(Debug, Clone)]
pub struct UnitTable {
    units: BTreeMap<&'static str, UnitDef>,
}

impl UnitTable {
    pub fn new(k: &PhysicalConstants) -> Self {
        let mut units = BTreeMap::new();
        let mut def = |sym, mag, dim, prefixable| {
            units.insert(
                sym,
                UnitDef {
                    scale: Quantity::from_parts(mag, dim),
                    prefixable,
                },
            );
        };
        def("m", 1.0, Dimension::LENGTH, true);
        def("s", 1.0, Dimension::TIME, true);
        def("g", 1e-3, Dimension::MASS, true);
        def("kg", 1.0, Dimension::MASS, false);
        def("K", 1.0, Dimension::TEMPERATURE, true);
        def("J", 1.0, Dimension::ENERGY, true);
        def("W", 1.0, Dimension::POWER, true);
        def("N", 1.0, Dimension::FORCE, true);
        def("Hz", 1.0, Dimension::FREQUENCY, true);
        def("eV", 1.602_176_634e-19, Dimension::ENERGY, true);
        def("bit", 1.0, Dimension::DIMENSIONLESS, true);
        def("kB", k.k_b.magnitude(), Dimension::ENTROPY, false);
        UnitTable { units }
    }

    /// Resolves a unit symbol, trying the exact symbol first and then the
    /// longest SI prefix whose remainder is a prefixable unit.
    pub fn lookup(&self, symbol: &str) -> Option<Quantity> {
        if let Some(def) = self.units.get(symbol) {
            return Some(def.scale);
        }
        PREFIXES
            .iter()
            .filter(|(p, _)| symbol.len() > p.len() && symbol.starts_with(p))
            .filter_map(|(p, factor)| {
                let def = self.units.get(&symbol[p.len()..])?;
                def.prefixable.then_some((p.len(), *factor, def.scale))
            })
            .max_by_key(|(len, _, _)| *len)
            .map(|(_, factor, scale)| {
                Quantity::from_parts(factor * scale.magnitude(), scale.dimension())
            })
    }

    pub fn symbols(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.units.keys().copied()
    }
}

impl Default for UnitTable {
    fn default() -> Self {
        UnitTable::new(&PhysicalConstants::SI)
    }
}
