//! The four physical constants every formula depends on.
//!
//! Values: c, ħ (from the exact h) and k_B are exact under the 2019 SI
//! redefinition; G is the CODATA 2018 recommended value.

use crate::error::Error;
use crate::quantity::{Dimension, Quantity};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalConstants {
    /// Speed of light in vacuum, m/s.
    pub c: Quantity,
    /// Reduced Planck constant, J s.
    pub hbar: Quantity,
    /// Newtonian constant of gravitation, m^3 kg^-1 s^-2.
    pub g: Quantity,
    /// Boltzmann constant, J/K.
    pub k_b: Quantity,
}

impl PhysicalConstants {
    pub const SI: PhysicalConstants = PhysicalConstants {
        c: Quantity::from_parts(299_792_458.0, Dimension::VELOCITY),
        hbar: Quantity::from_parts(1.054_571_817e-34, Dimension::ACTION),
        g: Quantity::from_parts(6.674_30e-11, Dimension::GRAVITATIONAL),
        k_b: Quantity::from_parts(1.380_649e-23, Dimension::ENTROPY),
    };

    /// Builds a custom constant set from plain SI magnitudes. Used to run the
    /// formulas with round values (for instance `c = 1`).
    pub fn new(c: f64, hbar: f64, g: f64, k_b: f64) -> Result<Self, Error> {
        let make = |name: &'static str, x: f64, dim: Dimension| {
            if x.is_finite() && x > 0.0 {
                Ok(Quantity::from_parts(x, dim))
            } else {
                Err(Error::invalid(name, format!("must be positive and finite, got {x}")))
            }
        };
        Ok(PhysicalConstants {
            c: make("c", c, Dimension::VELOCITY)?,
            hbar: make("hbar", hbar, Dimension::ACTION)?,
            g: make("G", g, Dimension::GRAVITATIONAL)?,
            k_b: make("kB", k_b, Dimension::ENTROPY)?,
        })
    }

    /// Looks up a constant by the name used in quantity expressions.
    pub fn by_name(&self, name: &str) -> Option<Quantity> {
        match name {
            "c" => Some(self.c),
            "hbar" => Some(self.hbar),
            "G" => Some(self.g),
            "kB" => Some(self.k_b),
            _ => None,
        }
    }
}

impl Default for PhysicalConstants {
    fn default() -> Self {
        PhysicalConstants::SI
    }
}

/// The standard SI constant table.
pub fn constants() -> PhysicalConstants {
    PhysicalConstants::SI
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn values() {
        let k = constants();
        assert_eq!(k.c.magnitude(), 299_792_458.0);
        assert_eq!(k.k_b.magnitude(), 1.380_649e-23);
        assert_eq!(k.hbar.magnitude(), 1.054_571_817e-34);
        assert_eq!(k.g.magnitude(), 6.674_30e-11);
    }

    #[test]
    fn dimensions() {
        let k = constants();
        assert_eq!(k.c.dimension(), Dimension::new(0, 1, -1, 0));
        assert_eq!(k.hbar.dimension(), Dimension::new(1, 2, -1, 0));
        assert_eq!(k.g.dimension(), Dimension::new(-1, 3, -2, 0));
        assert_eq!(k.k_b.dimension(), Dimension::new(1, 2, -2, -1));
        for q in [k.c, k.hbar, k.g, k.k_b] {
            assert!(q.magnitude() > 0.0);
        }
        // c*hbar is energy times length
        let ch = k.c.mul(&k.hbar).unwrap();
        assert_eq!(ch.dimension(), Dimension::new(1, 3, -2, 0));
    }

    #[test]
    fn custom_rejects_non_positive() {
        assert!(PhysicalConstants::new(1.0, 1.0, 1.0, 1.0).is_ok());
        assert!(PhysicalConstants::new(0.0, 1.0, 1.0, 1.0).is_err());
        assert!(PhysicalConstants::new(1.0, f64::NAN, 1.0, 1.0).is_err());
    }

    #[test]
    fn by_name() {
        let k = constants();
        assert_eq!(k.by_name("G"), Some(k.g));
        assert_eq!(k.by_name("hbar"), Some(k.hbar));
        assert_eq!(k.by_name("h"), None);
    }
}
