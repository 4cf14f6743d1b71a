//! Schwarzschild black holes: horizon geometry, Bekenstein-Hawking entropy,
//! and the kinematics of dropping a one-bit carrier through the horizon.
//!
//! The capture inequalities are evaluated at their extremal (equality)
//! case. They hold only up to order-unity factors, which the capture
//! factor `mu` is there to explore.

use std::f64::consts::PI;

use crate::constants::PhysicalConstants;
use crate::error::{Error, Result};
use crate::quantity::{Dimension, Quantity};

/// Capture factor for relativistic particles, sqrt(27/4).
pub const RELATIVISTIC_MU: f64 = 2.598_076_211_353_316;

pub(crate) fn check_mu(mu: f64) -> Result<f64> {
    if mu.is_finite() && mu > 0.0 {
        Ok(mu)
    } else {
        Err(Error::invalid("mu", format!("must be positive, got {mu}")))
    }
}

pub(crate) fn check_positive(what: &'static str, q: &Quantity, dim: Dimension) -> Result<()> {
    q.expect_dimension(dim)?;
    if q.magnitude() > 0.0 {
        Ok(())
    } else {
        Err(Error::invalid(what, format!("must be positive, got {q}")))
    }
}

pub(crate) fn check_non_negative(what: &'static str, q: &Quantity, dim: Dimension) -> Result<()> {
    q.expect_dimension(dim)?;
    if q.magnitude() >= 0.0 {
        Ok(())
    } else {
        Err(Error::invalid(what, format!("must be non-negative, got {q}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlackHole {
    mass: Quantity,
}

impl BlackHole {
    pub fn new(mass: Quantity) -> Result<Self> {
        check_positive("black-hole mass", &mass, Dimension::MASS)?;
        Ok(BlackHole { mass })
    }

    pub fn from_kilograms(kg: f64) -> Result<Self> {
        BlackHole::new(Quantity::kilograms(kg)?)
    }

    pub fn mass(&self) -> Quantity {
        self.mass
    }
}

/// A carrier of energy `energy` (total, including rest energy) and rest mass
/// `rest_mass`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InfallingSystem {
    energy: Quantity,
    rest_mass: Quantity,
}

impl InfallingSystem {
    pub fn new(k: &PhysicalConstants, energy: Quantity, rest_mass: Quantity) -> Result<Self> {
        check_non_negative("carrier energy", &energy, Dimension::ENERGY)?;
        check_non_negative("carrier rest mass", &rest_mass, Dimension::MASS)?;
        let rest_energy = rest_mass.mul(&k.c.pow_int(2)?)?;
        // a few ulps of slack so that energy == rest_mass c^2 computed by the
        // caller is accepted
        if energy.magnitude() < rest_energy.magnitude() * (1.0 - 1e-12) {
            return Err(Error::invalid(
                "carrier energy",
                format!("{energy} is below the rest energy {rest_energy}"),
            ));
        }
        Ok(InfallingSystem { energy, rest_mass })
    }

    pub fn energy(&self) -> Quantity {
        self.energy
    }

    pub fn rest_mass(&self) -> Quantity {
        self.rest_mass
    }
}

/// Horizon radius R = 2GM/c².
pub fn radius(k: &PhysicalConstants, bh: &BlackHole) -> Result<Quantity> {
    Ok(bh.mass.mul(&k.g)?.scale(2.0)?.div(&k.c.pow_int(2)?)?)
}

/// The hole whose horizon radius is `r`: M = c²R/(2G).
pub fn mass_from_radius(k: &PhysicalConstants, r: &Quantity) -> Result<BlackHole> {
    check_positive("horizon radius", r, Dimension::LENGTH)?;
    let mass = k.c.pow_int(2)?.mul(r)?.div(&k.g.scale(2.0)?)?;
    BlackHole::new(mass)
}

/// Horizon area A = 4πR².
pub fn horizon_area(k: &PhysicalConstants, bh: &BlackHole) -> Result<Quantity> {
    Ok(radius(k, bh)?.pow_int(2)?.scale(4.0 * PI)?)
}

/// Bekenstein-Hawking entropy in the mass form, S = k_B 4πG M²/(cħ).
pub fn entropy(k: &PhysicalConstants, bh: &BlackHole) -> Result<Quantity> {
    let num = k.k_b.mul(&k.g)?.mul(&bh.mass.pow_int(2)?)?.scale(4.0 * PI)?;
    Ok(num.div(&k.c.mul(&k.hbar)?)?)
}

/// Bekenstein-Hawking entropy in the area form, S = k_B c³A/(4Għ).
pub fn entropy_from_area(k: &PhysicalConstants, area: &Quantity) -> Result<Quantity> {
    check_non_negative("horizon area", area, Dimension::AREA)?;
    let num = k.k_b.mul(&k.c.pow_int(3)?)?.mul(area)?;
    Ok(num.div(&k.g.mul(&k.hbar)?.scale(4.0)?)?)
}

/// First-order entropy change for a mass increment,
/// δS = k_B 8πG M δM/(cħ).
pub fn entropy_increase(k: &PhysicalConstants, bh: &BlackHole, delta_m: &Quantity) -> Result<Quantity> {
    check_non_negative("mass increment", delta_m, Dimension::MASS)?;
    let num = k
        .k_b
        .mul(&k.g)?
        .mul(&bh.mass)?
        .mul(delta_m)?
        .scale(8.0 * PI)?;
    Ok(num.div(&k.c.mul(&k.hbar)?)?)
}

/// Smallest momentum whose reduced de Broglie wavelength fits inside the
/// effective horizon diameter: p = ħ/(2Rμ).
pub fn min_capture_momentum(k: &PhysicalConstants, bh: &BlackHole, mu: f64) -> Result<Quantity> {
    let mu = check_mu(mu)?;
    Ok(k.hbar.div(&radius(k, bh)?.scale(2.0 * mu)?)?)
}

/// Smallest energy a one-bit carrier can have and still be captured:
/// δe = cħ/(2Rμ).
pub fn min_bit_energy(k: &PhysicalConstants, bh: &BlackHole, mu: f64) -> Result<Quantity> {
    Ok(min_capture_momentum(k, bh, mu)?.mul(&k.c)?)
}

/// Momentum from the energy-momentum relation, p = √(δe²/c² − δm₀²c²).
pub fn momentum(k: &PhysicalConstants, sys: &InfallingSystem) -> Result<Quantity> {
    let kinetic = sys.energy.div(&k.c)?.pow_int(2)?;
    let rest = sys.rest_mass.mul(&k.c)?.pow_int(2)?;
    let radicand = kinetic.sub(&rest)?;
    if radicand.magnitude() < 0.0 {
        // rounding when energy equals the rest energy
        if -radicand.magnitude() <= 1e-12 * kinetic.magnitude() {
            return Ok(Quantity::new(0.0, Dimension::MOMENTUM)?);
        }
    }
    Ok(radicand.sqrt()?)
}

/// Effective capture cross section σ = πμ²R².
pub fn capture_cross_section(k: &PhysicalConstants, bh: &BlackHole, mu: f64) -> Result<Quantity> {
    let mu = check_mu(mu)?;
    Ok(radius(k, bh)?.pow_int(2)?.scale(PI * mu * mu)?)
}
