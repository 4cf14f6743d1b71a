use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

/// Integer exponents over the SI base dimensions used here:
/// mass, length, time and thermodynamic temperature.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Dimension {
    pub mass: i32,
    pub length: i32,
    pub time: i32,
    pub temperature: i32,
}

impl Dimension {
    pub const fn new(mass: i32, length: i32, time: i32, temperature: i32) -> Self {
        Dimension {
            mass,
            length,
            time,
            temperature,
        }
    }

    pub const DIMENSIONLESS: Dimension = Dimension::new(0, 0, 0, 0);
    pub const MASS: Dimension = Dimension::new(1, 0, 0, 0);
    pub const LENGTH: Dimension = Dimension::new(0, 1, 0, 0);
    pub const TIME: Dimension = Dimension::new(0, 0, 1, 0);
    pub const TEMPERATURE: Dimension = Dimension::new(0, 0, 0, 1);
    pub const AREA: Dimension = Dimension::new(0, 2, 0, 0);
    pub const VELOCITY: Dimension = Dimension::new(0, 1, -1, 0);
    pub const MOMENTUM: Dimension = Dimension::new(1, 1, -1, 0);
    pub const FORCE: Dimension = Dimension::new(1, 1, -2, 0);
    pub const ENERGY: Dimension = Dimension::new(1, 2, -2, 0);
    pub const POWER: Dimension = Dimension::new(1, 2, -3, 0);
    pub const ACTION: Dimension = Dimension::new(1, 2, -1, 0);
    pub const ENTROPY: Dimension = Dimension::new(1, 2, -2, -1);
    pub const FREQUENCY: Dimension = Dimension::new(0, 0, -1, 0);
    pub const GRAVITATIONAL: Dimension = Dimension::new(-1, 3, -2, 0);

    pub const fn exponents(self) -> [i32; 4] {
        [self.mass, self.length, self.time, self.temperature]
    }

    pub const fn from_exponents(e: [i32; 4]) -> Self {
        Dimension::new(e[0], e[1], e[2], e[3])
    }

    pub fn is_dimensionless(self) -> bool {
        self == Dimension::DIMENSIONLESS
    }

    /// Multiplies every exponent by `k`.
    pub fn scale(self, k: i32) -> Self {
        Dimension::new(
            self.mass * k,
            self.length * k,
            self.time * k,
            self.temperature * k,
        )
    }

    /// Halves every exponent, or `None` if any exponent is odd.
    pub fn half(self) -> Option<Self> {
        let e = self.exponents();
        if e.iter().any(|x| x % 2 != 0) {
            return None;
        }
        Some(Dimension::from_exponents(e.map(|x| x / 2)))
    }

    /// A conventional name for common dimensions.
    pub fn name(self) -> Option<&'static str> {
        const NAMED: &[(Dimension, &str)] = &[
            (Dimension::DIMENSIONLESS, "dimensionless"),
            (Dimension::MASS, "mass"),
            (Dimension::LENGTH, "length"),
            (Dimension::TIME, "time"),
            (Dimension::TEMPERATURE, "temperature"),
            (Dimension::AREA, "area"),
            (Dimension::VELOCITY, "velocity"),
            (Dimension::MOMENTUM, "momentum"),
            (Dimension::FORCE, "force"),
            (Dimension::ENERGY, "energy"),
            (Dimension::POWER, "power"),
            (Dimension::ACTION, "action"),
            (Dimension::ENTROPY, "entropy"),
            (Dimension::FREQUENCY, "frequency"),
        ];
        NAMED.iter().find(|(d, _)| *d == self).map(|(_, n)| *n)
    }

    /// Canonical base-unit monomial, e.g. `kg * m^2 * s^-2`. Empty when
    /// dimensionless. The output is itself a valid quantity expression.
    pub fn base_units(self) -> String {
        let parts: Vec<String> = ["kg", "m", "s", "K"]
            .iter()
            .zip(self.exponents())
            .filter(|(_, e)| *e != 0)
            .map(|(u, e)| match e {
                1 => (*u).to_string(),
                _ => format!("{u}^{e}"),
            })
            .collect();
        parts.join(" * ")
    }
}

impl fmt::Display for Dimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.name() {
            Some(n) => f.write_str(n),
            None => f.write_str(&self.base_units()),
        }
    }
}

impl Add for Dimension {
    type Output = Dimension;
    fn add(self, rhs: Dimension) -> Dimension {
        Dimension::new(
            self.mass + rhs.mass,
            self.length + rhs.length,
            self.time + rhs.time,
            self.temperature + rhs.temperature,
        )
    }
}

impl Sub for Dimension {
    type Output = Dimension;
    fn sub(self, rhs: Dimension) -> Dimension {
        self + (-rhs)
    }
}

impl Neg for Dimension {
    type Output = Dimension;
    fn neg(self) -> Dimension {
        self.scale(-1)
    }
}

impl Mul<i32> for Dimension {
    type Output = Dimension;
    fn mul(self, k: i32) -> Dimension {
        self.scale(k)
    }
}
