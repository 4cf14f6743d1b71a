//! Dimensioned arithmetic.
//!
//! A [`Quantity`] is a finite `f64` magnitude in coherent SI base units
//! together with its [`Dimension`]. Every operation checks dimensions and
//! refuses to produce a non-finite magnitude.

mod dimension;
mod units;

pub use dimension::Dimension;
pub use units::{UnitTable, PREFIXES};

use serde::Serialize;

use crate::constants::PhysicalConstants;
use crate::error::Error;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum QuantityError {
    #[error("magnitude overflow")]
    Overflow,
    #[error("zero divisor")]
    ZeroDivisor,
    #[error("dimension mismatch ({left} vs {right})")]
    DimensionMismatch { left: Dimension, right: Dimension },
    #[error("negative radicand")]
    NegativeRadicand,
    #[error("non-square dimension")]
    NonSquareDimension,
    #[error("non-finite magnitude")]
    NonFinite,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Quantity {
    magnitude: f64,
    dimension: Dimension,
}

fn finite(x: f64) -> Result<f64, QuantityError> {
    if x.is_finite() {
        Ok(x)
    } else {
        Err(QuantityError::Overflow)
    }
}

impl Quantity {
    pub fn new(magnitude: f64, dimension: Dimension) -> Result<Self, QuantityError> {
        if !magnitude.is_finite() {
            return Err(QuantityError::NonFinite);
        }
        Ok(Quantity {
            magnitude,
            dimension,
        })
    }

    /// Caller guarantees `magnitude` is finite.
    pub(crate) const fn from_parts(magnitude: f64, dimension: Dimension) -> Self {
        Quantity {
            magnitude,
            dimension,
        }
    }

    pub fn dimensionless(x: f64) -> Result<Self, QuantityError> {
        Quantity::new(x, Dimension::DIMENSIONLESS)
    }

    pub fn meters(x: f64) -> Result<Self, QuantityError> {
        Quantity::new(x, Dimension::LENGTH)
    }

    pub fn seconds(x: f64) -> Result<Self, QuantityError> {
        Quantity::new(x, Dimension::TIME)
    }

    pub fn kilograms(x: f64) -> Result<Self, QuantityError> {
        Quantity::new(x, Dimension::MASS)
    }

    pub fn joules(x: f64) -> Result<Self, QuantityError> {
        Quantity::new(x, Dimension::ENERGY)
    }

    pub fn joules_per_kelvin(x: f64) -> Result<Self, QuantityError> {
        Quantity::new(x, Dimension::ENTROPY)
    }

    pub fn magnitude(&self) -> f64 {
        self.magnitude
    }

    pub fn dimension(&self) -> Dimension {
        self.dimension
    }

    pub fn mul(&self, rhs: &Quantity) -> Result<Quantity, QuantityError> {
        Ok(Quantity {
            magnitude: finite(self.magnitude * rhs.magnitude)?,
            dimension: self.dimension + rhs.dimension,
        })
    }

    pub fn div(&self, rhs: &Quantity) -> Result<Quantity, QuantityError> {
        if rhs.magnitude == 0.0 {
            return Err(QuantityError::ZeroDivisor);
        }
        Ok(Quantity {
            magnitude: finite(self.magnitude / rhs.magnitude)?,
            dimension: self.dimension - rhs.dimension,
        })
    }

    pub fn add(&self, rhs: &Quantity) -> Result<Quantity, QuantityError> {
        self.same_dimension(rhs)?;
        Ok(Quantity {
            magnitude: finite(self.magnitude + rhs.magnitude)?,
            dimension: self.dimension,
        })
    }

    pub fn sub(&self, rhs: &Quantity) -> Result<Quantity, QuantityError> {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Quantity {
        Quantity {
            magnitude: -self.magnitude,
            dimension: self.dimension,
        }
    }

    /// Multiplies the magnitude by a pure number.
    pub fn scale(&self, k: f64) -> Result<Quantity, QuantityError> {
        Ok(Quantity {
            magnitude: finite(self.magnitude * k)?,
            dimension: self.dimension,
        })
    }

    pub fn pow_int(&self, k: i32) -> Result<Quantity, QuantityError> {
        if k < 0 && self.magnitude == 0.0 {
            return Err(QuantityError::ZeroDivisor);
        }
        Ok(Quantity {
            magnitude: finite(self.magnitude.powi(k))?,
            dimension: self.dimension.scale(k),
        })
    }

    pub fn sqrt(&self) -> Result<Quantity, QuantityError> {
        if self.magnitude < 0.0 {
            return Err(QuantityError::NegativeRadicand);
        }
        let dimension = self
            .dimension
            .half()
            .ok_or(QuantityError::NonSquareDimension)?;
        Ok(Quantity {
            magnitude: self.magnitude.sqrt(),
            dimension,
        })
    }

    pub fn same_dimension(&self, rhs: &Quantity) -> Result<(), QuantityError> {
        self.expect_dimension(rhs.dimension)
    }

    pub fn expect_dimension(&self, want: Dimension) -> Result<(), QuantityError> {
        if self.dimension == want {
            Ok(())
        } else {
            Err(QuantityError::DimensionMismatch {
                left: self.dimension,
                right: want,
            })
        }
    }

    /// Magnitude of a dimensionless quantity.
    pub fn to_number(&self) -> Result<f64, QuantityError> {
        self.expect_dimension(Dimension::DIMENSIONLESS)?;
        Ok(self.magnitude)
    }

    /// Expresses this quantity as a multiple of a unit expression such as
    /// `"uJ"` or `"J / K"`, using the standard SI constants.
    pub fn value_in(&self, unit: &str) -> Result<f64, Error> {
        self.value_in_with(unit, &PhysicalConstants::SI)
    }

    pub fn value_in_with(&self, unit: &str, k: &PhysicalConstants) -> Result<f64, Error> {
        let scale = crate::qparser::evaluate_str_with(unit, k)?;
        self.expect_dimension(scale.dimension)?;
        if scale.magnitude == 0.0 {
            return Err(QuantityError::ZeroDivisor.into());
        }
        Ok(self.magnitude / scale.magnitude)
    }

    /// Renders as a parseable expression: shortest round-trip magnitude
    /// followed by the canonical base-unit monomial.
    pub fn render(&self) -> String {
        let units = self.dimension.base_units();
        if units.is_empty() {
            format!("{:e}", self.magnitude)
        } else {
            format!("{:e} {}", self.magnitude, units)
        }
    }
}

impl std::fmt::Display for Quantity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.render())
    }
}

/// Relative difference `|a - b| / max(|a|, |b|)`, zero when both are zero.
pub fn rel_diff(a: f64, b: f64) -> f64 {
    let scale = a.abs().max(b.abs());
    if scale == 0.0 {
        0.0
    } else {
        (a - b).abs() / scale
    }
}
