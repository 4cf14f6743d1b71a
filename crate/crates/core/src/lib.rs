//! Thermodynamic and black-hole limits on information storage and erasure.
//!
//! The crate is organised bottom-up:
//!
//! * [`quantity`] and [`constants`]: dimension-checked SI arithmetic;
//! * [`qparser`]: the quantity-expression language (`"1 GW * 10 fs"`);
//! * [`schwarzschild`]: horizon geometry, entropy and capture kinematics;
//! * [`bounds`]: the areal limit, the Landauer floor and the
//!   energy/size/entropy storage bound;
//! * [`scenarios`]: JSON scenario files and rendered reports;
//! * [`cli`]: the `infobound` command line.

pub mod bounds;
pub mod cli;
pub mod constants;
pub mod error;
pub mod format;
pub mod qparser;
pub mod quantity;
pub mod scenarios;
pub mod schwarzschild;

pub use bounds::{StorageBoundBreakdown, SystemSpec};
pub use constants::{constants, PhysicalConstants};
pub use error::{Error, Result};
pub use quantity::{Dimension, Quantity, QuantityError};
pub use schwarzschild::{BlackHole, InfallingSystem, RELATIVISTIC_MU};
