//! Information bounds.
//!
//! * the areal (Bekenstein-Hawking) limit on the bits that fit in a region
//!   of extent L;
//! * the per-bit entropy floor from dropping a bit into a black hole, and
//!   the n k_B ln 2 erasure cost;
//! * the storage bound obtained by throwing an n-bit system of energy U,
//!   entropy S and extent L into the smallest hole that can swallow it:
//!
//! ```text
//! n ln 2 <= 4πG U²/(c⁵ħ) - S/k_B + 2πLU/(cħ)
//! ```
//!
//! `log 2` is the natural logarithm throughout.

use std::f64::consts::{LN_2, PI};

use serde::Serialize;

use crate::constants::PhysicalConstants;
use crate::error::{Error, Result};
use crate::quantity::{Dimension, Quantity};
use crate::schwarzschild::{
    check_mu, check_non_negative, check_positive, entropy_from_area, BlackHole, RELATIVISTIC_MU,
};

/// The encoding system: extent, total energy (rest mass included),
/// intrinsic entropy and capture factor.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SystemSpec {
    length: Quantity,
    energy: Quantity,
    entropy: Quantity,
    mu: f64,
}

impl SystemSpec {
    pub fn new(length: Quantity, energy: Quantity, entropy: Quantity, mu: f64) -> Result<Self> {
        check_positive("length", &length, Dimension::LENGTH)?;
        check_non_negative("energy", &energy, Dimension::ENERGY)?;
        check_non_negative("entropy", &entropy, Dimension::ENTROPY)?;
        let mu = check_mu(mu)?;
        Ok(SystemSpec {
            length,
            energy,
            entropy,
            mu,
        })
    }

    /// Same as [`SystemSpec::new`] with the relativistic capture factor.
    pub fn with_default_mu(length: Quantity, energy: Quantity, entropy: Quantity) -> Result<Self> {
        SystemSpec::new(length, energy, entropy, RELATIVISTIC_MU)
    }

    pub fn length(&self) -> Quantity {
        self.length
    }

    pub fn energy(&self) -> Quantity {
        self.energy
    }

    pub fn entropy(&self) -> Quantity {
        self.entropy
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }
}

/// Right-hand side of the storage bound, term by term. The terms are
/// dimensionless (units of k_B); `n_max_bits` divides their sum by ln 2.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct StorageBoundBreakdown {
    /// 4πG U²/(c⁵ħ)
    pub term_quadratic: f64,
    /// S/k_B
    pub term_entropy: f64,
    /// 2πLU/(cħ)
    pub term_linear: f64,
    /// term_quadratic - term_entropy + term_linear, in nats
    pub rhs: f64,
    /// Mass of the smallest hole that can absorb the system, kg.
    pub min_mass: f64,
    /// max(0, rhs / ln 2)
    pub n_max_bits: f64,
    /// The claimed entropy exceeds what the energy and size allow.
    pub infeasible: bool,
}

/// Areal limit in bits for a region of extent `length`, taking the
/// enclosing area as πL².
pub fn bekenstein_hawking_limit(k: &PhysicalConstants, length: &Quantity) -> Result<f64> {
    check_positive("length", length, Dimension::LENGTH)?;
    let area = length.pow_int(2)?.scale(PI)?;
    let entropy = entropy_from_area(k, &area)?;
    Ok(entropy.div(&k.k_b.scale(LN_2)?)?.to_number()?)
}

fn check_bits(n: f64) -> Result<f64> {
    if n.is_finite() && n >= 0.0 && n.fract() == 0.0 {
        Ok(n)
    } else {
        Err(Error::invalid("bit count", format!("must be a non-negative integer, got {n}")))
    }
}

/// Minimum entropy produced by erasing `n` bits, n k_B ln 2. `n` is an
/// integer count carried as `f64` so that counts beyond 2^64 are allowed.
pub fn landauer_erasure_entropy(k: &PhysicalConstants, n: f64) -> Result<Quantity> {
    let n = check_bits(n)?;
    Ok(k.k_b.scale(n * LN_2)?)
}

/// Per-bit entropy floor (2π/μ) k_B obtained from black-hole capture.
pub fn landauer_floor(k: &PhysicalConstants, mu: f64) -> Result<Quantity> {
    let mu = check_mu(mu)?;
    Ok(k.k_b.scale(2.0 * PI / mu)?)
}

/// The smallest hole able to absorb a system of extent `length`: horizon
/// diameter L, so M = c²L/(4G).
pub fn min_absorbing_mass(k: &PhysicalConstants, length: &Quantity) -> Result<BlackHole> {
    check_positive("length", length, Dimension::LENGTH)?;
    let mass = k.c.pow_int(2)?.mul(length)?.div(&k.g.scale(4.0)?)?;
    BlackHole::new(mass)
}

fn term_quadratic(k: &PhysicalConstants, u: &Quantity) -> Result<f64> {
    let num = k.g.mul(&u.pow_int(2)?)?.scale(4.0 * PI)?;
    let den = k.c.pow_int(5)?.mul(&k.hbar)?;
    Ok(num.div(&den)?.to_number()?)
}

fn term_entropy(k: &PhysicalConstants, s: &Quantity) -> Result<f64> {
    Ok(s.div(&k.k_b)?.to_number()?)
}

fn term_linear(k: &PhysicalConstants, l: &Quantity, u: &Quantity) -> Result<f64> {
    let num = l.mul(u)?.scale(2.0 * PI)?;
    Ok(num.div(&k.c.mul(&k.hbar)?)?.to_number()?)
}

/// The mass-dependent term 8πG M U/(c³ħ).
pub fn absorption_mass_term(k: &PhysicalConstants, bh: &BlackHole, u: &Quantity) -> Result<f64> {
    let num = k.g.mul(&bh.mass())?.mul(u)?.scale(8.0 * PI)?;
    let den = k.c.pow_int(3)?.mul(&k.hbar)?;
    Ok(num.div(&den)?.to_number()?)
}

/// Margin, in units of k_B, by which dropping the system carrying `n` bits
/// into `bh` satisfies the second law:
///
/// ```text
/// 4πG U²/(c⁵ħ) - S/k_B + 8πG M U/(c³ħ) - n ln 2
/// ```
///
/// This is the exact entropy change of the hole, (M + U/c²)² expanded, so it
/// includes the U² term. Non-negative means consistent.
pub fn absorption_inequality_slack(
    k: &PhysicalConstants,
    spec: &SystemSpec,
    n: f64,
    bh: &BlackHole,
) -> Result<f64> {
    let n = check_bits(n)?;
    let t1 = term_quadratic(k, &spec.energy)?;
    let t2 = term_entropy(k, &spec.entropy)?;
    let t3 = absorption_mass_term(k, bh, &spec.energy)?;
    Ok(t1 - t2 + t3 - n * LN_2)
}

/// The storage bound for `spec`, evaluated at the smallest absorbing hole.
pub fn storage_bound_bits(k: &PhysicalConstants, spec: &SystemSpec) -> Result<StorageBoundBreakdown> {
    let t1 = term_quadratic(k, &spec.energy)?;
    let t2 = term_entropy(k, &spec.entropy)?;
    let t3 = term_linear(k, &spec.length, &spec.energy)?;
    let min_mass = min_absorbing_mass(k, &spec.length)?;
    let rhs = t1 - t2 + t3;
    Ok(StorageBoundBreakdown {
        term_quadratic: t1,
        term_entropy: t2,
        term_linear: t3,
        rhs,
        min_mass: min_mass.mass().magnitude(),
        n_max_bits: (rhs / LN_2).max(0.0),
        infeasible: rhs < 0.0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quantity::rel_diff;
    use crate::schwarzschild::radius;

    const K: PhysicalConstants = PhysicalConstants::SI;

    fn close(a: f64, b: f64, tol: f64) {
        assert!(rel_diff(a, b) < tol, "{a} vs {b}");
    }

    fn m(x: f64) -> Quantity {
        Quantity::meters(x).unwrap()
    }

    fn device() -> SystemSpec {
        let u = Quantity::kilograms(1.0)
            .unwrap()
            .mul(&K.c.pow_int(2).unwrap())
            .unwrap();
        let s = K.k_b.scale(1e23).unwrap();
        SystemSpec::with_default_mu(m(0.1), u, s).unwrap()
    }

    fn pulse(entropy_kb: f64) -> SystemSpec {
        SystemSpec::with_default_mu(
            m(1e-6),
            Quantity::joules(1e-5).unwrap(),
            K.k_b.scale(entropy_kb).unwrap(),
        )
        .unwrap()
    }

    // Frozen values: 40-digit evaluation of the closed forms.

    #[test]
    fn bh_limit_examples() {
        close(bekenstein_hawking_limit(&K, &m(0.1)).unwrap(), 4.3375515040516256e67, 1e-13);
        close(bekenstein_hawking_limit(&K, &m(1e-6)).unwrap(), 4.3375515040516256e57, 1e-13);
        let a = bekenstein_hawking_limit(&K, &m(0.3)).unwrap();
        let b = bekenstein_hawking_limit(&K, &m(0.6)).unwrap();
        close(b / a, 4.0, 1e-14);
        assert!(bekenstein_hawking_limit(&K, &m(0.0)).is_err());
        assert!(bekenstein_hawking_limit(&K, &Quantity::seconds(1.0).unwrap()).is_err());
    }

    #[test]
    fn erasure_entropy_examples() {
        assert_eq!(landauer_erasure_entropy(&K, 0.0).unwrap().magnitude(), 0.0);
        let one = landauer_erasure_entropy(&K, 1.0).unwrap();
        assert_eq!(one.dimension(), Dimension::ENTROPY);
        close(one.magnitude(), 9.5699296169290793e-24, 1e-15);
        close(landauer_erasure_entropy(&K, 1e23).unwrap().magnitude(), 0.95699296169290793, 1e-15);
        assert!(landauer_erasure_entropy(&K, -1.0).is_err());
        assert!(landauer_erasure_entropy(&K, 1.5).is_err());
    }

    #[test]
    fn floor_examples() {
        close(landauer_floor(&K, 2.0 * PI).unwrap().magnitude(), K.k_b.magnitude(), 1e-15);
        let f = landauer_floor(&K, RELATIVISTIC_MU).unwrap();
        close(f.magnitude(), 3.3389603712408115e-23, 1e-14);
        close(f.magnitude() / K.k_b.magnitude(), 2.4183991523122905, 1e-14);
        let bits = f.magnitude() / (K.k_b.magnitude() * LN_2);
        close(bits, 3.4890124639310143, 1e-14);
        assert!(bits >= 1.0);
        assert!(landauer_floor(&K, 0.0).is_err());
    }

    #[test]
    fn min_mass_examples() {
        close(min_absorbing_mass(&K, &m(0.1)).unwrap().mass().magnitude(), 3.3664773037502721e25, 1e-14);
        close(min_absorbing_mass(&K, &m(1e-6)).unwrap().mass().magnitude(), 3.3664773037502721e20, 1e-14);
        let l = m(0.37);
        let r = radius(&K, &min_absorbing_mass(&K, &l).unwrap()).unwrap();
        close(r.magnitude(), 0.185, 1e-15);
        assert!(min_absorbing_mass(&K, &m(-1.0)).is_err());
    }

    #[test]
    fn device_breakdown() {
        let b = storage_bound_bits(&K, &device()).unwrap();
        close(b.term_quadratic, 26528868313218179.0, 1e-13);
        close(b.term_entropy, 1e23, 1e-15);
        close(b.term_linear, 1.7861766614125753e42, 1e-13);
        close(b.n_max_bits, 2.5769082115715274e42, 1e-13);
        close(b.min_mass, 3.3664773037502721e25, 1e-14);
        assert!(!b.infeasible);
    }

    #[test]
    fn pulse_breakdown() {
        let b = storage_bound_bits(&K, &pulse(0.0)).unwrap();
        close(b.term_quadratic, 3.2842477589088618e-28, 1e-13);
        assert_eq!(b.term_entropy, 0.0);
        close(b.term_linear, 1987389562442366.9, 1e-13);
        close(b.n_max_bits, 2867197066050089.6, 1e-13);
    }

    #[test]
    fn infeasible_when_entropy_dominates() {
        let b = storage_bound_bits(&K, &pulse(1e16)).unwrap();
        assert_eq!(b.n_max_bits, 0.0);
        assert!(b.infeasible);
        assert!(b.rhs < 0.0);
    }

    #[test]
    fn linear_term_matches_mass_term_at_min_mass() {
        let spec = device();
        let b = storage_bound_bits(&K, &spec).unwrap();
        let hole = min_absorbing_mass(&K, &spec.length()).unwrap();
        let via_mass = absorption_mass_term(&K, &hole, &spec.energy()).unwrap();
        close(via_mass, b.term_linear, 1e-12);
    }

    #[test]
    fn slack_examples() {
        let empty = SystemSpec::with_default_mu(
            m(1.0),
            Quantity::joules(0.0).unwrap(),
            Quantity::joules_per_kelvin(0.0).unwrap(),
        )
        .unwrap();
        let hole = BlackHole::from_kilograms(1e30).unwrap();
        assert_eq!(absorption_inequality_slack(&K, &empty, 0.0, &hole).unwrap(), 0.0);

        let spec = device();
        let hole = min_absorbing_mass(&K, &spec.length()).unwrap();
        let slack = absorption_inequality_slack(&K, &spec, 1e42, &hole).unwrap();
        close(slack, 1.0930294808526299e42, 1e-13);
        assert!(slack > 0.0);

        let bigger = BlackHole::from_kilograms(hole.mass().magnitude() * 2.0).unwrap();
        assert!(absorption_inequality_slack(&K, &spec, 1e42, &bigger).unwrap() > slack);
    }

    #[test]
    fn spec_validation() {
        let u = Quantity::joules(1.0).unwrap();
        let s = Quantity::joules_per_kelvin(0.0).unwrap();
        assert!(SystemSpec::new(m(0.0), u, s, 1.0).is_err());
        assert!(SystemSpec::new(m(1.0), Quantity::joules(-1.0).unwrap(), s, 1.0).is_err());
        assert!(SystemSpec::new(m(1.0), u, Quantity::joules_per_kelvin(-1.0).unwrap(), 1.0).is_err());
        assert!(SystemSpec::new(m(1.0), u, s, 0.0).is_err());
        assert!(SystemSpec::new(m(1.0), m(1.0), s, 1.0).is_err());
    }
}
