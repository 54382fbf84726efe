//! Conversion between the dimensionless engine and physical inputs, and the
//! constants registry (CODATA 2018, single source of truth).
//!
//! The dimensionless force density relates to the physical pressure through
//! `pressure = f * hbar c / a^(D+1)`: per unit (D-1)-dimensional plate area,
//! in N/m^(D-1) for SI inputs. The reduction `mu = m c a / hbar` is forced
//! by the argument of every Bessel term; with it, the dimensionful series
//! prefactors collapse to the dimensionless ones:
//! `m^2 c^3/(pi hbar) = (mu^2/pi) hbar c/a^2` and
//! `m^4 c^5/(2 pi^2 hbar^3) = (mu^4/(2 pi^2)) hbar c/a^4`.

use crate::series::{CoreError, DimensionlessPoint, ForceValue};

/// Reduced Planck constant, J s (CODATA 2018, exact by definition).
pub const HBAR: f64 = 1.054_571_817e-34;
/// Speed of light, m/s (exact).
pub const C: f64 = 299_792_458.0;
/// One eV/c^2 in kilograms.
pub const EV_PER_C2_KG: f64 = 1.782_661_921_627_897_7e-36;
/// hbar c in J m.
pub const HBAR_C: f64 = HBAR * C;

/// How the mass field of [`PhysicalInput`] is tagged.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MassUnit {
    Kilogram,
    /// electronvolt / c^2
    EvPerC2,
}

/// Unit system of a physical input; `Natural` means hbar = c = 1 with the
/// separation and mass supplied as pure numbers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnitSystem {
    Natural,
    Si,
}

/// Physical description of the configuration. The plate thickness is
/// deliberately absent: it never enters the force.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalInput {
    /// Plate separation a (meters in SI, pure number in natural units).
    pub separation: f64,
    /// Mass value, interpreted per `mass_unit`.
    pub mass: f64,
    pub mass_unit: MassUnit,
    pub dim: u32,
    pub unit_system: UnitSystem,
}

impl PhysicalInput {
    pub fn mass_kg(&self) -> f64 {
        match self.mass_unit {
            MassUnit::Kilogram => self.mass,
            MassUnit::EvPerC2 => self.mass * EV_PER_C2_KG,
        }
    }
}

/// Physical pressure (force per unit (D-1)-dimensional plate area) together
/// with the dimensionless value it came from.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalForce {
    /// N m^{-(D-1)} for SI inputs.
    pub pressure: f64,
    pub dimensionless_f: f64,
}

/// Nondimensionalize: `mu = m c a / hbar` (SI) or `mu = m a` (natural).
pub fn reduce(input: &PhysicalInput) -> Result<DimensionlessPoint, CoreError> {
    if !(input.separation > 0.0) {
        return Err(CoreError::Domain("separation must be > 0".into()));
    }
    if input.mass < 0.0 {
        return Err(CoreError::Domain("mass must be >= 0".into()));
    }
    let mu = match input.unit_system {
        UnitSystem::Natural => input.mass * input.separation,
        UnitSystem::Si => input.mass_kg() * C * input.separation / HBAR,
    };
    DimensionlessPoint::new(mu, input.dim)
}

/// Recombine a dimensionless force into physical units:
/// `pressure = f * hbar c / a^(D+1)` (hbar c = 1 for natural inputs).
pub fn to_physical(f: &ForceValue, input: &PhysicalInput) -> Result<PhysicalForce, CoreError> {
    if !(input.separation > 0.0) {
        return Err(CoreError::Domain("separation must be > 0".into()));
    }
    let hbar_c = match input.unit_system {
        UnitSystem::Natural => 1.0,
        UnitSystem::Si => HBAR_C,
    };
    let pressure = f.f * hbar_c / input.separation.powi(input.dim as i32 + 1);
    Ok(PhysicalForce {
        pressure,
        dimensionless_f: f.f,
    })
}
