//! Casimir pressure of a massive scalar field confined between two parallel
//! Dirichlet plates in D+1 space-time dimensions.
//!
//! Everything is computed in dimensionless form: the physics input is the
//! reduced mass `mu = m c a / hbar` and the spatial dimension `D`, and the
//! output is the dimensionless force density `f` defined through
//! `F = f * hbar c / a^(D+1)` (negative `f` means the plates attract).
//!
//! Four independent routes to the same number are provided so they can
//! cross-check one another:
//!
//! * [`series`] — exponentially convergent modified-Bessel series (the fast
//!   production path, with closed forms for the massless limit),
//! * [`quadrature`] — direct numerical evaluation of the oscillatory
//!   integrals the series descends from, plus the Abel-regulated raw mode
//!   sum with Richardson extrapolation,
//! * [`green`] — the one-dimensional boundary Green functions and the force
//!   assembled from their fluctuation spectrum,
//! * [`units`] — conversion between the dimensionless engine and SI inputs.
//!
//! [`verify`] runs the full cross-method comparison grid and reports one
//! pass/fail line per criterion; the `casimir verify` CLI subcommand and the
//! `acceptance` integration test are both thin wrappers around it.

// coefficient tables carry their full published precision, and domain
// guards use negated comparisons so NaN inputs fail them
#![allow(clippy::excessive_precision)]
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod green;
pub mod kahan;
pub mod quadrature;
pub mod series;
pub mod specfun;
pub mod units;
pub mod verify;

pub use green::{force_fdt_1d, green_cavity, green_exterior, GreenError, GreenEval, Region};
pub use quadrature::{
    extrapolate_ladder, force_mode_sum, force_quadrature_1d, force_quadrature_general,
    inner_integral_1d, mode_sum_regulated, radial_integral, QuadratureError, QuadratureResult,
    RegulatorLadder,
};
pub use series::{
    force_massless, force_series_1d, force_series_3d, force_series_general, truncation_bound,
    CoreError, DimensionlessPoint, ForceValue, SeriesDiagnostics,
};
pub use specfun::{
    bessel_k, bessel_k_oracle, bessel_k_scaled, gamma_fn, zeta_fn, SpecFunError, SpecFunResult,
};
pub use units::{reduce, to_physical, MassUnit, PhysicalForce, PhysicalInput, UnitSystem};

/// Plate geometry: separation between the inner faces, plate thickness and
/// the spatial dimension. The thickness never enters the force (it cancels
/// between the interior and exterior vacuum pressures) but is carried so the
/// Green-function bookkeeping can demonstrate exactly that.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Geometry {
    /// Distance `a` between the facing plate interfaces.
    pub separation: f64,
    /// Plate thickness `d`.
    pub thickness: f64,
    /// Spatial dimension `D >= 1`.
    pub dim: u32,
}

impl Geometry {
    pub fn new(separation: f64, thickness: f64, dim: u32) -> Self {
        Geometry {
            separation,
            thickness,
            dim,
        }
    }

    /// Cavity-side Green function for this geometry.
    pub fn green_cavity(&self, x: f64, x_prime: f64, p: f64) -> Result<GreenEval, GreenError> {
        green::green_cavity(x, x_prime, p, self.separation)
    }

    /// Exterior-side Green function for this geometry.
    pub fn green_exterior(&self, x: f64, x_prime: f64, p: f64) -> Result<GreenEval, GreenError> {
        green::green_exterior(x, x_prime, p, self.separation, self.thickness)
    }
}
