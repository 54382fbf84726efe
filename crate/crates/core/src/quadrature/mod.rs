//! Independent numerical evaluation of the pre-Bessel integral forms of the
//! plate force, plus the Abel-regulated raw mode sum. Everything here exists
//! to cross-check the series engine without sharing its code path: the only
//! Bessel use is inside integrands where the integral itself is the object
//! under test.
//!
//! The oscillatory kernels integrate between consecutive cosine zeros with a
//! Gauss-Kronrod panel rule and accelerate the alternating panel sums by
//! iterated averaging; the slowly-damped mode-sum and fluctuation integrals
//! are tamed by an exponential regulator ladder extrapolated to zero with a
//! Richardson table.

mod adaptive;
mod force;
mod modesum;
mod oscillatory;
mod richardson;

pub use force::{
    force_quadrature_1d, force_quadrature_general, inner_integral_1d, inner_integral_1d_real,
    radial_integral, radial_integral_real,
};
pub use modesum::{force_mode_sum, mode_sum_ladder, mode_sum_regulated};
pub use richardson::extrapolate_ladder;

pub(crate) use adaptive::integrate_adaptive;
pub(crate) use oscillatory::integrate_oscillatory;
pub(crate) use richardson::richardson_limit;

use thiserror::Error;

/// Outcome of a quadrature-based evaluation. `converged` is set only when
/// the absolute error estimate met the effective tolerance the caller asked
/// for (relative tolerances are converted against the running value).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureResult {
    pub value: f64,
    pub abs_error_estimate: f64,
    pub nodes_used: usize,
    pub converged: bool,
}

/// A descending sequence of regulator strengths with the regulated sums
/// evaluated on it, and the Richardson limit at zero regulator.
#[derive(Debug, Clone, PartialEq)]
pub struct RegulatorLadder {
    pub lambdas: Vec<f64>,
    pub values: Vec<f64>,
    pub extrapolated: f64,
}

impl RegulatorLadder {
    /// Build a ladder from strictly decreasing positive regulator strengths.
    /// `extrapolated` is filled by [`extrapolate_ladder`].
    pub fn new(lambdas: Vec<f64>, values: Vec<f64>) -> Result<Self, QuadratureError> {
        if lambdas.len() != values.len() {
            return Err(QuadratureError::Domain(
                "ladder lambdas/values length mismatch".into(),
            ));
        }
        if lambdas.len() < 4 {
            return Err(QuadratureError::Domain(
                "regulator ladder needs at least 4 points".into(),
            ));
        }
        if lambdas.windows(2).any(|w| w[1] >= w[0]) || lambdas.iter().any(|&l| l <= 0.0) {
            return Err(QuadratureError::Domain(
                "regulator strengths must be positive and strictly decreasing".into(),
            ));
        }
        Ok(RegulatorLadder {
            lambdas,
            values,
            extrapolated: f64::NAN,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum QuadratureError {
    #[error("invalid input: {0}")]
    Domain(String),
    #[error("quadrature failed to reach the requested tolerance")]
    NoConvergence,
    #[error("extrapolation ill-conditioned: successive extrapolants diverge")]
    IllConditioned,
    #[error("special function evaluation failed: {0}")]
    SpecFun(#[from] crate::specfun::SpecFunError),
}
