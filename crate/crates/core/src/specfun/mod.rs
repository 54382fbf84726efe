//! Self-contained special functions: modified Bessel `K_nu`, the Gamma
//! function and the Riemann zeta function, with stated accuracy contracts.
//!
//! The Bessel evaluator is regime-split (Temme series for small argument,
//! Steed's continued fraction for large, exact half-integer ladder where it
//! applies) and is validated against [`bessel_k_oracle`], an independent
//! integral-representation evaluation that never shares a code path with the
//! production routine.

mod bessel;
mod gamma;
mod oracle;
mod zeta;

pub use bessel::{bessel_k, bessel_k_pair, bessel_k_scaled, bessel_k_scaled_pair};
pub use gamma::gamma_fn;
pub use oracle::bessel_k_oracle;
pub use zeta::zeta_fn;

use thiserror::Error;

/// A special-function value together with an absolute error estimate.
///
/// For in-contract inputs the estimate satisfies
/// `abs_error_estimate <= 1e-12 * max(1, |value|)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpecFunResult {
    pub value: f64,
    pub abs_error_estimate: f64,
}

impl SpecFunResult {
    pub(crate) fn new(value: f64, abs_error_estimate: f64) -> Self {
        SpecFunResult {
            value,
            abs_error_estimate,
        }
    }
}

/// Errors signalled by the special-function evaluators. Overflow is an
/// explicit error value, never a silent infinity: series summation downstream
/// must be able to tell "term negligible" from "evaluation failed".
#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpecFunError {
    #[error("argument outside the supported domain: {0}")]
    Domain(String),
    #[error("result exceeds the representable range")]
    Overflow,
    #[error("iteration failed to converge")]
    NoConvergence,
}
