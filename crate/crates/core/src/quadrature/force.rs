//! The pre-Bessel integral forms of the force, evaluated numerically.
//!
//! `inner_integral_1d` is the oscillatory momentum integral that the
//! one-dimensional force differentiates twice with respect to the
//! (continuous) reflection index n; `radial_integral` is its transverse
//! companion for D >= 2, with the full unit-sphere surface
//! `S_{D-2} = 2 pi^{(D-1)/2} / Gamma((D-1)/2)` taken for the solid angle:
//! that normalization is pinned down numerically by the cross-method
//! agreement with the Bessel series at 1e-8.

use super::oscillatory::{integrate_oscillatory, integrate_oscillatory_fixed};
use super::richardson::second_derivative;
use super::{integrate_adaptive, QuadratureError, QuadratureResult};
use crate::kahan::KahanSum;
use crate::specfun;
use std::cell::Cell;

/// Finite-difference steps for d^2/dn^2 in the continuous-n extensions.
/// The oscillatory route is noise-limited (absolute-accuracy integrals
/// amplified by 1/h^2), the radial route truncation-limited (errors grow
/// like (xi h)^4); the two optima differ.
const FD_STEP_1D: f64 = 1e-2;
const FD_STEP_RADIAL: f64 = 2.5e-3;
/// Cap on reflection terms in the n-sums.
const MAX_N_TERMS: usize = 600;

/// Oscillatory inner integral of the one-dimensional route, in units where
/// the separation and hbar c are one:
///
/// ```text
/// I(n) = int_0^inf cos(2 pi n x) / sqrt((pi x)^2 + mu^2) dx
/// ```
///
/// which the implementation must reproduce as (1/pi) K_0(2 n mu) — that
/// identity is exactly what the tests pin down, so nothing here may evaluate
/// a Bessel function.
pub fn inner_integral_1d(n: u32, mu: f64, tol: f64) -> Result<QuadratureResult, QuadratureError> {
    if n < 1 {
        return Err(QuadratureError::Domain("n must be >= 1".into()));
    }
    inner_integral_1d_real(f64::from(n), mu, tol)
}

/// Continuous-n extension of [`inner_integral_1d`]; the force assembly
/// differentiates this numerically in n.
pub fn inner_integral_1d_real(
    n: f64,
    mu: f64,
    tol: f64,
) -> Result<QuadratureResult, QuadratureError> {
    if !(tol > 0.0) {
        return Err(QuadratureError::Domain("tol must be > 0".into()));
    }
    // two-phase: a cheap probe fixes the scale, then the real run targets
    // tol relative to it
    let probe = inner_integral_1d_abs(n, mu, f64::INFINITY, 64)?;
    let scale = probe.value.abs().max(1e-12);
    let r = inner_integral_1d_abs(n, mu, tol * scale, 1200)?;
    Ok(QuadratureResult {
        nodes_used: r.nodes_used + probe.nodes_used,
        ..r
    })
}

/// Absolute-tolerance driver behind both entry points.
pub(crate) fn inner_integral_1d_abs(
    n: f64,
    mu: f64,
    abs_tol: f64,
    max_panels: usize,
) -> Result<QuadratureResult, QuadratureError> {
    if !(n > 0.0) || !(mu > 0.0) {
        return Err(QuadratureError::Domain(
            "inner_integral_1d needs n > 0 and mu > 0".into(),
        ));
    }
    let f = move |x: f64| {
        let px = std::f64::consts::PI * x;
        (2.0 * std::f64::consts::PI * n * x).cos() / (px * px + mu * mu).sqrt()
    };
    // cosine zeros at x_k = (2k+1)/(4n)
    let boundary = move |k: usize| (2.0 * k as f64 + 1.0) / (4.0 * n);
    let r = integrate_oscillatory(&f, &boundary, 0.0, abs_tol, max_panels);
    Ok(QuadratureResult {
        value: r.value,
        abs_error_estimate: r.abs_error_estimate,
        nodes_used: r.nodes_used,
        converged: r.converged,
    })
}

/// One-dimensional force by twice differentiating the oscillatory integral:
/// `f = -(1/4) sum_n d^2/dn^2 I(n)`, with central differences over the
/// continuous-n extension and one Richardson refinement (steps h and h/2).
pub fn force_quadrature_1d(mu: f64, tol: f64) -> Result<QuadratureResult, QuadratureError> {
    force_quadrature_1d_tuned(mu, tol, FD_STEP_1D, 224)
}

pub(crate) fn force_quadrature_1d_tuned(
    mu: f64,
    tol: f64,
    fd_step: f64,
    panels: usize,
) -> Result<QuadratureResult, QuadratureError> {
    if !(mu > 0.0) || !(tol > 0.0) {
        return Err(QuadratureError::Domain(
            "force_quadrature_1d needs mu > 0 and tol > 0".into(),
        ));
    }
    let xi = 2.0 * mu;
    let nodes = Cell::new(0usize);
    let errs = Cell::new(0.0f64);

    // every stencil point runs the same fixed panel budget so the
    // quadrature error varies smoothly in n and largely cancels in the
    // second difference
    let eval = |n: f64| -> f64 {
        let f = move |x: f64| {
            let px = std::f64::consts::PI * x;
            (2.0 * std::f64::consts::PI * n * x).cos() / (px * px + mu * mu).sqrt()
        };
        let boundary = move |k: usize| (2.0 * k as f64 + 1.0) / (4.0 * n);
        let r = integrate_oscillatory_fixed(&f, &boundary, panels, 96);
        nodes.set(nodes.get() + r.nodes_used);
        errs.set(errs.get() + r.abs_error_estimate);
        r.value
    };

    let mut acc = KahanSum::new();
    let mut fd_err_total = 0.0;
    let ratio = (-xi).exp();
    let mut n = 0usize;
    loop {
        n += 1;
        let (d2, fd_raw) = second_derivative(&eval, n as f64, fd_step);
        let term = -0.25 * d2;
        acc.add(term);
        // truncation model: the removed h^2 term rescaled to the h^4
        // residual, plus quadrature noise amplified by the second difference
        let fd_trunc = fd_raw / 3.0 * fd_step * fd_step * (xi * xi + 4.0) / 30.0;
        let fd_noise = 5.0 * errs.get() / (fd_step * fd_step);
        fd_err_total += 0.25 * (fd_trunc + fd_noise);
        errs.set(0.0);
        let sum = acc.value();
        if n >= 3 && term.abs() <= tol * sum.abs() * (1.0 - ratio) {
            let tail = term.abs() * ratio / (1.0 - ratio);
            let err = fd_err_total + tail;
            return Ok(QuadratureResult {
                value: sum,
                abs_error_estimate: err,
                nodes_used: nodes.get(),
                converged: err <= tol * sum.abs(),
            });
        }
        if n >= MAX_N_TERMS {
            return Err(QuadratureError::NoConvergence);
        }
    }
}

/// Transverse-momentum radial integral of the D >= 2 route, in the same
/// units:
///
/// ```text
/// R(n) = int_0^inf q^(D-2) K_0(2 n sqrt(q^2 + mu^2)) dq
/// ```
pub fn radial_integral(
    dim: u32,
    n: u32,
    mu: f64,
    tol: f64,
) -> Result<QuadratureResult, QuadratureError> {
    if n < 1 {
        return Err(QuadratureError::Domain("n must be >= 1".into()));
    }
    radial_integral_real(dim, f64::from(n), mu, tol)
}

/// Continuous-n extension of [`radial_integral`].
pub fn radial_integral_real(
    dim: u32,
    n: f64,
    mu: f64,
    tol: f64,
) -> Result<QuadratureResult, QuadratureError> {
    if dim < 2 {
        return Err(QuadratureError::Domain(
            "radial_integral needs dim >= 2".into(),
        ));
    }
    if !(n > 0.0) || !(mu > 0.0) || !(tol > 0.0) {
        return Err(QuadratureError::Domain(
            "radial_integral needs n > 0, mu > 0, tol > 0".into(),
        ));
    }
    // The integrand decays like exp(-2 n q); past z = 2n sqrt(q^2+mu^2) of
    // about 2 n mu + 60 the contribution is below any target here, and the
    // cap also keeps the Bessel argument inside its evaluation contract.
    let z_max = (2.0 * n * mu + 60.0).min(690.0);
    let q_max = ((z_max / (2.0 * n)).powi(2) - mu * mu).max(0.0).sqrt();
    let power = dim as i32 - 2;
    let integrand = move |q: f64| {
        let z = 2.0 * n * (q * q + mu * mu).sqrt();
        let k0 = specfun::bessel_k(0.0, z).map(|r| r.value).unwrap_or(0.0);
        q.powi(power) * k0
    };
    let (value, err, nodes_used, converged) =
        integrate_adaptive(&integrand, 0.0, q_max, tol, 0.0, 4000);
    Ok(QuadratureResult {
        value,
        abs_error_estimate: err,
        nodes_used,
        converged,
    })
}

/// Force for D >= 2 from the radial integrals:
///
/// ```text
/// f = S_{D-2}/(2 pi)^{D-1} * sum_n [ -(1/(4 pi)) d^2/dn^2 R(D, n, mu) ]
/// ```
/// with `S_{D-2} = 2 pi^{(D-1)/2} / Gamma((D-1)/2)`.
pub fn force_quadrature_general(
    dim: u32,
    mu: f64,
    tol: f64,
) -> Result<QuadratureResult, QuadratureError> {
    force_quadrature_general_tuned(dim, mu, tol, FD_STEP_RADIAL, 3e-14)
}

pub(crate) fn force_quadrature_general_tuned(
    dim: u32,
    mu: f64,
    tol: f64,
    fd_step: f64,
    inner_tol: f64,
) -> Result<QuadratureResult, QuadratureError> {
    if !(2..=10).contains(&dim) {
        return Err(QuadratureError::Domain(format!(
            "force_quadrature_general needs dim in [2, 10], got {dim}"
        )));
    }
    if !(mu > 0.0) || !(tol > 0.0) {
        return Err(QuadratureError::Domain(
            "force_quadrature_general needs mu > 0 and tol > 0".into(),
        ));
    }
    let xi = 2.0 * mu;
    let nodes = Cell::new(0usize);
    let errs = Cell::new(0.0f64);
    let failed = Cell::new(false);

    let eval = |n: f64| -> f64 {
        match radial_integral_real(dim, n, mu, inner_tol) {
            Ok(r) => {
                nodes.set(nodes.get() + r.nodes_used);
                errs.set(errs.get() + r.abs_error_estimate);
                r.value
            }
            Err(_) => {
                failed.set(true);
                f64::NAN
            }
        }
    };

    let d = f64::from(dim);
    let sphere = 2.0 * std::f64::consts::PI.powf((d - 1.0) / 2.0)
        / specfun::gamma_fn((d - 1.0) / 2.0)?.value;
    let prefactor =
        sphere / (2.0 * std::f64::consts::PI).powi(dim as i32 - 1) / (4.0 * std::f64::consts::PI);

    let mut acc = KahanSum::new();
    let mut fd_err_total = 0.0;
    let ratio = (-xi).exp();
    let mut n = 0usize;
    loop {
        n += 1;
        let (d2, fd_raw) = second_derivative(&eval, n as f64, fd_step);
        if failed.get() {
            return Err(QuadratureError::NoConvergence);
        }
        let term = -prefactor * d2;
        acc.add(term);
        let fd_trunc = fd_raw / 3.0 * fd_step * fd_step * (xi * xi + 4.0) / 30.0;
        let fd_noise = 5.0 * errs.get() / (fd_step * fd_step);
        fd_err_total += prefactor * (fd_trunc + fd_noise);
        errs.set(0.0);
        let sum = acc.value();
        if n >= 3 && term.abs() <= tol * sum.abs() * (1.0 - ratio) {
            let tail = term.abs() * ratio / (1.0 - ratio);
            let err = fd_err_total + tail;
            return Ok(QuadratureResult {
                value: sum,
                abs_error_estimate: err,
                nodes_used: nodes.get(),
                converged: err <= tol * sum.abs(),
            });
        }
        if n >= MAX_N_TERMS {
            return Err(QuadratureError::NoConvergence);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::bessel_k_oracle;

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn inner_integral_reproduces_k0() {
        // I(n) = (1/pi) K_0(2 n mu), oracle side computed independently
        for &(n, mu) in &[(1u32, 1.0f64), (2, 1.0), (1, 0.5), (3, 0.7)] {
            let r = inner_integral_1d(n, mu, 1e-12).unwrap();
            assert!(r.converged);
            let expect =
                bessel_k_oracle(0.0, 2.0 * f64::from(n) * mu).unwrap() / std::f64::consts::PI;
            assert!(
                (r.value - expect).abs() <= 1e-10 * expect.abs().max(1e-3),
                "n={n} mu={mu}: {} vs {expect}",
                r.value
            );
        }
    }

    #[test]
    fn cosine_parity_in_n() {
        // the integrand is even under n -> -n; the antiderivative chain in
        // the evaluator only ever sees |n| through the zero spacing, so the
        // two evaluations must agree identically
        let f_pos = inner_integral_1d_real(2.0, 1.0, 1e-12).unwrap();
        let g = |n: f64| {
            let nn = n.abs();
            inner_integral_1d_real(nn, 1.0, 1e-12).unwrap().value
        };
        assert_eq!(f_pos.value, g(-2.0));
    }

    #[test]
    fn oscillatory_integrator_k0_identity() {
        // int_0^inf cos(b t)/sqrt(t^2+1) dt = K_0(b)
        for &b in &[1.0f64, 2.0, 5.0] {
            let f = move |t: f64| (b * t).cos() / (t * t + 1.0).sqrt();
            let boundary =
                move |k: usize| (2.0 * k as f64 + 1.0) * std::f64::consts::PI / (2.0 * b);
            let r = integrate_oscillatory(&f, &boundary, 0.0, 1e-11, 1200);
            let expect = bessel_k_oracle(0.0, b).unwrap();
            assert!(r.converged);
            assert!(
                (r.value - expect).abs() < 1e-10,
                "b={b}: {} vs {expect}",
                r.value
            );
        }
    }

    #[test]
    fn finite_difference_matches_analytic_k0_second_derivative() {
        // d^2/dn^2 K_0(n xi) = xi^2 (K_0 + K_2)(n xi)/2
        for &xi in &[1.0f64, 2.0, 4.0] {
            for &n in &[1.0f64, 2.0, 3.0] {
                let f = |t: f64| specfun::bessel_k(0.0, t * xi).unwrap().value;
                let (d2, _) = second_derivative(&f, n, 1e-2);
                let analytic = xi
                    * xi
                    * (bessel_k_oracle(0.0, n * xi).unwrap()
                        + bessel_k_oracle(2.0, n * xi).unwrap())
                    / 2.0;
                assert!(
                    rel(d2, analytic) < 1e-8,
                    "xi={xi} n={n}: {d2} vs {analytic}"
                );
            }
        }
    }

    #[test]
    fn radial_integral_closed_form_d3() {
        // int_0^inf q K_0(2 sqrt(q^2+1)) dq = (1/2) K_1(2)
        let r = radial_integral(3, 1, 1.0, 1e-12).unwrap();
        assert!(r.converged);
        let expect = 0.5 * bessel_k_oracle(1.0, 2.0).unwrap();
        assert!((r.value - expect).abs() < 1e-10);
    }

    #[test]
    fn radial_integral_matches_brute_force_d2() {
        // plain trapezoidal refinement as an independent check
        let r = radial_integral(2, 1, 1.0, 1e-12).unwrap();
        let f = |q: f64| {
            specfun::bessel_k(0.0, 2.0 * (q * q + 1.0).sqrt())
                .unwrap()
                .value
        };
        let (a, b) = (0.0, 18.0);
        let mut m = 64usize;
        let mut t_prev = 0.0;
        let mut t = 0.0;
        for _ in 0..12 {
            let h = (b - a) / m as f64;
            let mut s = 0.5 * (f(a) + f(b));
            for i in 1..m {
                s += f(a + i as f64 * h);
            }
            t_prev = t;
            t = s * h;
            m *= 2;
        }
        assert!((t - t_prev).abs() < 1e-10);
        assert!((r.value - t).abs() < 1e-9, "{} vs {t}", r.value);
    }

    #[test]
    fn radial_integral_decreases_in_n() {
        let mut prev = f64::INFINITY;
        for n in 1..=5u32 {
            let v = radial_integral(3, n, 0.8, 1e-11).unwrap().value;
            assert!(v < prev);
            prev = v;
        }
    }

    #[test]
    fn results_are_bitwise_deterministic() {
        let a = force_quadrature_general(3, 1.0, 1e-8).unwrap();
        let b = force_quadrature_general(3, 1.0, 1e-8).unwrap();
        assert_eq!(a.value.to_bits(), b.value.to_bits());
        assert_eq!(a.nodes_used, b.nodes_used);
        let a = inner_integral_1d(1, 0.7, 1e-11).unwrap();
        let b = inner_integral_1d(1, 0.7, 1e-11).unwrap();
        assert_eq!(a.value.to_bits(), b.value.to_bits());
    }

    #[test]
    fn domain_errors() {
        assert!(inner_integral_1d(0, 1.0, 1e-10).is_err());
        assert!(inner_integral_1d(1, -1.0, 1e-10).is_err());
        assert!(radial_integral(1, 1, 1.0, 1e-10).is_err());
        assert!(force_quadrature_general(11, 1.0, 1e-8).is_err());
        assert!(force_quadrature_general(1, 1.0, 1e-8).is_err());
    }
}
