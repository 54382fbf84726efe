//! Modified Bessel function of the second kind, K_nu, for real order.
//!
//! Regime split: half-integer orders go through the exact closed-form ladder;
//! otherwise the order is reduced to |u| <= 1/2 and the base pair
//! (K_u, K_{u+1}) comes from Temme's series for x <= 2 (Temme, J. Comput.
//! Phys. 19, 324 (1975)) or Steed's continued fraction CF2 for x > 2
//! (Thompson and Barnett, Comput. Phys. Commun. 47, 245 (1987)), followed by
//! the stable upward recurrence. All internal work is carried on the scaled
//! function e^x K_nu(x) so deep tails lose no relative accuracy.

use super::gamma::{inv_gamma_1p, temme_gamma_pair};
use super::{SpecFunError, SpecFunResult};

const MAX_ITER: usize = 500;
const NU_MAX: f64 = 50.0;
const X_MIN: f64 = 1e-6;
const X_MAX: f64 = 700.0;

fn check_domain(nu: f64, x: f64) -> Result<(), SpecFunError> {
    if !nu.is_finite() || !(0.0..=NU_MAX).contains(&nu) {
        return Err(SpecFunError::Domain(format!(
            "bessel_k requires 0 <= nu <= {NU_MAX}, got {nu}"
        )));
    }
    if !x.is_finite() || x <= 0.0 || !(X_MIN..=X_MAX).contains(&x) {
        return Err(SpecFunError::Domain(format!(
            "bessel_k requires {X_MIN} <= x <= {X_MAX}, got {x}"
        )));
    }
    Ok(())
}

fn err_estimate(value: f64, steps: f64) -> f64 {
    value.abs() * 5e-15 * (1.0 + 0.02 * steps)
}

/// K_nu(x) for nu in [0, 50], x in [1e-6, 700]. Relative error <= 1e-12.
pub fn bessel_k(nu: f64, x: f64) -> Result<SpecFunResult, SpecFunError> {
    let (k, _) = kv_scaled_pair(nu, x)?;
    let value = k * (-x).exp();
    if !value.is_finite() {
        return Err(SpecFunError::Overflow);
    }
    Ok(SpecFunResult::new(value, err_estimate(value, nu)))
}

/// e^x K_nu(x): same contract as [`bessel_k`], finite and nonzero over the
/// whole domain, so tails at large x can be assembled without underflow.
pub fn bessel_k_scaled(nu: f64, x: f64) -> Result<SpecFunResult, SpecFunError> {
    let (k, _) = kv_scaled_pair(nu, x)?;
    Ok(SpecFunResult::new(k, err_estimate(k, nu)))
}

/// (K_nu(x), K_{nu+1}(x)) in one evaluation; the series engines need exactly
/// this pair per term.
pub fn bessel_k_pair(nu: f64, x: f64) -> Result<(SpecFunResult, SpecFunResult), SpecFunError> {
    let (k0, k1) = kv_scaled_pair(nu, x)?;
    let e = (-x).exp();
    let (v0, v1) = (k0 * e, k1 * e);
    if !v0.is_finite() || !v1.is_finite() {
        return Err(SpecFunError::Overflow);
    }
    Ok((
        SpecFunResult::new(v0, err_estimate(v0, nu)),
        SpecFunResult::new(v1, err_estimate(v1, nu + 1.0)),
    ))
}

/// Scaled variant of [`bessel_k_pair`]: (e^x K_nu, e^x K_{nu+1}).
pub fn bessel_k_scaled_pair(
    nu: f64,
    x: f64,
) -> Result<(SpecFunResult, SpecFunResult), SpecFunError> {
    let (k0, k1) = kv_scaled_pair(nu, x)?;
    Ok((
        SpecFunResult::new(k0, err_estimate(k0, nu)),
        SpecFunResult::new(k1, err_estimate(k1, nu + 1.0)),
    ))
}

/// Core dispatch. Returns the scaled pair (e^x K_nu, e^x K_{nu+1}).
fn kv_scaled_pair(nu: f64, x: f64) -> Result<(f64, f64), SpecFunError> {
    check_domain(nu, x)?;
    if nu.fract() == 0.5 {
        return half_integer_ladder(nu, x);
    }

    let n = nu.round();
    let u = nu - n; // |u| <= 1/2
    let (mut km, mut k) = if x <= 2.0 {
        let (a, b) = temme_k_pair(u, x)?;
        let ex = x.exp();
        (a * ex, b * ex)
    } else {
        steed_cf2_k_pair(u, x)?
    };

    // upward recurrence to (K_nu, K_{nu+1}); dominant direction, stable
    let steps = n as i64;
    for j in 0..steps {
        let order = u + 1.0 + j as f64;
        let next = (2.0 * order / x).mul_add(k, km);
        if !next.is_finite() {
            return Err(SpecFunError::Overflow);
        }
        km = k;
        k = next;
    }
    Ok((km, k))
}

/// Exact ladder for half-integer orders, built out of
/// e^x K_{1/2}(x) = sqrt(pi/(2x)) and the three-term recurrence.
fn half_integer_ladder(nu: f64, x: f64) -> Result<(f64, f64), SpecFunError> {
    let base = (std::f64::consts::PI / (2.0 * x)).sqrt();
    let mut km = base; // e^x K_{1/2}
    let mut k = base * (1.0 + 1.0 / x); // e^x K_{3/2}
    let steps = (nu - 0.5) as i64;
    for j in 0..steps {
        let order = 1.5 + j as f64;
        let next = (2.0 * order / x).mul_add(k, km);
        if !next.is_finite() {
            return Err(SpecFunError::Overflow);
        }
        km = k;
        k = next;
    }
    Ok((km, k))
}

/// Temme's series for (K_u, K_{u+1}) with |u| <= 1/2 and 0 < x <= 2.
/// Returns the unscaled pair (no overflow possible at these arguments for
/// the base orders).
fn temme_k_pair(u: f64, x: f64) -> Result<(f64, f64), SpecFunError> {
    debug_assert!(u.abs() <= 0.5 && x <= 2.0);
    let eps = f64::EPSILON;
    let half_x = 0.5 * x;
    let log_half_x = half_x.ln();
    let d = -log_half_x; // ln(2/x)
    let e = u * d;
    let pimu = std::f64::consts::PI * u;
    let fact = if pimu.abs() < 1e-200 {
        1.0
    } else {
        pimu / pimu.sin()
    };
    let fact2 = if e.abs() < 1e-200 { 1.0 } else { e.sinh() / e };
    let (gam1, gam2) = temme_gamma_pair(u);

    let mut ff = fact * (gam1 * e.cosh() + gam2 * fact2 * d);
    let mut sum = ff;
    let exp_e = e.exp(); // (2/x)^u
    let (gampl, gammi) = (inv_gamma_1p(u), inv_gamma_1p(-u)); // 1/Gamma(1 +- u)
    let mut p = 0.5 * exp_e / gampl;
    let mut q = 0.5 / (exp_e * gammi);
    let mut c = 1.0;
    let x2_4 = half_x * half_x;
    let mut sum1 = p;

    for i in 1..MAX_ITER {
        let fi = i as f64;
        ff = (fi * ff + p + q) / (fi * fi - u * u);
        c *= x2_4 / fi;
        p /= fi - u;
        q /= fi + u;
        let del = c * ff;
        sum += del;
        let del1 = c * (p - fi * ff);
        sum1 += del1;
        if del.abs() < sum.abs() * eps {
            return Ok((sum, sum1 * 2.0 / x));
        }
    }
    Err(SpecFunError::NoConvergence)
}

/// Steed's CF2 for (e^x K_u, e^x K_{u+1}) with |u| <= 1/2 and x > 2.
fn steed_cf2_k_pair(u: f64, x: f64) -> Result<(f64, f64), SpecFunError> {
    debug_assert!(u.abs() <= 0.5 && x > 2.0);
    let eps = f64::EPSILON;
    let mut a = u * u - 0.25;
    let mut b = 2.0 * (x + 1.0);
    let mut d = 1.0 / b;
    let mut delta = d;
    let mut f = d;
    let mut prev = 0.0;
    let mut cur = 1.0;
    let mut q = -a;
    let mut c = -a;
    let mut s = 1.0 + q * delta;

    for k in 2..MAX_ITER {
        let kf = k as f64;
        a -= 2.0 * (kf - 1.0);
        b += 2.0;
        d = 1.0 / (a * d + b);
        delta *= b * d - 1.0;
        f += delta;

        let t = (prev - (b - 2.0) * cur) / a;
        prev = cur;
        cur = t;
        c *= -a / kf;
        q += c * t;
        s += q * delta;

        if (q * delta).abs() < s.abs() * eps * 0.5 {
            let ku = (std::f64::consts::PI / (2.0 * x)).sqrt() / s;
            let ku1 = ku * (u + x + 0.5 - (0.25 - u * u) * f) / x;
            return Ok((ku, ku1));
        }
    }
    Err(SpecFunError::NoConvergence)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn half_integer_closed_forms() {
        // K_{1/2}(x) = sqrt(pi/(2x)) e^{-x}
        for &x in &[0.05, 0.7, 1.0, 3.0, 20.0] {
            let exact = (std::f64::consts::PI / (2.0 * x)).sqrt() * (-x).exp();
            assert!(rel(bessel_k(0.5, x).unwrap().value, exact) < 1e-13);
        }
        // K_{3/2}(x) = sqrt(pi/(2x)) e^{-x} (1 + 1/x)
        for &x in &[0.3, 1.0, 8.0] {
            let exact = (std::f64::consts::PI / (2.0 * x)).sqrt() * (-x).exp() * (1.0 + 1.0 / x);
            assert!(rel(bessel_k(1.5, x).unwrap().value, exact) < 1e-13);
        }
        // K_{5/2}(x) = sqrt(pi/(2x)) e^{-x} (1 + 3/x + 3/x^2)
        for &x in &[0.3, 1.0, 8.0] {
            let exact = (std::f64::consts::PI / (2.0 * x)).sqrt()
                * (-x).exp()
                * (1.0 + 3.0 / x + 3.0 / (x * x));
            assert!(rel(bessel_k(2.5, x).unwrap().value, exact) < 1e-13);
        }
    }

    #[test]
    fn three_term_recurrence_residual() {
        // K_{nu+1} = K_{nu-1} + (2 nu / x) K_nu across the regime boundary
        for &nu in &[1.0f64, 1.5, 2.0, 2.5, 3.0] {
            let mut x = 1e-3;
            while x < 50.0 {
                let low = bessel_k(nu - 1.0, x).unwrap().value;
                let mid = bessel_k(nu, x).unwrap().value;
                let high = bessel_k(nu + 1.0, x).unwrap().value;
                let resid = ((low + 2.0 * nu / x * mid) - high).abs() / high;
                assert!(resid < 1e-11, "residual {resid} at nu={nu}, x={x}");
                x *= 2.7;
            }
        }
    }

    #[test]
    fn integer_recurrence_example() {
        for &x in &[0.01, 0.5, 2.0, 7.0, 40.0] {
            let k0 = bessel_k(0.0, x).unwrap().value;
            let k1 = bessel_k(1.0, x).unwrap().value;
            let k2 = bessel_k(2.0, x).unwrap().value;
            assert!(rel(k2, k0 + 2.0 / x * k1) < 1e-12);
        }
    }

    #[test]
    fn scaled_matches_closed_form_at_large_x() {
        // e^x K_{1/2}(x) = sqrt(pi/(2x)); at x = 100 that is sqrt(pi/200)
        let got = bessel_k_scaled(0.5, 100.0).unwrap().value;
        assert!(rel(got, (std::f64::consts::PI / 200.0).sqrt()) < 1e-13);
    }

    #[test]
    fn scaled_matches_oracle_at_unit_argument() {
        // e^1 K_0(1), reference side from the integral representation
        let got = bessel_k_scaled(0.0, 1.0).unwrap().value;
        let expect = 1.0f64.exp() * super::super::oracle::bessel_k_oracle(0.0, 1.0).unwrap();
        assert!(rel(got, expect) < 1e-13);
    }

    #[test]
    fn scaled_consistent_with_unscaled() {
        for &(nu, x) in &[(2.0, 50.0), (0.0, 10.0), (4.5, 30.0), (7.3, 12.0)] {
            let plain = bessel_k(nu, x).unwrap().value;
            let scaled = bessel_k_scaled(nu, x).unwrap().value;
            assert!(rel(scaled * (-x).exp(), plain) < 1e-12);
        }
    }

    #[test]
    fn pair_matches_single_evaluations() {
        for &(nu, x) in &[(0.0, 1.3), (1.0, 6.0), (2.5, 0.2), (3.2, 44.0)] {
            let (a, b) = bessel_k_pair(nu, x).unwrap();
            assert!(rel(a.value, bessel_k(nu, x).unwrap().value) < 1e-14);
            assert!(rel(b.value, bessel_k(nu + 1.0, x).unwrap().value) < 1e-14);
        }
    }

    #[test]
    fn monotone_decreasing_in_x() {
        for &nu in &[0.0, 0.5, 2.0, 9.7] {
            let mut x = 0.01;
            let mut prev = bessel_k(nu, x).unwrap().value;
            while x < 300.0 {
                x *= 1.9;
                let next = bessel_k(nu, x).unwrap().value;
                assert!(next < prev, "K_{nu} not decreasing at x = {x}");
                prev = next;
            }
        }
    }

    #[test]
    fn deep_tail_stays_normal() {
        let v = bessel_k(0.0, 700.0).unwrap().value;
        assert!(v > 0.0 && v.is_normal());
        let s = bessel_k_scaled(0.0, 700.0).unwrap().value;
        assert!(s > 0.0 && rel(s, (std::f64::consts::PI / 1400.0).sqrt()) < 1e-2);
    }

    #[test]
    fn overflow_is_signalled() {
        assert_eq!(bessel_k(50.0, 1e-6), Err(SpecFunError::Overflow));
        // still fine at a smaller order
        assert!(bessel_k(30.0, 1e-6).unwrap().value.is_finite());
    }

    #[test]
    fn domain_errors() {
        assert!(matches!(bessel_k(-1.0, 1.0), Err(SpecFunError::Domain(_))));
        assert!(matches!(bessel_k(51.0, 1.0), Err(SpecFunError::Domain(_))));
        assert!(matches!(bessel_k(1.0, 0.0), Err(SpecFunError::Domain(_))));
        assert!(matches!(bessel_k(1.0, -2.0), Err(SpecFunError::Domain(_))));
        assert!(matches!(bessel_k(1.0, 701.0), Err(SpecFunError::Domain(_))));
    }
}
