//! Semi-infinite oscillatory integrals: partition at the integrand's sign
//! structure (the caller supplies the cosine zeros), integrate each panel
//! with the GK15 rule, and accelerate the alternating sequence of partial
//! sums by iterated averaging. Plain truncation of a 1/x-decaying oscillatory
//! tail could never reach 1e-10; the averaging ladder converges essentially
//! to machine precision once the panel magnitudes vary smoothly.

use super::adaptive::gk15;

/// Result of the accelerated panel summation.
pub(crate) struct OscillatorySum {
    pub value: f64,
    pub abs_error_estimate: f64,
    pub nodes_used: usize,
    pub converged: bool,
}

/// Integrate `f` over [0, inf). `boundary(k)` must return the k-th panel
/// edge (strictly increasing, boundary(0) > 0); panel k spans
/// [boundary(k-1), boundary(k)] with panel 0 spanning [0, boundary(0)].
///
/// Converges when the combined error estimate drops below
/// `max(abs_tol, rel_tol * |value|)`. Panels are analytic half-periods, so
/// the per-panel quadrature error is modelled as pure roundoff on the
/// panel magnitudes; the extrapolation increment carries the real
/// truncation information.
pub(crate) fn integrate_oscillatory<F, B>(
    f: &F,
    boundary: &B,
    rel_tol: f64,
    abs_tol: f64,
    max_panels: usize,
) -> OscillatorySum
where
    F: Fn(f64) -> f64,
    B: Fn(usize) -> f64,
{
    const MIN_PANELS: usize = 12;

    let mut partial_sums = Vec::with_capacity(64);
    let mut nodes_used = 0usize;
    let mut acc = 0.0f64;
    // roundoff scales with the largest magnitude the accumulator or a
    // single panel ever reaches, not with the panel count
    let mut peak = 0.0f64;
    let mut lo = 0.0f64;

    let mut best = f64::NAN;
    let mut best_err = f64::INFINITY;

    for k in 0..max_panels {
        let hi = boundary(k);
        debug_assert!(hi > lo, "panel boundaries must increase");
        let (v, _, resabs) = gk15(f, lo, hi);
        nodes_used += 15;
        acc += v;
        peak = peak.max(acc.abs()).max(resabs);
        let roundoff = 4.0 * f64::EPSILON * peak;
        partial_sums.push(acc);
        lo = hi;

        if partial_sums.len() >= MIN_PANELS {
            // extrapolate from a bounded window of the most recent sums
            let window = &partial_sums[partial_sums.len().saturating_sub(96)..];
            let (val, err) = average_tail(window);
            let total_err = err + roundoff;
            if total_err < best_err {
                best = val;
                best_err = total_err;
            }
            if best_err <= abs_tol.max(rel_tol * best.abs()) {
                return OscillatorySum {
                    value: best,
                    abs_error_estimate: best_err,
                    nodes_used,
                    converged: true,
                };
            }
            // roundoff floor: more panels cannot improve on this
            if k >= 2 * MIN_PANELS && best_err <= 10.0 * f64::EPSILON * peak {
                return OscillatorySum {
                    value: best,
                    abs_error_estimate: best_err,
                    nodes_used,
                    converged: false,
                };
            }
        }
    }

    if best.is_nan() {
        best = *partial_sums.last().unwrap_or(&0.0);
    }
    OscillatorySum {
        value: best,
        abs_error_estimate: best_err,
        nodes_used,
        converged: false,
    }
}

/// Fixed-budget variant: run exactly `panels` panels and extrapolate once
/// from the trailing `window` partial sums. Evaluations at neighbouring
/// parameters then share the same truncation structure, so their errors
/// vary smoothly and cancel in finite differences; the adaptive early exit
/// would decorrelate them.
pub(crate) fn integrate_oscillatory_fixed<F, B>(
    f: &F,
    boundary: &B,
    panels: usize,
    window: usize,
) -> OscillatorySum
where
    F: Fn(f64) -> f64,
    B: Fn(usize) -> f64,
{
    let mut partial_sums = Vec::with_capacity(panels);
    let mut acc = 0.0f64;
    let mut peak = 0.0f64;
    let mut lo = 0.0f64;
    for k in 0..panels {
        let hi = boundary(k);
        let (v, _, resabs) = gk15(f, lo, hi);
        acc += v;
        peak = peak.max(acc.abs()).max(resabs);
        partial_sums.push(acc);
        lo = hi;
    }
    let tail = &partial_sums[partial_sums.len().saturating_sub(window)..];
    let (value, err) = average_tail(tail);
    OscillatorySum {
        value,
        abs_error_estimate: err + 4.0 * f64::EPSILON * peak,
        nodes_used: panels * 15,
        converged: true,
    }
}

/// Iterated averaging (Euler-transform style) of an oscillating sequence of
/// partial sums. Returns the limit taken at the level with the smallest
/// increment, with twice that increment as the error estimate.
fn average_tail(sums: &[f64]) -> (f64, f64) {
    let mut row = sums.to_vec();
    let mut prev = *row.last().expect("non-empty");
    let mut best = prev;
    let mut best_err = f64::INFINITY;

    while row.len() >= 2 {
        for i in 0..row.len() - 1 {
            row[i] = 0.5 * (row[i] + row[i + 1]);
        }
        row.pop();
        let cur = *row.last().expect("non-empty");
        let delta = (cur - prev).abs();
        if delta < best_err {
            best_err = delta;
            best = cur;
        }
        prev = cur;
    }
    (best, (2.0 * best_err).max(f64::EPSILON * best.abs()))
}
