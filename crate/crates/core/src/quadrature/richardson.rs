//! Richardson extrapolation on halving ladders and the extrapolated central
//! second difference used for d^2/dn^2 of the continuous-n integrals.

use super::{QuadratureError, RegulatorLadder};

/// Polynomial Richardson extrapolation to zero for values sampled on a
/// halving ladder `lambda_k = lambda_0 / 2^k`. Eliminates error powers
/// lambda^1 .. lambda^order. Returns (limit, error estimate).
///
/// The table is T[k][j] with T[k][0] = values[k] and
/// `T[k][j] = (2^j T[k+1][j-1] - T[k][j-1]) / (2^j - 1)`.
pub(crate) fn richardson_limit(
    values: &[f64],
    order: usize,
    err_out_of_order: &mut bool,
) -> (f64, f64) {
    let n = values.len();
    let order = order.min(n - 1);
    let mut col = values.to_vec();
    let mut last_increment = f64::INFINITY;
    let mut prev_tail = col[n - 1];

    for j in 1..=order {
        let w = (2.0f64).powi(j as i32);
        for k in 0..n - j {
            col[k] = (w * col[k + 1] - col[k]) / (w - 1.0);
        }
        col.truncate(n - j);
        let tail = *col.last().expect("ladder too short");
        let inc = (tail - prev_tail).abs();
        if j > 2 && inc > 8.0 * last_increment && last_increment > 0.0 {
            *err_out_of_order = true;
        }
        last_increment = inc;
        prev_tail = tail;
    }
    (
        prev_tail,
        last_increment.max(f64::EPSILON * prev_tail.abs()),
    )
}

/// Richardson limit of a regulator ladder, per the module's standard
/// elimination depth (order 4). Fills the ladder's `extrapolated` field and
/// returns (limit, error estimate). Errors if the extrapolants diverge.
pub fn extrapolate_ladder(ladder: &mut RegulatorLadder) -> Result<(f64, f64), QuadratureError> {
    // the ladder constructor guarantees >= 4 strictly decreasing lambdas
    for w in ladder.lambdas.windows(2) {
        let ratio = w[0] / w[1];
        if (ratio - 2.0).abs() > 1e-9 {
            return Err(QuadratureError::Domain(
                "ladder must halve: lambda_{k+1} = lambda_k / 2".into(),
            ));
        }
    }
    let mut ill = false;
    let (value, err) = richardson_limit(&ladder.values, 4, &mut ill);
    if ill {
        return Err(QuadratureError::IllConditioned);
    }
    ladder.extrapolated = value;
    Ok((value, err))
}

/// Central second derivative with one Richardson refinement over the two
/// step sizes h and h/2: error O(h^4) in the smooth part. Returns the
/// derivative and the raw refinement increment |rich - D_{h/2}| (the size of
/// the eliminated h^2 term, which callers scale into a truncation model).
pub(crate) fn second_derivative<F: Fn(f64) -> f64>(f: &F, x: f64, h: f64) -> (f64, f64) {
    let fc = f(x);
    let d_h = (f(x + h) - 2.0 * fc + f(x - h)) / (h * h);
    let hh = 0.5 * h;
    let d_h2 = (f(x + hh) - 2.0 * fc + f(x - hh)) / (hh * hh);
    let richardson = (4.0 * d_h2 - d_h) / 3.0;
    (richardson, (richardson - d_h2).abs())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant_ladder_extrapolates_to_constant() {
        let lambdas = vec![0.5, 0.25, 0.125, 0.0625, 0.03125];
        let values = vec![3.7; 5];
        let mut ladder = RegulatorLadder::new(lambdas, values).unwrap();
        let (v, _) = extrapolate_ladder(&mut ladder).unwrap();
        assert!((v - 3.7).abs() < 1e-14);
        assert_eq!(ladder.extrapolated, v);
    }

    #[test]
    fn polynomial_ladder_is_exact() {
        // v(l) = c0 + c1 l + c2 l^2 recovered to machine precision
        let (c0, c1, c2) = (1.25, -0.8, 2.5);
        let lambdas: Vec<f64> = (0..6).map(|k| 0.5 / (1u64 << k) as f64).collect();
        let values: Vec<f64> = lambdas.iter().map(|&l| c0 + c1 * l + c2 * l * l).collect();
        let mut ladder = RegulatorLadder::new(lambdas, values).unwrap();
        let (v, _) = extrapolate_ladder(&mut ladder).unwrap();
        assert!((v - c0).abs() < 1e-13);
    }

    #[test]
    fn non_halving_ladder_rejected() {
        let mut ladder = RegulatorLadder::new(vec![0.5, 0.3, 0.2, 0.1], vec![0.0; 4]).unwrap();
        assert!(matches!(
            extrapolate_ladder(&mut ladder),
            Err(QuadratureError::Domain(_))
        ));
    }

    #[test]
    fn second_derivative_of_exponential() {
        let f = |x: f64| (2.0 * x).exp();
        let (d2, _) = second_derivative(&f, 0.3, 1e-2);
        let exact = 4.0 * (0.6f64).exp();
        assert!(((d2 - exact) / exact).abs() < 1e-9);
    }
}
