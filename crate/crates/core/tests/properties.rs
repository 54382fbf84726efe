//! Property tests over randomly sampled inputs.

use casimir_core::specfun::{bessel_k, bessel_k_pair};
use casimir_core::{force_series_general, green_cavity, green_exterior};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// Three-term recurrence holds for arbitrary in-contract order/argument.
    #[test]
    fn bessel_recurrence(nu in 1.0f64..20.0, x in 1e-2f64..80.0) {
        let low = bessel_k(nu - 1.0, x).unwrap().value;
        let (mid, high) = bessel_k_pair(nu, x).unwrap();
        let resid = ((low + 2.0 * nu / x * mid.value) - high.value).abs() / high.value;
        prop_assert!(resid < 1e-11, "residual {resid} at nu={nu}, x={x}");
    }

    /// K_nu is strictly decreasing in its argument.
    #[test]
    fn bessel_monotone(nu in 0.0f64..10.0, x in 1e-2f64..50.0, step in 1.01f64..3.0) {
        let a = bessel_k(nu, x).unwrap().value;
        let b = bessel_k(nu, x * step).unwrap().value;
        prop_assert!(b < a);
    }

    /// The force is attractive and shrinks with the mass gap.
    #[test]
    fn force_attractive_and_screened(dim in 1u32..=10, mu in 0.0f64..6.0) {
        let f = force_series_general(dim, mu, 1e-10).unwrap().f;
        prop_assert!(f < 0.0);
        let heavier = force_series_general(dim, mu + 0.5, 1e-10).unwrap().f;
        prop_assert!(heavier.abs() < f.abs());
    }

    /// Green functions are symmetric under source/observer exchange.
    #[test]
    fn green_reciprocity(
        u in 0.0f64..1.0,
        v in 0.0f64..1.0,
        p in 0.05f64..8.0,
    ) {
        let a = 1.0;
        let d = 0.4;
        // keep clear of the cavity poles p a = k pi
        let p = if (p * a / std::f64::consts::PI).fract().abs() < 1e-3 { p + 0.01 } else { p };
        let (x1, x2) = (-a / 2.0 + a * u, -a / 2.0 + a * v);
        let g12 = green_cavity(x1, x2, p, a).unwrap().as_complex();
        let g21 = green_cavity(x2, x1, p, a).unwrap().as_complex();
        prop_assert!((g12 - g21).norm() <= 1e-12 * g12.norm().max(1.0));

        let (y1, y2) = (a / 2.0 + d + 2.0 * u, a / 2.0 + d + 2.0 * v);
        let g12 = green_exterior(y1, y2, p, a, d).unwrap().as_complex();
        let g21 = green_exterior(y2, y1, p, a, d).unwrap().as_complex();
        prop_assert!((g12 - g21).norm() <= 1e-12 * g12.norm().max(1.0));
    }
}
