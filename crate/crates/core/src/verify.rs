//! Cross-method verification grid: every release criterion as an executable
//! check with its tolerance pinned in code. The CLI `verify` subcommand and
//! the `acceptance` integration test both run exactly this.

use crate::series::force_series_general_impl;
use crate::{green, quadrature, series, specfun, units};

/// One measured comparison inside a criterion.
#[derive(Debug, Clone)]
pub struct CheckLine {
    pub label: String,
    pub measured: f64,
    pub threshold: f64,
    pub passed: bool,
}

/// Outcome of one verification criterion.
#[derive(Debug, Clone)]
pub struct CriterionOutcome {
    pub id: usize,
    pub name: &'static str,
    pub passed: bool,
    pub lines: Vec<CheckLine>,
}

/// Configuration for a verification run.
#[derive(Debug, Clone, Copy, Default)]
pub struct VerifyConfig {
    /// Reduced grids, completes in seconds.
    pub quick: bool,
    /// Fault injection: multiply one term of the general series by this
    /// factor (used to prove the cross-method checks can fail).
    pub perturb_series: Option<f64>,
}

struct Recorder {
    lines: Vec<CheckLine>,
    failed: bool,
}

impl Recorder {
    fn new() -> Self {
        Recorder {
            lines: Vec::new(),
            failed: false,
        }
    }

    /// Record a measured discrepancy against its threshold.
    fn check(&mut self, label: String, measured: f64, threshold: f64) {
        let passed = measured.is_finite() && measured <= threshold;
        self.failed |= !passed;
        self.lines.push(CheckLine {
            label,
            measured,
            threshold,
            passed,
        });
    }

    /// Record a hard failure (an evaluation that errored out).
    fn fail(&mut self, label: String) {
        self.failed = true;
        self.lines.push(CheckLine {
            label,
            measured: f64::NAN,
            threshold: 0.0,
            passed: false,
        });
    }

    fn into_outcome(self, id: usize, name: &'static str) -> CriterionOutcome {
        CriterionOutcome {
            id,
            name,
            passed: !self.failed,
            lines: self.lines,
        }
    }
}

fn rel(a: f64, b: f64) -> f64 {
    ((a - b) / b).abs()
}

/// Run the full verification grid (or the reduced quick grid).
pub fn run_all(cfg: &VerifyConfig) -> Vec<CriterionOutcome> {
    vec![
        criterion_1_massless_closed_forms(cfg),
        criterion_2_massless_limit(cfg),
        criterion_3_cross_formula(cfg),
        criterion_4_series_vs_quadrature(cfg),
        criterion_5_fdt_route(cfg),
        criterion_6_mode_sum(cfg),
        criterion_7_green_structure(cfg),
        criterion_8_special_functions(cfg),
        criterion_9_physical_units(cfg),
        criterion_10_mass_screening(cfg),
    ]
}

fn series_general(
    cfg: &VerifyConfig,
    dim: u32,
    mu: f64,
    tol: f64,
) -> Result<f64, series::CoreError> {
    let perturb = cfg.perturb_series.map(|factor| (1usize, factor));
    force_series_general_impl(dim, mu, tol, series::DEFAULT_TERM_BUDGET, perturb).map(|fv| fv.f)
}

fn criterion_1_massless_closed_forms(_cfg: &VerifyConfig) -> CriterionOutcome {
    let mut r = Recorder::new();
    let pi = std::f64::consts::PI;
    let f1 = series::force_massless(1).unwrap().f;
    r.check(
        "force_massless(1) vs -pi/24".into(),
        rel(f1, -pi / 24.0),
        1e-14,
    );
    let f3 = series::force_massless(3).unwrap().f;
    r.check(
        "force_massless(3) vs -pi^2/480".into(),
        rel(f3, -pi * pi / 480.0),
        1e-14,
    );
    for dim in [2u32, 4, 5, 7] {
        // independent assembly from the Lanczos gamma and Borwein zeta
        let d = f64::from(dim);
        let assembled = match (
            specfun::gamma_fn((d + 1.0) / 2.0),
            specfun::zeta_fn(d + 1.0),
        ) {
            (Ok(g), Ok(z)) => -d * g.value * z.value / (2.0 * pi.sqrt()).powi(dim as i32 + 1),
            _ => {
                r.fail(format!("gamma/zeta assembly failed at D={dim}"));
                continue;
            }
        };
        let direct = series::force_massless(dim).unwrap().f;
        r.check(
            format!("force_massless({dim}) vs gamma_fn/zeta_fn assembly"),
            rel(direct, assembled),
            1e-13,
        );
    }
    r.into_outcome(1, "massless closed forms")
}

fn criterion_2_massless_limit(cfg: &VerifyConfig) -> CriterionOutcome {
    let mut r = Recorder::new();
    let dims: &[u32] = if cfg.quick { &[1, 3] } else { &[1, 2, 3, 4, 5] };
    for &dim in dims {
        let massless = series::force_massless(dim).unwrap().f;
        match series_general(cfg, dim, 1e-4, 1e-12) {
            Ok(f) => r.check(
                format!("series(D={dim}, mu=1e-4) vs massless"),
                rel(f, massless),
                1e-3,
            ),
            Err(e) => r.fail(format!("series(D={dim}, mu=1e-4) failed: {e}")),
        }
    }
    r.into_outcome(2, "massless-limit convergence")
}

fn criterion_3_cross_formula(cfg: &VerifyConfig) -> CriterionOutcome {
    let mut r = Recorder::new();
    let mus: &[f64] = if cfg.quick {
        &[0.5, 2.0]
    } else {
        &[0.1, 0.5, 1.0, 2.0, 5.0, 10.0]
    };
    for &mu in mus {
        let f1 = series::force_series_1d(mu, 1e-13).unwrap().f;
        match series_general(cfg, 1, mu, 1e-13) {
            Ok(g1) => r.check(
                format!("general(D=1) vs force_series_1d at mu={mu}"),
                rel(g1, f1),
                1e-12,
            ),
            Err(e) => r.fail(format!("general(D=1, mu={mu}) failed: {e}")),
        }
        let f3 = series::force_series_3d(mu, 1e-13).unwrap().f;
        match series_general(cfg, 3, mu, 1e-13) {
            Ok(g3) => r.check(
                format!("general(D=3) vs force_series_3d at mu={mu}"),
                rel(g3, f3),
                1e-12,
            ),
            Err(e) => r.fail(format!("general(D=3, mu={mu}) failed: {e}")),
        }
    }
    r.into_outcome(3, "cross-formula identity")
}

fn criterion_4_series_vs_quadrature(cfg: &VerifyConfig) -> CriterionOutcome {
    let mut r = Recorder::new();
    let (dims, mus): (&[u32], &[f64]) = if cfg.quick {
        (&[3], &[1.0])
    } else {
        (&[2, 3, 5], &[0.5, 1.0, 2.0, 5.0])
    };
    for &dim in dims {
        for &mu in mus {
            let s = match series_general(cfg, dim, mu, 1e-12) {
                Ok(f) => f,
                Err(e) => {
                    r.fail(format!("series(D={dim}, mu={mu}) failed: {e}"));
                    continue;
                }
            };
            match quadrature::force_quadrature_general(dim, mu, 1e-9) {
                Ok(q) => r.check(
                    format!("series vs quadrature at D={dim}, mu={mu}"),
                    rel(q.value, s),
                    1e-8,
                ),
                Err(e) => r.fail(format!("quadrature(D={dim}, mu={mu}) failed: {e}")),
            }
        }
    }
    let mus_1d: &[f64] = if cfg.quick { &[1.0] } else { &[0.5, 1.0, 2.0] };
    for &mu in mus_1d {
        let s = series::force_series_1d(mu, 1e-12).unwrap().f;
        match quadrature::force_quadrature_1d(mu, 1e-9) {
            Ok(q) => r.check(
                format!("1d series vs quadrature at mu={mu}"),
                rel(q.value, s),
                1e-8,
            ),
            Err(e) => r.fail(format!("1d quadrature(mu={mu}) failed: {e}")),
        }
    }
    r.into_outcome(4, "series vs quadrature")
}

fn criterion_5_fdt_route(cfg: &VerifyConfig) -> CriterionOutcome {
    let mut r = Recorder::new();
    let mus: &[f64] = if cfg.quick { &[1.0] } else { &[0.5, 1.0, 2.0] };
    for &mu in mus {
        let s = series::force_series_1d(mu, 1e-12).unwrap().f;
        match green::force_fdt_1d(mu, 1e-7) {
            Ok(f) => r.check(format!("fdt vs series at mu={mu}"), rel(f.value, s), 1e-6),
            Err(e) => r.fail(format!("force_fdt_1d(mu={mu}) failed: {e}")),
        }
    }
    r.into_outcome(5, "fluctuation-spectrum route")
}

fn criterion_6_mode_sum(cfg: &VerifyConfig) -> CriterionOutcome {
    let mut r = Recorder::new();
    let mus: &[f64] = if cfg.quick { &[1.0] } else { &[0.5, 1.0, 2.0] };
    for &mu in mus {
        let s = series::force_series_1d(mu, 1e-12).unwrap().f;
        match quadrature::force_mode_sum(mu) {
            Ok(m) => r.check(
                format!("mode sum vs series at mu={mu}"),
                rel(m.value, s),
                1e-3,
            ),
            Err(e) => r.fail(format!("force_mode_sum(mu={mu}) failed: {e}")),
        }
    }
    r.into_outcome(6, "regulated mode-sum route")
}

struct SplitMix(u64);
impl SplitMix {
    fn next_f64(&mut self) -> f64 {
        self.0 = self.0.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z = z ^ (z >> 31);
        (z >> 11) as f64 / (1u64 << 53) as f64
    }
}

fn criterion_7_green_structure(cfg: &VerifyConfig) -> CriterionOutcome {
    let mut r = Recorder::new();
    let samples = if cfg.quick { 20 } else { 100 };
    let (a, d) = (1.0, 0.7);
    let mut rng = SplitMix(0x5eed);

    let mut worst_dirichlet = 0.0f64;
    let mut worst_reciprocity = 0.0f64;
    let mut worst_jump = 0.0f64;
    for _ in 0..samples {
        let p = 0.2 + 6.0 * rng.next_f64();
        // Dirichlet on each interface, both regions
        let xp_ext = a / 2.0 + d + 3.0 * rng.next_f64();
        let g = green::green_exterior(a / 2.0 + d, xp_ext, p, a, d).unwrap();
        worst_dirichlet = worst_dirichlet.max(g.as_complex().norm() * p);
        let xp_cav = -a / 2.0 + a * rng.next_f64();
        let g = green::green_cavity(a / 2.0, xp_cav, p, a).unwrap();
        worst_dirichlet = worst_dirichlet.max(g.as_complex().norm() * p);
        let g = green::green_cavity(-a / 2.0, xp_cav, p, a).unwrap();
        worst_dirichlet = worst_dirichlet.max(g.as_complex().norm() * p);

        // reciprocity
        let (x1, x2) = (
            a / 2.0 + d + 2.0 * rng.next_f64(),
            a / 2.0 + d + 2.0 * rng.next_f64(),
        );
        let g12 = green::green_exterior(x1, x2, p, a, d).unwrap().as_complex();
        let g21 = green::green_exterior(x2, x1, p, a, d).unwrap().as_complex();
        worst_reciprocity = worst_reciprocity.max((g12 - g21).norm() / g12.norm().max(1e-30));
        let (y1, y2) = (-a / 2.0 + a * rng.next_f64(), -a / 2.0 + a * rng.next_f64());
        let g12 = green::green_cavity(y1, y2, p, a).unwrap().as_complex();
        let g21 = green::green_cavity(y2, y1, p, a).unwrap().as_complex();
        worst_reciprocity = worst_reciprocity.max((g12 - g21).norm() / g12.norm().max(1e-30));
    }
    // jump condition on a smaller deterministic grid (5 evaluations each)
    let h = 1e-4;
    for &(xp, p) in &[(1.9, 1.3), (2.4, 0.7), (0.13, 2.1), (-0.31, 3.3)] {
        let jump = if xp > a / 2.0 {
            let g = |x: f64, s: f64| green::green_exterior(x, s, p, a, d).unwrap().as_complex();
            let dplus = (-3.0 * g(xp, xp) + 4.0 * g(xp + h, xp) - g(xp + 2.0 * h, xp)) / (2.0 * h);
            let dminus = (3.0 * g(xp, xp) - 4.0 * g(xp - h, xp) + g(xp - 2.0 * h, xp)) / (2.0 * h);
            dplus - dminus
        } else {
            let g = |x: f64, s: f64| green::green_cavity(x, s, p, a).unwrap().as_complex();
            let dplus = (-3.0 * g(xp, xp) + 4.0 * g(xp + h, xp) - g(xp + 2.0 * h, xp)) / (2.0 * h);
            let dminus = (3.0 * g(xp, xp) - 4.0 * g(xp - h, xp) + g(xp - 2.0 * h, xp)) / (2.0 * h);
            dplus - dminus
        };
        worst_jump = worst_jump.max((jump.re + 1.0).abs().max(jump.im.abs()));
    }

    r.check(
        format!("Dirichlet |G|*p over {samples} samples"),
        worst_dirichlet,
        1e-14,
    );
    r.check(
        format!("reciprocity over {samples} samples"),
        worst_reciprocity,
        1e-12,
    );
    r.check("source jump vs -1".into(), worst_jump, 1e-6);
    r.into_outcome(7, "Green-function structure")
}

fn criterion_8_special_functions(cfg: &VerifyConfig) -> CriterionOutcome {
    let mut r = Recorder::new();
    let nus: &[f64] = if cfg.quick {
        &[0.0, 1.0, 2.5]
    } else {
        &[0.0, 0.5, 1.0, 1.5, 2.0, 3.0, 5.0, 10.0]
    };
    let xs: &[f64] = if cfg.quick {
        &[0.01, 1.0, 20.0]
    } else {
        &[
            1e-3, 0.01, 0.1, 0.5, 1.0, 2.0, 4.0, 8.0, 16.0, 30.0, 45.0, 60.0,
        ]
    };
    let mut worst_oracle = 0.0f64;
    for &nu in nus {
        for &x in xs {
            let fast = specfun::bessel_k(nu, x).unwrap().value;
            match specfun::bessel_k_oracle(nu, x) {
                Ok(slow) => worst_oracle = worst_oracle.max(rel(fast, slow)),
                Err(e) => r.fail(format!("oracle failed at nu={nu}, x={x}: {e}")),
            }
        }
    }
    r.check("bessel_k vs integral oracle".into(), worst_oracle, 1e-12);

    let mut worst_recurrence = 0.0f64;
    for &nu in &[1.0, 1.5, 2.0, 2.5, 3.0] {
        let mut x = 1e-3;
        while x <= 50.0 {
            let low = specfun::bessel_k(nu - 1.0, x).unwrap().value;
            let mid = specfun::bessel_k(nu, x).unwrap().value;
            let high = specfun::bessel_k(nu + 1.0, x).unwrap().value;
            worst_recurrence =
                worst_recurrence.max(((low + 2.0 * nu / x * mid) - high).abs() / high);
            x *= 2.2;
        }
    }
    r.check(
        "three-term recurrence residual".into(),
        worst_recurrence,
        1e-11,
    );

    let mut worst_half = 0.0f64;
    for &x in &[0.05, 0.4, 1.0, 3.0, 11.0, 40.0] {
        let base = (std::f64::consts::PI / (2.0 * x)).sqrt() * (-x).exp();
        worst_half = worst_half.max(rel(specfun::bessel_k(0.5, x).unwrap().value, base));
        worst_half = worst_half.max(rel(
            specfun::bessel_k(1.5, x).unwrap().value,
            base * (1.0 + 1.0 / x),
        ));
        worst_half = worst_half.max(rel(
            specfun::bessel_k(2.5, x).unwrap().value,
            base * (1.0 + 3.0 / x + 3.0 / (x * x)),
        ));
    }
    r.check("half-integer closed forms".into(), worst_half, 1e-13);
    r.into_outcome(8, "special functions")
}

fn criterion_9_physical_units(_cfg: &VerifyConfig) -> CriterionOutcome {
    let mut r = Recorder::new();
    let input = units::PhysicalInput {
        separation: 1e-6,
        mass: 0.0,
        mass_unit: units::MassUnit::Kilogram,
        dim: 3,
        unit_system: units::UnitSystem::Si,
    };
    let f = series::force_massless(3).unwrap();
    let p = units::to_physical(&f, &input).unwrap();
    r.check(
        "pressure(D=3, m=0, a=1um) vs -6.50e-4 N/m^2".into(),
        rel(p.pressure, -6.50e-4),
        5e-3,
    );
    r.into_outcome(9, "physical-units spot check")
}

fn criterion_10_mass_screening(cfg: &VerifyConfig) -> CriterionOutcome {
    let mut r = Recorder::new();
    for &dim in &[1u32, 3] {
        let grid = [0.0, 0.5, 1.0, 2.0, 5.0, 10.0];
        let mut values = Vec::new();
        let mut ok = true;
        for &mu in &grid {
            match series_general(cfg, dim, mu, 1e-12) {
                Ok(f) => values.push(f.abs()),
                Err(e) => {
                    r.fail(format!("series(D={dim}, mu={mu}) failed: {e}"));
                    ok = false;
                    break;
                }
            }
        }
        if !ok {
            continue;
        }
        let monotone = values.windows(2).all(|w| w[1] < w[0]);
        r.check(
            format!("|f| strictly decreasing on mu grid, D={dim}"),
            if monotone { 0.0 } else { 1.0 },
            0.5,
        );
        r.check(
            format!("|f(10)|/|f(0)| at D={dim}"),
            values[5] / values[0],
            1e-6,
        );
    }
    r.into_outcome(10, "mass screening")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quick_grid_all_pass() {
        let outcomes = run_all(&VerifyConfig {
            quick: true,
            perturb_series: None,
        });
        assert_eq!(outcomes.len(), 10);
        for o in &outcomes {
            assert!(
                o.passed,
                "criterion {} ({}) failed: {:?}",
                o.id, o.name, o.lines
            );
        }
    }

    #[test]
    fn fault_injection_trips_criterion_3() {
        let outcomes = run_all(&VerifyConfig {
            quick: true,
            perturb_series: Some(1.0 + 1e-6),
        });
        let c3 = outcomes.iter().find(|o| o.id == 3).unwrap();
        assert!(!c3.passed, "perturbed series must fail the identity check");
    }
}
