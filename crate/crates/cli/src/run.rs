//! Command implementations.

use crate::output::{emit, OutputRow};
use crate::units_parse::{parse_mass, parse_separation};
use crate::{Axis, ForceArgs, Method, SweepArgs, Units, VerifyArgs};
use casimir_core::{quadrature, series, units, verify};
use rayon::prelude::*;
use std::time::Instant;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NUMERICS: i32 = 3;

/// Accuracy floors of the cross-check routes; requesting less is fine,
/// requesting more is not honest about what the route can certify.
const QUADRATURE_TOL_FLOOR: f64 = 1e-8;
const GREEN_TOL_FLOOR: f64 = 1e-6;

fn usage_error(msg: &str) -> i32 {
    eprintln!("error: {msg}");
    EXIT_USAGE
}

fn numerics_error(msg: &str) -> i32 {
    eprintln!("error: {msg}");
    EXIT_NUMERICS
}

/// Physical context of an evaluation point: reduced mass plus, when the
/// caller supplied dimensionful inputs, the separation for SI output.
#[derive(Clone, Copy)]
struct Point {
    mu: f64,
    separation_m: Option<f64>,
}

fn validate_methods(methods: &[Method], dim: u32, mu: f64) -> Result<(), String> {
    if methods.is_empty() {
        return Err("at least one method is required".into());
    }
    for &m in methods {
        match m {
            Method::Green | Method::Modesum if dim != 1 => {
                return Err(format!(
                    "method '{}' is only defined for --dim 1",
                    m.label()
                ));
            }
            Method::Green if mu <= 0.0 => {
                return Err("method 'green' needs mu > 0".into());
            }
            Method::Quadrature => {
                if !(1..=10).contains(&dim) {
                    return Err("method 'quadrature' supports dim in [1, 10]".into());
                }
                if mu <= 0.0 {
                    return Err("method 'quadrature' needs mu > 0".into());
                }
            }
            Method::Massless if mu != 0.0 => {
                return Err("method 'massless' requires mu = 0".into());
            }
            Method::Series | Method::Massless | Method::Green | Method::Modesum => {}
        }
    }
    Ok(())
}

/// Evaluate one (point, method) pair into an output row.
fn evaluate(
    dim: u32,
    point: Point,
    method: Method,
    tol: f64,
    budget: usize,
    units_mode: Units,
) -> Result<OutputRow, String> {
    let mu = point.mu;
    let t0 = Instant::now();
    let (f, err, terms, label) = match method {
        Method::Massless => {
            let fv = series::force_massless(dim).map_err(|e| e.to_string())?;
            (
                fv.f,
                fv.diagnostics.tail_bound,
                fv.diagnostics.terms_used,
                "massless",
            )
        }
        Method::Series => {
            let fv = match dim {
                1 => series::force_series_1d_with_budget(mu, tol, budget),
                3 => series::force_series_3d_with_budget(mu, tol, budget),
                _ => series::force_series_general_with_budget(dim, mu, tol, budget),
            }
            .map_err(|e| e.to_string())?;
            let label = if fv.diagnostics.crossover_used {
                "massless"
            } else {
                "series"
            };
            (
                fv.f,
                fv.diagnostics.tail_bound,
                fv.diagnostics.terms_used,
                label,
            )
        }
        Method::Quadrature => {
            let tol_q = tol.max(QUADRATURE_TOL_FLOOR);
            let r = if dim == 1 {
                quadrature::force_quadrature_1d(mu, tol_q)
            } else {
                quadrature::force_quadrature_general(dim, mu, tol_q)
            }
            .map_err(|e| e.to_string())?;
            if !r.converged {
                return Err(format!(
                    "quadrature route did not converge (error estimate {:.3e})",
                    r.abs_error_estimate
                ));
            }
            (r.value, r.abs_error_estimate, r.nodes_used, "quadrature")
        }
        Method::Green => {
            let r = quadrature_like(casimir_core::force_fdt_1d(mu, tol.max(GREEN_TOL_FLOOR)))?;
            (r.0, r.1, r.2, "green")
        }
        Method::Modesum => {
            let r = quadrature_like(quadrature::force_mode_sum(mu))?;
            (r.0, r.1, r.2, "modesum")
        }
    };
    let ms = t0.elapsed().as_millis();

    let pressure_si = match (units_mode, point.separation_m) {
        (Units::Si, Some(a)) => {
            let input = units::PhysicalInput {
                separation: a,
                mass: 0.0,
                mass_unit: units::MassUnit::Kilogram,
                dim,
                unit_system: units::UnitSystem::Si,
            };
            let fv = series::ForceValue {
                f,
                diagnostics: series::SeriesDiagnostics {
                    terms_used: terms,
                    tail_bound: err,
                    crossover_used: false,
                },
            };
            Some(
                units::to_physical(&fv, &input)
                    .map_err(|e| e.to_string())?
                    .pressure,
            )
        }
        _ => None,
    };

    Ok(OutputRow {
        dim,
        mu,
        xi: 2.0 * mu,
        method: label,
        f,
        pressure_si,
        err,
        terms,
        ms,
    })
}

fn quadrature_like(
    r: Result<quadrature::QuadratureResult, quadrature::QuadratureError>,
) -> Result<(f64, f64, usize), String> {
    let r = r.map_err(|e| e.to_string())?;
    if !r.converged {
        return Err(format!(
            "route did not converge (error estimate {:.3e})",
            r.abs_error_estimate
        ));
    }
    Ok((r.value, r.abs_error_estimate, r.nodes_used))
}

pub fn cmd_force(args: &ForceArgs) -> i32 {
    if args.dim < 1 || args.dim > 20 {
        return usage_error("--dim must lie in [1, 20]");
    }
    if args.tol.is_nan() || args.tol <= 0.0 {
        return usage_error("--tol must be positive");
    }

    let point = match (&args.mu, &args.separation, &args.mass) {
        (Some(mu), None, None) => {
            if *mu < 0.0 || !mu.is_finite() {
                return usage_error("--mu must be finite and non-negative");
            }
            Point {
                mu: *mu,
                separation_m: None,
            }
        }
        (None, Some(sep), Some(mass)) => {
            let a = match parse_separation(sep) {
                Ok(a) => a,
                Err(e) => return usage_error(&e),
            };
            let m = match parse_mass(mass) {
                Ok(m) => m,
                Err(e) => return usage_error(&e),
            };
            let input = units::PhysicalInput {
                separation: a,
                mass: m,
                mass_unit: units::MassUnit::Kilogram,
                dim: args.dim,
                unit_system: units::UnitSystem::Si,
            };
            match units::reduce(&input) {
                Ok(p) => Point {
                    mu: p.mu,
                    separation_m: Some(a),
                },
                Err(e) => return usage_error(&e.to_string()),
            }
        }
        _ => return usage_error("provide exactly one of --mu or the pair --separation/--mass"),
    };

    if let Err(e) = validate_methods(&args.method, args.dim, point.mu) {
        return usage_error(&e);
    }

    let mut rows = Vec::with_capacity(args.method.len());
    for &m in &args.method {
        match evaluate(args.dim, point, m, args.tol, args.terms, args.units) {
            Ok(row) => rows.push(row),
            Err(e) => return numerics_error(&format!("method '{}': {e}", m.label())),
        }
    }
    emit(&rows, args.format);
    EXIT_OK
}

pub fn cmd_sweep(args: &SweepArgs) -> i32 {
    if args.dim < 1 || args.dim > 20 {
        return usage_error("--dim must lie in [1, 20]");
    }
    if args.steps < 2 {
        return usage_error("--steps must be at least 2");
    }
    if args.start.is_nan() || args.stop.is_nan() || args.start >= args.stop {
        return usage_error("--start must be strictly below --stop");
    }
    if args.log && args.start <= 0.0 {
        return usage_error("logarithmic spacing needs --start > 0");
    }
    if args.tol.is_nan() || args.tol <= 0.0 {
        return usage_error("--tol must be positive");
    }

    // resolve the fixed companion quantity per axis
    let fixed_mass_kg = match args.axis {
        Axis::Separation => match &args.mass {
            Some(m) => match parse_mass(m) {
                Ok(kg) => Some(kg),
                Err(e) => return usage_error(&e),
            },
            None => return usage_error("--axis separation needs a fixed --mass"),
        },
        _ => None,
    };
    let fixed_sep_m = match args.axis {
        Axis::Mass => match &args.separation {
            Some(s) => match parse_separation(s) {
                Ok(a) => Some(a),
                Err(e) => return usage_error(&e),
            },
            None => return usage_error("--axis mass needs a fixed --separation"),
        },
        _ => None,
    };

    let grid: Vec<f64> = (0..args.steps)
        .map(|i| {
            let t = i as f64 / (args.steps - 1) as f64;
            if args.log {
                (args.start.ln() + t * (args.stop.ln() - args.start.ln())).exp()
            } else {
                args.start + t * (args.stop - args.start)
            }
        })
        .collect();

    // points and their SI context
    let mut points = Vec::with_capacity(grid.len());
    for &g in &grid {
        let (mu, separation_m) = match args.axis {
            Axis::Mu => (g, None),
            Axis::Separation => {
                let m = fixed_mass_kg.expect("validated above");
                (m * units::C * g / units::HBAR, Some(g))
            }
            Axis::Mass => {
                let a = fixed_sep_m.expect("validated above");
                (g * units::C * a / units::HBAR, Some(a))
            }
        };
        if mu < 0.0 || !mu.is_finite() {
            return usage_error(&format!("axis value {g} gives invalid mu = {mu}"));
        }
        points.push(Point { mu, separation_m });
    }

    for p in &points {
        if let Err(e) = validate_methods(&args.methods, args.dim, p.mu) {
            return usage_error(&e);
        }
    }
    let units_mode = match args.axis {
        Axis::Mu => Units::Natural,
        _ => Units::Si,
    };

    // evaluate in parallel, buffer, emit in axis order
    let results: Vec<(usize, Result<Vec<OutputRow>, String>)> = points
        .par_iter()
        .enumerate()
        .map(|(i, p)| {
            let mut rows = Vec::with_capacity(args.methods.len());
            for &m in &args.methods {
                match evaluate(
                    args.dim,
                    *p,
                    m,
                    args.tol,
                    series::DEFAULT_TERM_BUDGET,
                    units_mode,
                ) {
                    Ok(r) => rows.push(r),
                    Err(e) => return (i, Err(format!("point {i} method '{}': {e}", m.label()))),
                }
            }
            (i, Ok(rows))
        })
        .collect();

    let mut ordered: Vec<Option<Vec<OutputRow>>> = vec![None; points.len()];
    for (i, r) in results {
        match r {
            Ok(rows) => ordered[i] = Some(rows),
            Err(e) => return numerics_error(&e),
        }
    }
    let rows: Vec<OutputRow> = ordered.into_iter().flatten().flatten().collect();
    emit(&rows, args.format);
    EXIT_OK
}

pub fn cmd_verify(args: &VerifyArgs) -> i32 {
    let cfg = verify::VerifyConfig {
        quick: args.quick,
        perturb_series: args.inject_series_perturbation,
    };
    let t0 = Instant::now();
    let outcomes = verify::run_all(&cfg);
    let mut passed = 0usize;
    for o in &outcomes {
        println!(
            "criterion {:2} [{}] {}",
            o.id,
            if o.passed { "PASS" } else { "FAIL" },
            o.name
        );
        for l in &o.lines {
            println!(
                "    {}  measured {:.3e} vs threshold {:.1e}  {}",
                if l.passed { "ok  " } else { "FAIL" },
                l.measured,
                l.threshold,
                l.label
            );
        }
        if o.passed {
            passed += 1;
        }
    }
    let all = passed == outcomes.len();
    println!(
        "RESULT: {} ({passed}/{} criteria, {:.1} s)",
        if all { "PASS" } else { "FAIL" },
        outcomes.len(),
        t0.elapsed().as_secs_f64()
    );
    if all {
        EXIT_OK
    } else {
        EXIT_VERIFY_FAIL
    }
}
