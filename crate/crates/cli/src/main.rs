//! `casimir` — Casimir pressure of a massive scalar field between two
//! parallel Dirichlet plates, from the command line.
//!
//! Exit codes: 0 success, 1 verification failure, 2 invalid flags,
//! 3 numerical non-convergence.

mod output;
mod run;
mod units_parse;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "casimir",
    version,
    about = "Casimir pressure of a massive scalar field between parallel plates",
    after_help = "Any invocation may carry --args-file <path>; the file holds one flag \
(with its value) per line and is spliced into the command line in place."
)]
pub struct Cli {
    #[command(subcommand)]
    pub cmd: Cmd,
}

#[derive(Subcommand)]
pub enum Cmd {
    /// Evaluate the force at a single point, one output row per method
    Force(ForceArgs),
    /// Sweep mu, separation or mass over a grid and stream rows
    Sweep(SweepArgs),
    /// Run the cross-method verification grid and report pass/fail
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    /// Bessel-series engine (massless closed form below the crossover)
    Series,
    /// Oscillatory/radial integral route differentiated in the reflection index
    Quadrature,
    /// Abel-regulated raw mode sum, Richardson-extrapolated (dim 1 only)
    Modesum,
    /// Green-function fluctuation route (dim 1 only)
    Green,
    /// Massless closed form (requires mu = 0)
    Massless,
}

impl Method {
    pub fn label(self) -> &'static str {
        match self {
            Method::Series => "series",
            Method::Quadrature => "quadrature",
            Method::Modesum => "modesum",
            Method::Green => "green",
            Method::Massless => "massless",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Units {
    Natural,
    Si,
}

#[derive(Args)]
pub struct ForceArgs {
    /// Spatial dimension D
    #[arg(long)]
    pub dim: u32,
    /// Reduced mass mu = m c a / hbar (exclusive with --separation/--mass)
    #[arg(long)]
    pub mu: Option<f64>,
    /// Plate separation with unit suffix (m, cm, mm, um, nm, pm), e.g. 1um
    #[arg(long)]
    pub separation: Option<String>,
    /// Mass with unit suffix (kg, eV, keV, MeV, GeV), e.g. 9.1e-31kg
    #[arg(long)]
    pub mass: Option<String>,
    /// Comma-separated method list
    #[arg(long, value_enum, value_delimiter = ',', default_value = "series")]
    pub method: Vec<Method>,
    /// Relative tolerance for the series engine (other methods have
    /// documented accuracy floors)
    #[arg(long, default_value_t = 1e-12)]
    pub tol: f64,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
    #[arg(long, value_enum, default_value = "natural")]
    pub units: Units,
    /// Series term budget
    #[arg(long, default_value_t = 1_000_000)]
    pub terms: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Axis {
    Mu,
    Separation,
    Mass,
}

#[derive(Args)]
pub struct SweepArgs {
    /// Quantity to sweep
    #[arg(long, value_enum)]
    pub axis: Axis,
    /// Axis start (mu: pure number; separation: meters; mass: kilograms)
    #[arg(long)]
    pub start: f64,
    /// Axis stop (inclusive)
    #[arg(long)]
    pub stop: f64,
    /// Number of grid points (>= 2)
    #[arg(long)]
    pub steps: usize,
    /// Logarithmic spacing (start must be > 0)
    #[arg(long, default_value_t = false)]
    pub log: bool,
    #[arg(long)]
    pub dim: u32,
    /// Comma-separated method list
    #[arg(long, value_enum, value_delimiter = ',', default_value = "series")]
    pub methods: Vec<Method>,
    /// Fixed separation (with unit) for --axis mass
    #[arg(long)]
    pub separation: Option<String>,
    /// Fixed mass (with unit) for --axis separation
    #[arg(long)]
    pub mass: Option<String>,
    #[arg(long, default_value_t = 1e-12)]
    pub tol: f64,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
}

#[derive(Args)]
pub struct VerifyArgs {
    /// Reduced grid, completes in seconds
    #[arg(long, default_value_t = false)]
    pub quick: bool,
    /// Fault injection for self-tests: multiply one series term by this
    /// factor so the cross-method checks must fail
    #[arg(long, hide = true)]
    pub inject_series_perturbation: Option<f64>,
}

fn main() {
    let args = match expand_args_file(std::env::args().collect()) {
        Ok(a) => a,
        Err(msg) => {
            eprintln!("error: {msg}");
            std::process::exit(2);
        }
    };
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            // clap prints help/version on stdout with status 0 and genuine
            // argument errors with status 2
            e.exit();
        }
    };
    let code = match cli.cmd {
        Cmd::Force(a) => run::cmd_force(&a),
        Cmd::Sweep(a) => run::cmd_sweep(&a),
        Cmd::Verify(a) => run::cmd_verify(&a),
    };
    std::process::exit(code);
}

/// Splice `--args-file <path>` (one flag per line, `#` comments allowed)
/// into the argument vector.
fn expand_args_file(args: Vec<String>) -> Result<Vec<String>, String> {
    let Some(pos) = args.iter().position(|a| a == "--args-file") else {
        return Ok(args);
    };
    let path = args
        .get(pos + 1)
        .ok_or_else(|| "--args-file requires a path".to_string())?;
    let text =
        std::fs::read_to_string(path).map_err(|e| format!("cannot read args file {path}: {e}"))?;
    let mut expanded = args[..pos].to_vec();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        expanded.extend(line.split_whitespace().map(str::to_string));
    }
    expanded.extend_from_slice(&args[pos + 2..]);
    if expanded.iter().any(|a| a == "--args-file") {
        return Err("--args-file may not nest".into());
    }
    Ok(expanded)
}
