use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;

use loghankel::search::{DEFAULT_COARSE, DEFAULT_REFINE_ROUNDS};

use crate::complex::parse_complex;

#[derive(Debug, Parser)]
#[command(
    name = "loghankel",
    version,
    about = "Sharp bounds for H2,1 of logarithmic coefficients"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    pub format: Format,

    /// Write output to this file instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Grid-search max |H2,1| and compare it with the sharp bound.
    Verify {
        #[command(flatten)]
        family: FamilyArgs,
        #[command(flatten)]
        grid: GridArgs,
        /// Largest accepted gap (bound minus achieved maximum).
        #[arg(long, default_value_t = 5e-4, value_parser = parse_tol)]
        tol: f64,
    },
    /// Run `verify` along a list of parameter values.
    Sweep {
        #[arg(long, value_enum)]
        family: FamilyName,
        /// Values of the swept parameter (alpha, nu or lambda).
        #[arg(
            long,
            value_delimiter = ',',
            required = true,
            allow_hyphen_values = true
        )]
        values: Vec<f64>,
        /// Fixed beta for spirallike sweeps.
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        beta: f64,
        #[command(flatten)]
        grid: GridArgs,
        #[arg(long, default_value_t = 5e-4, value_parser = parse_tol)]
        tol: f64,
    },
    /// Certify the Y(A,B,C) closed form against the polar-grid oracle.
    YmaxCertify {
        /// Number of random draws from [-5,5]^3.
        #[arg(long, default_value_t = 10_000)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1e-6, value_parser = parse_tol)]
        tol: f64,
        /// Extra triple "A,B,C" checked before the random draws; repeatable.
        #[arg(long, value_parser = parse_triple, allow_hyphen_values = true)]
        inject: Vec<[f64; 3]>,
    },
    /// Extremal coefficients and the equality residual.
    Extremal {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, default_value_t = 1e-10, value_parser = parse_tol)]
        tol: f64,
    },
    /// Logarithmic coefficients and H2,1 by both evaluation paths.
    Gamma {
        #[command(flatten)]
        source: GammaSource,
        /// Largest accepted disagreement of the two paths, relative to max(1, |H2,1|).
        #[arg(long, default_value_t = 1e-12, value_parser = parse_tol)]
        tol: f64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Table,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyName {
    Spirallike,
    Ozaki,
    Robertson,
}

#[derive(Debug, Args)]
pub struct FamilyArgs {
    #[arg(long, value_enum)]
    pub family: FamilyName,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub alpha: f64,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub beta: f64,
    #[arg(long, allow_hyphen_values = true)]
    pub nu: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: Option<f64>,
}

#[derive(Debug, Args)]
pub struct GridArgs {
    #[arg(long, default_value_t = DEFAULT_COARSE)]
    pub coarse: usize,
    #[arg(long, default_value_t = DEFAULT_REFINE_ROUNDS)]
    pub refine_rounds: usize,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = true)]
pub struct GammaSource {
    /// Use the Koebe function z/(1-z)^2.
    #[arg(long, conflicts_with_all = ["a2", "a3", "a4", "family"])]
    pub koebe: bool,
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true, requires_all = ["a3", "a4"])]
    pub a2: Option<Complex64>,
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true, requires_all = ["a2", "a4"])]
    pub a3: Option<Complex64>,
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true, requires_all = ["a2", "a3"])]
    pub a4: Option<Complex64>,
    /// Use the extremal function of this family.
    #[arg(long, value_enum, conflicts_with_all = ["a2", "a3", "a4"])]
    pub family: Option<FamilyName>,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub alpha: f64,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub beta: f64,
    #[arg(long, allow_hyphen_values = true)]
    pub nu: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: Option<f64>,
}

fn parse_triple(s: &str) -> Result<[f64; 3], String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let [a, b, c] = parts.as_slice() else {
        return Err(format!("expected A,B,C, got {s:?}"));
    };
    let num = |t: &str| t.parse::<f64>().map_err(|e| format!("{t:?}: {e}"));
    Ok([num(a)?, num(b)?, num(c)?])
}

fn parse_tol(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(t) if t.is_finite() && t >= 0.0 => Ok(t),
        _ => Err(format!("tolerance must be a finite number >= 0, got {s:?}")),
    }
}
