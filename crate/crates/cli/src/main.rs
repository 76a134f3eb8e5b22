#![allow(clippy::neg_cmp_op_on_partial_ord)] // negations route NaN to errors

//! `zeta-bounds`: evaluate the explicit conditional bounds, verify the
//! prime-sum and integral lemmas against brute force, solve crossover
//! thresholds and compare everything with empirical data.

mod commands;
mod output;

use clap::{Args, Parser, Subcommand};
use output::Format;
use std::path::PathBuf;
use zeta_bounds::{BoundKind, HiaryConstant};

#[derive(Parser)]
#[command(name = "zeta-bounds", version, about)]
pub(crate) struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "json")]
    pub(crate) format: Format,
    /// Worker threads for grid scans (default: hardware parallelism).
    #[arg(long, global = true)]
    pub(crate) jobs: Option<usize>,
    #[command(subcommand)]
    pub(crate) command: Command,
}

#[derive(Subcommand)]
pub(crate) enum Command {
    /// Evaluate the packaged bounds and comparators at one or more heights.
    Eval(EvalArgs),
    /// Run a verification suite; exit 0 only if every check passes.
    Verify {
        #[command(subcommand)]
        target: VerifyTarget,
    },
    /// Solve the crossover threshold for given parameters.
    Crossover(CrossoverArgs),
    /// Search (alpha, lambda) minimizing the crossover threshold.
    Optimize(OptimizeArgs),
    /// Compare empirical S, S1, |zeta| from a zero table against the bounds.
    Empirical(EmpiricalArgs),
}

#[derive(Clone, Copy, clap::ValueEnum)]
pub(crate) enum KindArg {
    S,
    S1,
    #[value(alias = "Z")]
    Zeta,
}

impl From<KindArg> for BoundKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::S => BoundKind::S,
            KindArg::S1 => BoundKind::S1,
            KindArg::Zeta => BoundKind::Zeta,
        }
    }
}

fn parse_hiary(s: &str) -> Result<HiaryConstant, String> {
    match s {
        "0.63" => Ok(HiaryConstant::C063),
        "0.77" => Ok(HiaryConstant::C077),
        other => Err(format!("hiary constant must be 0.63 or 0.77, got {other}")),
    }
}

/// Grid specification `MIN:MAX:POINTS:log|linear`.
#[derive(Debug, Clone, Copy)]
pub struct GridSpec {
    min: f64,
    max: f64,
    points: usize,
    log: bool,
}

impl GridSpec {
    fn values(&self) -> Vec<f64> {
        let n = self.points;
        if n == 1 {
            return vec![self.min];
        }
        (0..n)
            .map(|i| {
                let f = i as f64 / (n - 1) as f64;
                if self.log {
                    self.min * (self.max / self.min).powf(f)
                } else {
                    self.min + (self.max - self.min) * f
                }
            })
            .collect()
    }
}

fn parse_grid(s: &str) -> Result<GridSpec, String> {
    let parts: Vec<&str> = s.split(':').collect();
    if parts.len() != 4 {
        return Err("grid must be MIN:MAX:POINTS:log|linear".to_string());
    }
    let min: f64 = parts[0].parse().map_err(|e| format!("grid min: {e}"))?;
    let max: f64 = parts[1].parse().map_err(|e| format!("grid max: {e}"))?;
    let points: usize = parts[2].parse().map_err(|e| format!("grid points: {e}"))?;
    let log = match parts[3] {
        "log" => true,
        "linear" => false,
        other => return Err(format!("grid spacing must be log or linear, got {other}")),
    };
    if !(min < max) || points < 1 {
        return Err("grid requires min < max and points >= 1".to_string());
    }
    if log && !(min > 0.0) {
        return Err("log spacing requires min > 0".to_string());
    }
    Ok(GridSpec {
        min,
        max,
        points,
        log,
    })
}

#[derive(Args)]
pub(crate) struct EvalArgs {
    #[arg(long, value_enum, ignore_case = true)]
    pub(crate) kind: KindArg,
    /// Height as log10 t.
    #[arg(long, required_unless_present = "grid", conflicts_with = "grid")]
    pub(crate) t10: Option<f64>,
    /// Heights as a grid of log10 t values.
    #[arg(long, value_parser = parse_grid)]
    pub(crate) grid: Option<GridSpec>,
    /// Composition alpha (default: the reproduced optimum for the kind).
    #[arg(long)]
    pub(crate) alpha: Option<f64>,
    /// Composition lambda (default: the reproduced optimum for the kind).
    #[arg(long)]
    pub(crate) lambda: Option<f64>,
    #[arg(long, value_parser = parse_hiary, default_value = "0.63")]
    pub(crate) hiary: HiaryConstant,
}

#[derive(Subcommand)]
pub(crate) enum VerifyTarget {
    /// The six square-root-weighted prime-sum inequalities plus the theta
    /// deviation bound, by direct sieve summation.
    Lemma33 {
        /// Largest grid point.
        #[arg(long, default_value_t = 1e7)]
        max: f64,
        #[arg(long, default_value_t = 200)]
        points: usize,
        /// Sieve construction cap.
        #[arg(long, default_value_t = zeta_bounds::primes::DEFAULT_LIMIT_CAP)]
        sieve_limit: u64,
    },
    /// The 23.1 integral bound: quadrature up to --max, the closed-form
    /// majorant beyond desk scale.
    Lemma31 {
        #[arg(long, default_value_t = 1e12)]
        max: f64,
        #[arg(long, default_value_t = 100)]
        points: usize,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
    },
    /// The 132.6 analogue.
    Lemma32 {
        #[arg(long, default_value_t = 1e12)]
        max: f64,
        #[arg(long, default_value_t = 100)]
        points: usize,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
    },
    /// Auxiliary prime-sum constants (Mertens-type bounds, double sums).
    Aux {
        /// Truncation/evaluation point.
        #[arg(long, default_value_t = 1e6)]
        max: f64,
        #[arg(long, default_value_t = zeta_bounds::primes::DEFAULT_LIMIT_CAP)]
        sieve_limit: u64,
    },
    /// Principal value of the log|zeta| integral.
    Pv {
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
    },
    /// Global constants: threshold values and sub-threshold comparator scans.
    Constants {
        #[arg(long, default_value_t = 10_000)]
        points: usize,
        #[arg(long, value_parser = parse_hiary, default_value = "0.63")]
        hiary: HiaryConstant,
    },
}

#[derive(Args)]
pub(crate) struct CrossoverArgs {
    #[arg(long, value_enum, ignore_case = true)]
    pub(crate) kind: KindArg,
    #[arg(long)]
    pub(crate) alpha: Option<f64>,
    #[arg(long)]
    pub(crate) lambda: Option<f64>,
    #[arg(long, value_parser = parse_hiary, default_value = "0.63")]
    pub(crate) hiary: HiaryConstant,
}

#[derive(Args)]
pub(crate) struct OptimizeArgs {
    #[arg(long, value_enum, ignore_case = true)]
    pub(crate) kind: KindArg,
    #[arg(long, value_parser = parse_hiary, default_value = "0.63")]
    pub(crate) hiary: HiaryConstant,
}

#[derive(Args)]
pub(crate) struct EmpiricalArgs {
    /// Zero-ordinate table (plain text or gzip); defaults to
    /// $ZETA_BOUNDS_ZEROS.
    #[arg(long)]
    pub(crate) zeros: Option<PathBuf>,
    /// Height grid in t (not log10 t).
    #[arg(long, value_parser = parse_grid, default_value = "10:1000:100:log")]
    pub(crate) grid: GridSpec,
    #[arg(long, value_parser = parse_hiary, default_value = "0.63")]
    pub(crate) hiary: HiaryConstant,
}

fn main() {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        // Deterministic output does not depend on the pool size; this only
        // caps the fork-join width.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs.max(1))
            .build_global();
    }
    match commands::run(cli) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            // Domain/usage failures: name the violated precondition.
            eprintln!("error: {e:#}");
            std::process::exit(2);
        }
    }
}
