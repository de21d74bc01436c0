//! `jones-one`: double-twist queries, knot-table scans and BKW experiments.

mod bkw_cmd;
mod config;
mod csv_out;
mod dtwist_cmd;
mod scan;
mod svg;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_complex::Complex64;
use thiserror::Error;

use crate::config::Config;

#[derive(Debug, Error)]
pub enum CliError {
    /// Bad arguments or configuration; exit code 2.
    #[error("{0}")]
    Usage(String),
    /// The command ran but something it checks or computes failed; exit code 1.
    #[error("{0}")]
    Failure(String),
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "jones-one", version, about = "Solutions of J(t) = 1 for knots")]
struct Cli {
    /// File of `key = value` lines supplying defaults for any flag.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Queries on the double-twist knot K_n.
    Dtwist {
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(value_enum)]
        action: dtwist_cmd::Action,
        #[command(flatten)]
        classify: ClassifyArgs,
    },
    /// Roots of J(t) - 1 for every knot of a table, as CSV and SVG.
    Scan(ScanArgs),
    /// Equimodular curves and zero accumulation.
    Bkw {
        #[command(subcommand)]
        action: BkwAction,
    },
}

#[derive(Args, Debug, Default)]
struct ClassifyArgs {
    /// Tolerance on ||z| - 1| for unit-circle membership.
    #[arg(long)]
    tol_circle: Option<f64>,
    /// Largest root-of-unity order tried.
    #[arg(long)]
    dmax: Option<u64>,
}

#[derive(Args, Debug)]
struct ScanArgs {
    /// Knot table (JSON Lines); the bundled table when absent.
    #[arg(long)]
    input: Option<PathBuf>,
    #[arg(long)]
    max_crossings: Option<usize>,
    /// CSV destination; stdout when absent.
    #[arg(long)]
    out_csv: Option<PathBuf>,
    #[arg(long)]
    out_svg: Option<PathBuf>,
    #[arg(long)]
    workers: Option<usize>,
    #[command(flatten)]
    classify: ClassifyArgs,
}

#[derive(Subcommand, Debug)]
enum BkwAction {
    /// Nearest point of an equimodular curve to t0.
    Equimodular {
        #[arg(long, allow_hyphen_values = true)]
        t0: Option<Complex64>,
        #[arg(long)]
        eps: Option<f64>,
        #[arg(long)]
        s_max: Option<u32>,
    },
    /// Nearest zeros of F_n to a dominant equimodular point.
    Accumulate {
        /// `twist_ring:s` or `paper_relation:s`.
        #[arg(long)]
        preset: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        tstar: Option<Complex64>,
        /// Comma-separated list of n.
        #[arg(long)]
        n: Option<String>,
        #[arg(long = "box")]
        box_radius: Option<f64>,
    },
}

fn run(cli: Cli) -> Result<(), CliError> {
    let cfg = match &cli.config {
        Some(path) => Config::load(path)?,
        None => Config::default(),
    };
    match cli.command {
        Command::Dtwist { n, action, classify } => {
            let opts = classify.resolve(&cfg)?;
            dtwist_cmd::run(n, action, &opts)
        }
        Command::Scan(args) => scan::run(scan::ScanConfig::resolve(args, &cfg)?),
        Command::Bkw { action } => match action {
            BkwAction::Equimodular { t0, eps, s_max } => {
                let t0 = cfg
                    .resolve_opt(t0, "t0")?
                    .ok_or_else(|| CliError::Usage("--t0 is required".into()))?;
                let eps = cfg.resolve(eps, "eps", 0.1)?;
                let s_max = cfg.resolve(s_max, "s-max", 40)?;
                bkw_cmd::equimodular(t0, eps, s_max)
            }
            BkwAction::Accumulate {
                preset,
                tstar,
                n,
                box_radius,
            } => {
                let preset = cfg.resolve(preset, "preset", "paper_relation:1".to_string())?;
                let tstar = cfg
                    .resolve_opt(tstar, "tstar")?
                    .ok_or_else(|| CliError::Usage("--tstar is required".into()))?;
                let n_list = bkw_cmd::parse_n_list(&cfg.resolve(n, "n", "10,50,150".to_string())?)?;
                let box_radius = cfg.resolve(box_radius, "box", 0.2)?;
                bkw_cmd::accumulate(&preset, tstar, &n_list, box_radius)
            }
        },
    }
}

impl ClassifyArgs {
    fn resolve(self, cfg: &Config) -> Result<jones_one::roots::ClassifyOptions, CliError> {
        let defaults = jones_one::roots::ClassifyOptions::default();
        let tol_circle = cfg.resolve(self.tol_circle, "tol-circle", defaults.tol_circle)?;
        if !positive(tol_circle) {
            return Err(CliError::Usage("tol-circle must be positive".into()));
        }
        Ok(jones_one::roots::ClassifyOptions {
            dmax: cfg.resolve(self.dmax, "dmax", defaults.dmax)?,
            tol_circle,
            ..defaults
        })
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

/// `x > 0`, false for NaN.
pub fn positive(x: f64) -> bool {
    x > 0.0
}
