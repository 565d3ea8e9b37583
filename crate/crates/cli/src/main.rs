mod grid;
mod output;
mod sweep;

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, ValueEnum};
use xitheta::identities::{RhlConfig, MAX_Z, MIN_MOBIUS_TERMS};
use xitheta::specfun::mobius_sieve;
use xitheta::xikernel::KernelParams;
use xitheta::zeros::{load_zeros, refine_all};

use crate::grid::{load_grid, parse_complex, GridPoint};
use crate::sweep::{RhlInputs, Selection};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

/// Numerically verifies the F(z, alpha) = F(iz, 1/alpha) transformation
/// identities and their auxiliary closed forms.
///
/// Exit status: 0 when every verification passes, 1 when one fails, 2 on a
/// configuration or IO error.
#[derive(Debug, Parser)]
#[command(name = "xi-verify", version)]
struct Args {
    /// Identity to verify; `all` includes rhl only when --zeros is given.
    #[arg(long, value_enum, default_value = "all")]
    identity: Selection,

    /// Single point: alpha > 0. Replaces the grid.
    #[arg(long)]
    alpha: Option<f64>,

    /// Single point: z as `<re>+<im>i`, default 0. Requires --alpha.
    #[arg(long, requires = "alpha", allow_hyphen_values = true)]
    z: Option<String>,

    /// `default` or `file:<path>` with one `alpha z` pair per line.
    #[arg(long, conflicts_with = "alpha")]
    grid: Option<String>,

    /// Zeta zero ordinates, one per line, ascending.
    #[arg(long)]
    zeros: Option<PathBuf>,

    /// Number of terms of the Möbius series.
    #[arg(long, default_value_t = 100_000)]
    mobius_limit: usize,

    /// Residual tolerance for every identity except rhl.
    #[arg(long, env = "XI_VERIFY_TOL", default_value_t = 1e-9)]
    tol: f64,

    /// Bound on the final rhl residual.
    #[arg(long, default_value_t = 1e-3)]
    trend_tol: f64,

    #[arg(long, value_enum, default_value = "json")]
    format: Format,

    /// Output file; standard output when absent.
    #[arg(long)]
    out: Option<PathBuf>,

    /// Worker threads; all cores when absent.
    #[arg(long)]
    jobs: Option<usize>,
}

fn positive(name: &str, v: f64) -> Result<()> {
    if !(v > 0.0 && v.is_finite()) {
        bail!("{name} must be positive and finite, got {v}");
    }
    Ok(())
}

fn points(args: &Args) -> Result<Vec<GridPoint>> {
    let points = match args.alpha {
        Some(alpha) => {
            let z = match &args.z {
                Some(z) => parse_complex(z).context("--z")?,
                None => Default::default(),
            };
            vec![GridPoint { alpha, z }]
        }
        None => load_grid(args.grid.as_deref().unwrap_or("default"))?,
    };
    for p in &points {
        KernelParams::new(p.alpha, p.z).with_context(|| format!("grid point alpha = {}", p.alpha))?;
        if p.z.norm() > MAX_Z {
            bail!("grid point z = {} exceeds |z| <= {MAX_Z}", p.z);
        }
    }
    Ok(points)
}

fn rhl_inputs(args: &Args) -> Result<Option<RhlInputs>> {
    let Some(path) = &args.zeros else {
        return Ok(None);
    };
    if args.mobius_limit < MIN_MOBIUS_TERMS {
        bail!("--mobius-limit must be at least {MIN_MOBIUS_TERMS}");
    }
    let config = RhlConfig {
        mobius_terms: args.mobius_limit,
        ..RhlConfig::default()
    };
    let wanted = config.zero_counts.iter().copied().max().unwrap_or(0);
    let zeros = load_zeros(path, wanted).with_context(|| format!("zeros file {}", path.display()))?;
    let zeros = refine_all(&zeros).context("refining zeros")?;
    let table = mobius_sieve(args.mobius_limit)?;
    Ok(Some(RhlInputs {
        zeros,
        table,
        config,
        tol_trend: args.trend_tol,
    }))
}

fn run(args: &Args) -> Result<bool> {
    positive("--tol", args.tol)?;
    positive("--trend-tol", args.trend_tol)?;
    let grid = points(args)?;
    if args.identity == Selection::Rhl && args.zeros.is_none() {
        bail!("--identity rhl needs --zeros <path>");
    }
    let rhl = rhl_inputs(args)?;
    let selection = args.identity.expand(rhl.is_some());

    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(jobs) = args.jobs {
        if jobs == 0 {
            bail!("--jobs must be at least 1");
        }
        pool = pool.num_threads(jobs);
    }
    let pool = pool.build()?;
    let outcomes = pool.install(|| sweep::run(&selection, &grid, args.tol, rhl.as_ref()));

    let text = match args.format {
        Format::Json => output::json(&outcomes, args.tol)?,
        Format::Csv => output::csv(&outcomes, args.tol)?,
    };
    match &args.out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display()))?,
        None => std::io::stdout().write_all(text.as_bytes())?,
    }
    for o in &outcomes {
        if let Err(e) = &o.result {
            eprintln!("{}: {e}", o.identity);
        }
    }
    Ok(output::all_pass(&outcomes))
}

fn main() -> ExitCode {
    let args = Args::parse();
    match run(&args) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
