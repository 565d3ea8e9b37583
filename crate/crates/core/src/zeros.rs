//! Nontrivial zeros of zeta on the critical line: loading ordinates from a
//! text table, refining them against our own `Xi`, and computing `zeta'(rho)`.

use std::fmt::Write as _;
use std::path::Path;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::specfun::{zeta_right, Complex64};
use crate::xikernel::xi_real;

/// Step of the difference quotient for `zeta'`.
pub const DERIVATIVE_STEP: f64 = 1e-6;
/// Grid step used when scanning for sign changes of `Xi`.
pub const SCAN_STEP: f64 = 0.05;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ZeroRecord {
    /// Ordinate of `rho = 1/2 + i gamma`.
    pub gamma: f64,
    pub refined: bool,
    pub zeta_prime: Option<Complex64>,
}

impl ZeroRecord {
    pub fn unrefined(gamma: f64) -> Self {
        Self {
            gamma,
            refined: false,
            zeta_prime: None,
        }
    }

    pub fn rho(&self) -> Complex64 {
        Complex64::new(0.5, self.gamma)
    }
}

/// Parse the zeros table format: one positive decimal ordinate per line,
/// strictly ascending. At most `max_count` lines are read.
pub fn parse_zeros(text: &str, max_count: usize) -> Result<Vec<ZeroRecord>> {
    let mut out = Vec::new();
    let mut lines = text.split('\n').enumerate().peekable();
    while let Some((i, raw)) = lines.next() {
        if out.len() == max_count {
            break;
        }
        let line = raw.strip_suffix('\r').unwrap_or(raw);
        if line.is_empty() && lines.peek().is_none() {
            break;
        }
        let lineno = i + 1;
        let value = parse_ordinate(line).map_err(|detail| Error::Parse { line: lineno, detail })?;
        if let Some(prev) = out.last().map(|r: &ZeroRecord| r.gamma) {
            if !(value > prev) {
                return Err(Error::NonAscending { line: lineno });
            }
        }
        out.push(ZeroRecord::unrefined(value));
    }
    Ok(out)
}

fn parse_ordinate(line: &str) -> std::result::Result<f64, String> {
    let ok_chars = !line.is_empty() && line.bytes().all(|b| b.is_ascii_digit() || b == b'.');
    if !ok_chars || line.bytes().filter(|&b| b == b'.').count() > 1 {
        return Err(format!("expected a positive decimal, found {line:?}"));
    }
    let v: f64 = line.parse().map_err(|e| format!("{e}: {line:?}"))?;
    if !(v > 0.0) {
        return Err(format!("ordinate must be positive, found {line:?}"));
    }
    Ok(v)
}

pub fn load_zeros(path: impl AsRef<Path>, max_count: usize) -> Result<Vec<ZeroRecord>> {
    let text = std::fs::read_to_string(path)?;
    parse_zeros(&text, max_count)
}

/// Render ordinates in the table format, twelve fractional digits each.
pub fn format_zeros(ordinates: &[f64]) -> String {
    let mut s = String::new();
    for g in ordinates {
        let _ = writeln!(s, "{g:.12}");
    }
    s
}

/// Locate the zero of `Xi` bracketed nearest to `gamma0` within `+-0.5`.
pub fn refine_zero(gamma0: f64) -> Result<f64> {
    let (lo, hi) = (gamma0 - 0.5, gamma0 + 0.5);
    let steps = (1.0 / SCAN_STEP).round() as usize;
    let mut best: Option<(f64, f64, f64, f64)> = None;
    let mut a = lo;
    let mut fa = xi_real(a);
    for k in 1..=steps {
        let b = lo + (hi - lo) * k as f64 / steps as f64;
        let fb = xi_real(b);
        if fa == 0.0 {
            return Ok(a);
        }
        if fa * fb < 0.0 {
            let dist = (0.5 * (a + b) - gamma0).abs();
            if best.map_or(true, |(x, y, _, _)| dist < (0.5 * (x + y) - gamma0).abs()) {
                best = Some((a, b, fa, fb));
            }
        }
        a = b;
        fa = fb;
    }
    if fa == 0.0 {
        return Ok(a);
    }
    let (a, b, fa, fb) = best.ok_or(Error::NoSignChange { lo, hi })?;
    Ok(bracketed_root(a, b, fa, fb))
}

/// Regula falsi with a bisection fallback on a sign-change bracket.
fn bracketed_root(mut a: f64, mut b: f64, mut fa: f64, mut fb: f64) -> f64 {
    let width_goal = 1e-13 * b.abs().max(1.0);
    for _ in 0..200 {
        if b - a <= width_goal {
            break;
        }
        let secant = b - fb * (b - a) / (fb - fa);
        let mid = 0.5 * (a + b);
        // take the secant point only if it lands well inside the bracket
        let quarter = 0.25 * (b - a);
        let x = if secant > a + 1e-3 * quarter && secant < b - 1e-3 * quarter {
            secant
        } else {
            mid
        };
        let fx = xi_real(x);
        if fx == 0.0 {
            return x;
        }
        let shrink_before = b - a;
        if (fx < 0.0) == (fa < 0.0) {
            a = x;
            fa = fx;
        } else {
            b = x;
            fb = fx;
        }
        // secant steps that stall get a forced bisection
        if b - a > 0.5 * shrink_before {
            let m = 0.5 * (a + b);
            let fm = xi_real(m);
            if fm == 0.0 {
                return m;
            }
            if (fm < 0.0) == (fa < 0.0) {
                a = m;
                fa = fm;
            } else {
                b = m;
                fb = fm;
            }
        }
    }
    if fa.abs() < fb.abs() {
        a
    } else {
        b
    }
}

/// `zeta'(1/2 + i gamma)` by a central difference in the real direction with
/// one Richardson step.
pub fn zeta_derivative(gamma: f64) -> Complex64 {
    zeta_derivative_with_step(gamma, DERIVATIVE_STEP)
}

pub fn zeta_derivative_with_step(gamma: f64, h: f64) -> Complex64 {
    let s = Complex64::new(0.5, gamma);
    let central = |h: f64| (zeta_right(s + h) - zeta_right(s - h)) / (2.0 * h);
    let d1 = central(h);
    let d2 = central(0.5 * h);
    (d2 * 4.0 - d1) / 3.0
}

/// Refine every record and attach `zeta'(rho)`; runs in parallel, order kept.
pub fn refine_all(records: &[ZeroRecord]) -> Result<Vec<ZeroRecord>> {
    records
        .par_iter()
        .map(|r| {
            let gamma = refine_zero(r.gamma)?;
            Ok(ZeroRecord {
                gamma,
                refined: true,
                zeta_prime: Some(zeta_derivative(gamma)),
            })
        })
        .collect()
}

/// Refined ordinates of all sign changes of `Xi` on `(0, t_max]`, sampled
/// every `step`.
pub fn scan_zeros(t_max: f64, step: f64) -> Vec<f64> {
    let n = (t_max / step).floor() as usize;
    let grid: Vec<f64> = (0..=n).map(|k| k as f64 * step).collect();
    let values: Vec<f64> = grid.par_iter().map(|&t| xi_real(t)).collect();
    let brackets: Vec<usize> = (1..grid.len())
        .filter(|&k| values[k - 1] * values[k] < 0.0)
        .collect();
    brackets
        .par_iter()
        .map(|&k| bracketed_root(grid[k - 1], grid[k], values[k - 1], values[k]))
        .collect()
}
