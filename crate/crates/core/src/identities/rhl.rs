//! The Möbius/zeta-zero transformation. Its validity rests on an unproved
//! convergence hypothesis, so the verification reports a trend over growing
//! numbers of zeros instead of a single machine-precision comparison.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::identities::report::{residual, IdentityId, ReportBuilder, VerificationReport};
use crate::identities::transforms::check_z;
use crate::numseries::{mobius_theta_partial, zero_sum_bracketed};
use crate::specfun::{Complex64, MobiusTable};
use crate::xikernel::KernelParams;
use crate::zeros::ZeroRecord;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RhlConfig {
    /// Zero counts at which the residual is recorded, ascending.
    pub zero_counts: Vec<usize>,
    pub mobius_terms: usize,
    /// Constant of the bracketing rule for close ordinates.
    pub a1: f64,
}

/// Smallest accepted Möbius truncation.
pub const MIN_MOBIUS_TERMS: usize = 10_000;

impl Default for RhlConfig {
    fn default() -> Self {
        Self {
            zero_counts: vec![10, 25, 50, 100],
            mobius_terms: 100_000,
            a1: 0.1,
        }
    }
}

struct SideParts {
    mobius: Complex64,
    mobius_plain: Complex64,
    spread: f64,
}

fn mobius_parts(alpha: f64, z: Complex64, table: &MobiusTable, n: usize) -> Result<SideParts> {
    let fast = mobius_theta_partial(alpha, z, table, n, true)?;
    let plain = mobius_theta_partial(alpha, z, table, n, false)?;
    Ok(SideParts {
        mobius: fast.value,
        mobius_plain: plain.value,
        spread: plain.last_decade_spread,
    })
}

/// `sqrt(a) e^{z^2/8} M - e^{z^2/8}/(4 sqrt(pi) sqrt(a)) Z` for a Möbius sum
/// `M` and a zero sum `Z`.
fn assemble(alpha: f64, z: Complex64, mobius: Complex64, zero_sum: Complex64) -> Complex64 {
    let e = (z * z / 8.0).exp();
    e * (alpha.sqrt() * mobius - zero_sum / (4.0 * PI.sqrt() * alpha.sqrt()))
}

/// One side of the transformation at `(alpha, z)` with the first `zeros`.
pub fn rhl_side(
    alpha: f64,
    z: Complex64,
    table: &MobiusTable,
    zeros: &[ZeroRecord],
    config: &RhlConfig,
) -> Result<Complex64> {
    let m = mobius_parts(alpha, z, table, config.mobius_terms)?;
    let zs = zero_sum_bracketed(zeros, alpha, z, config.a1)?;
    Ok(assemble(alpha, z, m.mobius, zs))
}

pub fn verify_rhl(
    params: &KernelParams,
    zeros: &[ZeroRecord],
    table: &MobiusTable,
    config: &RhlConfig,
    tol_trend: f64,
) -> Result<VerificationReport> {
    check_z("verify_rhl", params.z())?;
    if config.mobius_terms < MIN_MOBIUS_TERMS {
        return Err(Error::Domain {
            function: "verify_rhl",
            detail: format!("{} Möbius terms, at least {MIN_MOBIUS_TERMS} required", config.mobius_terms),
        });
    }
    let (alpha, z) = (params.alpha(), params.z());
    let twin = params.twin();
    let mut b = ReportBuilder::new(IdentityId::Rhl, tol_trend)
        .param("alpha", alpha)
        .param("z", z)
        .param("mobius_terms", config.mobius_terms as f64);

    let ma = mobius_parts(alpha, z, table, config.mobius_terms)?;
    let mb = mobius_parts(twin.alpha(), twin.z(), table, config.mobius_terms)?;

    let counts: Vec<usize> = config
        .zero_counts
        .iter()
        .copied()
        .filter(|&k| k <= zeros.len())
        .collect();
    let mut trail = Vec::new();
    let mut last = None;
    for &k in &counts {
        let za = zero_sum_bracketed(&zeros[..k], alpha, z, config.a1)?;
        let zb = zero_sum_bracketed(&zeros[..k], twin.alpha(), twin.z(), config.a1)?;
        let sa = assemble(alpha, z, ma.mobius, za);
        let sb = assemble(twin.alpha(), twin.z(), mb.mobius, zb);
        let r = residual(sa, sb);
        b.info(&format!("residual_at_{k}_zeros"), r);
        trail.push((r, sa.norm().max(sb.norm())));
        last = Some((sa, sb, za, zb));
    }
    let Some((sa, sb, za, zb)) = last else {
        b.check_flag("enough_zeros", false);
        return Ok(b.finish());
    };
    b.series("alpha_side", sa);
    b.series("beta_side", sb);

    // last two steps must not increase, up to a few ulps of rounding
    let tail = &trail[trail.len().saturating_sub(3)..];
    let non_increasing = tail
        .windows(2)
        .all(|w| w[1].0 <= w[0].0 + 8.0 * f64::EPSILON * (1.0 + w[0].1));
    b.check_flag("non_increasing", non_increasing);

    let pa = assemble(alpha, z, ma.mobius_plain, za);
    let pb = assemble(twin.alpha(), twin.z(), mb.mobius_plain, zb);
    b.info("plain_partial_sum_residual", residual(pa, pb));
    b.info("plain_partial_sum_spread", ma.spread.max(mb.spread));
    if z.im == 0.0 {
        b.check("zero_sum_imag", za.im.abs(), 1e-8 * (1.0 + za.norm()));
    }
    Ok(b.finish())
}
