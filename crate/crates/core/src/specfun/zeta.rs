//! Riemann zeta.
//!
//! Right of the critical line the alternating (eta) series is summed with the
//! Cohen–Villegas–Zagier weights; left of it the functional equation maps
//! back. The number of accelerated terms grows with `|Im s|` because the
//! acceleration error carries a factor `e^{pi |t| / 2}`.

use std::f64::consts::{LN_2, PI};

use crate::error::{Error, Result};
use crate::specfun::gamma::{ln_sin_pi, lngamma_unchecked};
use crate::specfun::Complex64;

/// `B_{2j} / (2j)!` for j = 1..12.
const B2J_OVER_FACT: [f64; 12] = [
    0.083_333_333_333_333_33,
    -0.001_388_888_888_888_889,
    3.306_878_306_878_307e-5,
    -8.267_195_767_195_768e-7,
    2.087_675_698_786_81e-8,
    -5.284_190_138_687_493e-10,
    1.338_253_653_068_467_9e-11,
    -3.389_680_296_322_582_7e-13,
    8.586_062_056_277_845e-15,
    -2.174_868_698_558_062e-16,
    5.509_002_828_360_229_5e-18,
    -1.395_446_468_581_252_2e-19,
];

/// ln(3 + sqrt 8), the convergence rate per accelerated term.
const CVZ_RATE: f64 = 1.762_747_174_039_086;

/// Riemann zeta function, analytically continued; pole at `s = 1`.
pub fn zeta(s: Complex64) -> Result<Complex64> {
    if s == Complex64::new(1.0, 0.0) {
        return Err(Error::Pole {
            function: "zeta",
            at: "1".into(),
        });
    }
    Ok(zeta_unchecked(s))
}

/// Zeta from the accelerated eta series alone, without the functional
/// equation. Valid for `Re s > 0`.
pub fn zeta_direct(s: Complex64) -> Result<Complex64> {
    if !(s.re > 0.0) {
        return Err(Error::Domain {
            function: "zeta_direct",
            detail: format!("Re s = {} must be positive", s.re),
        });
    }
    if s == Complex64::new(1.0, 0.0) {
        return Err(Error::Pole {
            function: "zeta_direct",
            at: "1".into(),
        });
    }
    Ok(zeta_right(s))
}

pub(crate) fn zeta_unchecked(s: Complex64) -> Complex64 {
    if s.re >= 0.5 {
        zeta_right(s)
    } else {
        zeta_reflected(s)
    }
}

pub(crate) fn zeta_right(s: Complex64) -> Complex64 {
    // 1 - 2^{1-s}, vanishing at s = 1 + 2 pi i k / ln 2
    let denom = -cexpm1((Complex64::new(1.0, 0.0) - s) * LN_2);
    if denom.norm() < 0.05 && (s - 1.0).norm() > 0.5 {
        return zeta_euler_maclaurin(s);
    }
    eta(s) / denom
}

/// Dirichlet eta function by CVZ-accelerated alternating summation.
pub(crate) fn eta(s: Complex64) -> Complex64 {
    let weights = cvz_weights(cvz_terms(s.im.abs()));
    let mut acc = Complex64::new(0.0, 0.0);
    for (k, w) in weights.iter().enumerate() {
        let term = (-s * ((k + 1) as f64).ln()).exp() * *w;
        if k % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

fn cvz_terms(abs_t: f64) -> usize {
    let need = (PI * abs_t / 2.0 + (3.0 * (1.0 + 2.0 * abs_t)).ln() + 38.0) / CVZ_RATE;
    (need.ceil() as usize).max(20)
}

/// Normalized weights `(d_n - d_k) / d_n`, built from log-scaled increments so
/// that large `n` never overflows.
fn cvz_weights(n: usize) -> Vec<f64> {
    let nf = n as f64;
    let mut log_inc = Vec::with_capacity(n + 1);
    let mut l = 0.0f64;
    log_inc.push(l);
    for i in 0..n {
        let i = i as f64;
        l += ((nf + i) * 4.0 * (nf - i) / ((2.0 * i + 1.0) * (2.0 * i + 2.0))).ln();
        log_inc.push(l);
    }
    let top = log_inc.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let inc: Vec<f64> = log_inc.iter().map(|v| (v - top).exp()).collect();
    let total: f64 = inc.iter().sum();
    let mut suffix = vec![0.0; n + 1];
    let mut run = 0.0;
    for k in (0..=n).rev() {
        suffix[k] = run;
        run += inc[k];
    }
    suffix.truncate(n);
    suffix.iter().map(|v| v / total).collect()
}

fn zeta_reflected(s: Complex64) -> Complex64 {
    if s.norm() < 1e-6 {
        // zeta(s) = -1/2 - s ln(2 pi)/2 + O(s^2)
        return Complex64::new(-0.5, 0.0) - s * (2.0 * PI).ln() / 2.0;
    }
    if s.im == 0.0 && s.re < 0.0 && (s.re / 2.0).fract() == 0.0 {
        return Complex64::new(0.0, 0.0);
    }
    let one = Complex64::new(1.0, 0.0);
    let log_factor = s * LN_2 + (s - 1.0) * PI.ln() + ln_sin_pi(s / 2.0) + lngamma_unchecked(one - s);
    log_factor.exp() * zeta_right(one - s)
}

/// Euler–Maclaurin summation, valid for any `s != 1`; used as a fallback
/// where the eta denominator vanishes and as an independent check.
pub(crate) fn zeta_euler_maclaurin(s: Complex64) -> Complex64 {
    let n = (s.norm().max(10.0) + 10.0).ceil() as usize;
    let nf = n as f64;
    let mut acc = Complex64::new(0.0, 0.0);
    for k in 1..n {
        acc += (-s * (k as f64).ln()).exp();
    }
    let n_pow = (-s * nf.ln()).exp();
    acc += n_pow * nf / (s - 1.0) + n_pow * 0.5;
    // s (s+1) ... (s+2j-2) N^{-s-2j+1}
    let mut rising = s;
    let mut p = n_pow / nf;
    for (j, b) in B2J_OVER_FACT.iter().enumerate() {
        let term = rising * p * *b;
        acc += term;
        if term.norm() < 1e-18 * acc.norm() {
            break;
        }
        let j = j as f64;
        rising *= (s + 2.0 * j + 1.0) * (s + 2.0 * j + 2.0);
        p /= nf * nf;
    }
    acc
}

/// Hurwitz zeta `sum_{k>=0} (k + a)^{-p}` for real `p > 1`, `a > 0`.
pub fn hurwitz_zeta(p: f64, a: f64) -> Result<f64> {
    if !(p > 1.0) || !(a > 0.0) {
        return Err(Error::Domain {
            function: "hurwitz_zeta",
            detail: format!("need p > 1 and a > 0, got p = {p}, a = {a}"),
        });
    }
    let shift = (p + 15.0).ceil() as usize;
    let mut acc = 0.0;
    for k in 0..shift {
        acc += (k as f64 + a).powf(-p);
    }
    let x = shift as f64 + a;
    let xp = x.powf(-p);
    acc += xp * x / (p - 1.0) + 0.5 * xp;
    let mut rising = p;
    let mut pw = xp / x;
    for (j, b) in B2J_OVER_FACT.iter().enumerate() {
        acc += b * rising * pw;
        let j = j as f64;
        rising *= (p + 2.0 * j + 1.0) * (p + 2.0 * j + 2.0);
        pw /= x * x;
    }
    Ok(acc)
}

/// `e^w - 1` without cancellation for small `|w|`.
pub(crate) fn cexpm1(w: Complex64) -> Complex64 {
    if w.norm() > 1e-2 {
        return w.exp() - 1.0;
    }
    let mut term = w;
    let mut acc = w;
    for k in 2..12 {
        term *= w / k as f64;
        acc += term;
    }
    acc
}
