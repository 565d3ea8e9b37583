//! Adaptive Gauss–Kronrod quadrature on `[0, inf)`, the real line and
//! vertical lines in the complex plane.
//!
//! Infinite ranges are truncated at a point `T` chosen from a fitted decay
//! envelope `C t^A e^{-r t}` so that the discarded tail is below a tenth of
//! the requested tolerance. The rate `r` is supplied by the caller; `C` and
//! `A` are fitted from samples on a window and `C` is then raised until the
//! envelope covers every sample.
//!
//! Tolerances are absolute.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::specfun::Complex64;

/// Hard cap on integrand evaluations for one integral.
pub const MAX_EVALUATIONS: usize = 100_000;

const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.000_000_000_000_000_000_000_000_000_000_000,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];
// Gauss weights for the odd-indexed Kronrod nodes, centre last
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadratureResult {
    pub value: Complex64,
    pub abs_error: f64,
    pub evaluations: usize,
    /// Upper limit actually integrated to; `0` for finite intervals.
    pub truncation_t: f64,
}

/// Where and how the decay envelope is sampled.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TruncationPolicy {
    pub window: (f64, f64),
    pub samples: usize,
    pub bins: usize,
    pub t_min: f64,
    /// Initial panel width on `[0, T]`.
    pub panel_width: f64,
}

impl Default for TruncationPolicy {
    fn default() -> Self {
        Self {
            window: (10.0, 60.0),
            samples: 100,
            bins: 5,
            t_min: 40.0,
            panel_width: 4.0,
        }
    }
}

/// Envelope `|f(t)| <= exp(ln_c) t^power e^{-rate t}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DecayBound {
    pub ln_c: f64,
    pub power: f64,
    pub rate: f64,
}

impl DecayBound {
    /// Fit from `(t, |f(t)|)` samples. Samples are grouped into `bins` ranges
    /// of `ln t`; a line in `ln t` is fitted through the largest
    /// `ln|f| + rate t` of each bin and then lifted over every sample.
    /// Returns `None` when fewer than two bins hold a nonzero sample.
    pub fn fit(samples: &[(f64, f64)], rate: f64, bins: usize) -> Option<Self> {
        let pts: Vec<(f64, f64)> = samples
            .iter()
            .filter(|(t, v)| *t > 0.0 && *v > 0.0 && v.is_finite())
            .map(|&(t, v)| (t.ln(), v.ln() + rate * t))
            .collect();
        if pts.len() < 2 {
            return None;
        }
        let lo = pts.iter().map(|p| p.0).fold(f64::INFINITY, f64::min);
        let hi = pts.iter().map(|p| p.0).fold(f64::NEG_INFINITY, f64::max);
        let width = (hi - lo) / bins as f64;
        let mut tops: Vec<Option<(f64, f64)>> = vec![None; bins];
        for &(u, y) in &pts {
            let k = (((u - lo) / width) as usize).min(bins - 1);
            if tops[k].map_or(true, |(_, best)| y > best) {
                tops[k] = Some((u, y));
            }
        }
        let tops: Vec<(f64, f64)> = tops.into_iter().flatten().collect();
        if tops.len() < 2 {
            return None;
        }
        let n = tops.len() as f64;
        let mu = tops.iter().map(|p| p.0).sum::<f64>() / n;
        let my = tops.iter().map(|p| p.1).sum::<f64>() / n;
        let sxy: f64 = tops.iter().map(|p| (p.0 - mu) * (p.1 - my)).sum();
        let sxx: f64 = tops.iter().map(|p| (p.0 - mu).powi(2)).sum();
        let power = sxy / sxx;
        let mut ln_c = my - power * mu;
        let lift = pts
            .iter()
            .map(|&(u, y)| y - (ln_c + power * u))
            .fold(0.0, f64::max);
        // one decade of headroom over the worst sample
        ln_c += lift + std::f64::consts::LN_10;
        Some(Self { ln_c, power, rate })
    }

    pub fn at(&self, t: f64) -> f64 {
        (self.ln_c + self.power * t.ln() - self.rate * t).exp()
    }

    /// Upper bound for the integral of the envelope over `[t, inf)`.
    pub fn tail(&self, t: f64) -> f64 {
        let mut best = f64::INFINITY;
        if self.rate > 0.0 {
            let r = self.rate - self.power.max(0.0) / t;
            if r > 0.0 {
                best = self.at(t) / r;
            }
        }
        if self.power < -1.0 && self.rate >= 0.0 {
            best = best.min(self.at(t) * t / (-self.power - 1.0));
        }
        best
    }

    /// Smallest `T >= t_min` (to bisection accuracy) with `tail(T) <= target`.
    pub fn truncation_point(&self, target: f64, t_min: f64) -> Result<f64> {
        if self.tail(t_min) <= target {
            return Ok(t_min);
        }
        let mut lo = t_min;
        let mut hi = 2.0 * t_min;
        while !(self.tail(hi) <= target) {
            lo = hi;
            hi *= 2.0;
            if hi > 1e6 {
                return Err(Error::NonConvergence {
                    what: "truncation point search",
                    budget: 1_000_000,
                    unit: "abscissa units",
                });
            }
        }
        for _ in 0..60 {
            let mid = 0.5 * (lo + hi);
            if self.tail(mid) <= target {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        Ok(hi)
    }
}

struct Panel {
    a: f64,
    b: f64,
    value: Complex64,
    err: f64,
    abs: f64,
}

fn gk15<F>(f: &F, a: f64, b: f64) -> Result<Panel>
where
    F: Fn(f64) -> Result<Complex64>,
{
    let centre = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(centre)?;
    let mut resg = fc * WG[3];
    let mut resk = fc * WGK[7];
    let mut resabs = fc.norm() * WGK[7];
    let mut fv1 = [Complex64::new(0.0, 0.0); 7];
    let mut fv2 = [Complex64::new(0.0, 0.0); 7];
    for j in 0..7 {
        let dx = half * XGK[j];
        let f1 = f(centre - dx)?;
        let f2 = f(centre + dx)?;
        fv1[j] = f1;
        fv2[j] = f2;
        resk += (f1 + f2) * WGK[j];
        resabs += (f1.norm() + f2.norm()) * WGK[j];
        if j % 2 == 1 {
            resg += (f1 + f2) * WG[j / 2];
        }
    }
    let mean = resk * 0.5;
    let mut resasc = WGK[7] * (fc - mean).norm();
    for j in 0..7 {
        resasc += WGK[j] * ((fv1[j] - mean).norm() + (fv2[j] - mean).norm());
    }
    let h = half.abs();
    let resasc = resasc * h;
    let resabs = resabs * h;
    let mut err = ((resk - resg) * half).norm();
    if resasc != 0.0 && err != 0.0 {
        err = resasc * (200.0 * err / resasc).powf(1.5).min(1.0);
    }
    err = err.max(50.0 * f64::EPSILON * resabs);
    Ok(Panel {
        a,
        b,
        value: resk * half,
        err,
        abs: resabs,
    })
}

/// Adaptive GK15 on `[a, b]` starting from `n_init` equal panels.
fn adaptive<F>(f: &F, a: f64, b: f64, n_init: usize, target: f64, budget: usize) -> Result<(Complex64, f64, usize)>
where
    F: Fn(f64) -> Result<Complex64>,
{
    let n_init = n_init.max(1);
    let width = (b - a) / n_init as f64;
    let mut panels = Vec::with_capacity(2 * n_init);
    for k in 0..n_init {
        let lo = a + width * k as f64;
        let hi = if k + 1 == n_init { b } else { lo + width };
        panels.push(gk15(f, lo, hi)?);
    }
    let mut evaluations = 15 * n_init;
    loop {
        let err: f64 = panels.iter().map(|p| p.err).sum();
        let abs: f64 = panels.iter().map(|p| p.abs).sum();
        let value: Complex64 = panels.iter().map(|p| p.value).sum();
        // each panel error is clamped at 50 eps of its absolute integral,
        // so the summed estimate cannot go below this
        let floor = 100.0 * f64::EPSILON * abs;
        if err <= target.max(floor) {
            return Ok((value, err, evaluations));
        }
        if evaluations + 30 > budget {
            return Err(Error::NonConvergence {
                what: "adaptive quadrature",
                budget,
                unit: "evaluations",
            });
        }
        let worst = panels
            .iter()
            .enumerate()
            .fold((0, f64::NEG_INFINITY), |acc, (i, p)| if p.err > acc.1 { (i, p.err) } else { acc })
            .0;
        let p = panels.swap_remove(worst);
        let mid = 0.5 * (p.a + p.b);
        if !(mid > p.a && mid < p.b) {
            return Ok((value, err, evaluations));
        }
        panels.push(gk15(f, p.a, mid)?);
        panels.push(gk15(f, mid, p.b)?);
        evaluations += 30;
    }
}

/// Integral over a finite interval.
pub fn integrate_interval<F>(f: F, a: f64, b: f64, tol: f64) -> Result<QuadratureResult>
where
    F: Fn(f64) -> Result<Complex64>,
{
    let (value, abs_error, evaluations) = adaptive(&f, a, b, 1, tol, MAX_EVALUATIONS)?;
    Ok(QuadratureResult {
        value,
        abs_error,
        evaluations,
        truncation_t: 0.0,
    })
}

/// Integral over `[0, inf)` of an integrand decaying at least like
/// `e^{-decay_rate t}` times a power.
pub fn integrate_semi_infinite<F>(f: F, tol: f64, decay_rate: f64) -> Result<QuadratureResult>
where
    F: Fn(f64) -> Result<Complex64>,
{
    integrate_semi_infinite_with(f, tol, decay_rate, &TruncationPolicy::default())
}

pub fn integrate_semi_infinite_with<F>(
    f: F,
    tol: f64,
    decay_rate: f64,
    policy: &TruncationPolicy,
) -> Result<QuadratureResult>
where
    F: Fn(f64) -> Result<Complex64>,
{
    let envelope = |t: f64| f(t).map(|v| v.norm());
    semi_infinite(&f, &envelope, tol, decay_rate, policy)
}

fn semi_infinite<F, E>(f: &F, envelope: &E, tol: f64, decay_rate: f64, policy: &TruncationPolicy) -> Result<QuadratureResult>
where
    F: Fn(f64) -> Result<Complex64>,
    E: Fn(f64) -> Result<f64>,
{
    let (w0, w1) = policy.window;
    let m = policy.samples.max(2);
    let mut samples = Vec::with_capacity(m);
    for k in 0..m {
        let t = w0 * (w1 / w0).powf(k as f64 / (m - 1) as f64);
        samples.push((t, envelope(t)?));
    }
    let tail_target = tol / 10.0;
    let (t_end, tail) = match DecayBound::fit(&samples, decay_rate, policy.bins) {
        Some(bound) => {
            let t_end = bound.truncation_point(tail_target, policy.t_min)?;
            (t_end, bound.tail(t_end))
        }
        None => (policy.t_min.max(w1), 0.0),
    };
    let n_init = (t_end / policy.panel_width).ceil() as usize;
    let budget = MAX_EVALUATIONS - m;
    let (value, err, evaluations) = adaptive(f, 0.0, t_end, n_init, tol - tail_target, budget)?;
    Ok(QuadratureResult {
        value,
        abs_error: err + tail,
        evaluations: evaluations + m,
        truncation_t: t_end,
    })
}

/// Integral over the whole real line, truncated symmetrically.
pub fn integrate_real_line<F>(f: F, tol: f64, decay_rate: f64) -> Result<QuadratureResult>
where
    F: Fn(f64) -> Result<Complex64>,
{
    integrate_real_line_with(f, tol, decay_rate, &TruncationPolicy::default())
}

pub fn integrate_real_line_with<F>(
    f: F,
    tol: f64,
    decay_rate: f64,
    policy: &TruncationPolicy,
) -> Result<QuadratureResult>
where
    F: Fn(f64) -> Result<Complex64>,
{
    let folded = |t: f64| Ok(f(t)? + f(-t)?);
    let envelope = |t: f64| Ok(f(t)?.norm().max(f(-t)?.norm()));
    let mut r = semi_infinite(&folded, &envelope, tol, decay_rate, policy)?;
    r.evaluations *= 2;
    Ok(r)
}

/// `int_{c - i inf}^{c + i inf} g(s) ds`, parametrized as `s = c + i u`.
pub fn integrate_vertical_line<G>(g: G, c: f64, tol: f64, decay_rate: f64) -> Result<QuadratureResult>
where
    G: Fn(Complex64) -> Result<Complex64>,
{
    let mut r = integrate_real_line(|u| g(Complex64::new(c, u)), tol, decay_rate)?;
    r.value *= Complex64::i();
    Ok(r)
}
