//! Gamma, log-Gamma and digamma.
//!
//! Complex log-Gamma uses the Lanczos approximation with g = 7 and nine
//! coefficients for `Re s >= 1/2` and the reflection formula below that.
//! On vertical lines the logarithmic form keeps `Gamma(s)` representable long
//! after the ordinary product would underflow.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::specfun::Complex64;
#[cfg(test)]
use crate::specfun::EULER_GAMMA;

const LANCZOS_G: f64 = 7.0;
const LANCZOS_COEF: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// ln(2 pi) / 2
const HALF_LN_2PI: f64 = 0.918_938_533_204_672_8;

fn is_nonpositive_integer(s: Complex64) -> bool {
    s.im == 0.0 && s.re <= 0.0 && s.re.fract() == 0.0
}

/// Principal branch of the logarithm of the Gamma function: analytic off the
/// negative real axis and real for real `s > 0`.
pub fn lngamma(s: Complex64) -> Result<Complex64> {
    if is_nonpositive_integer(s) {
        return Err(Error::Pole {
            function: "lngamma",
            at: format!("{s}"),
        });
    }
    Ok(lngamma_unchecked(s))
}

pub(crate) fn lngamma_unchecked(s: Complex64) -> Complex64 {
    if s.re >= 0.5 {
        return lanczos(s);
    }
    // ln Gamma(s) = ln Gamma(s + n) - sum_k ln(s + k) holds on the principal
    // branch with principal logarithms
    let n = (0.5 - s.re).ceil() as usize;
    let mut acc = lanczos(s + n as f64);
    for k in 0..n {
        acc -= (s + k as f64).ln();
    }
    acc
}

fn lanczos(s: Complex64) -> Complex64 {
    let z = s - 1.0;
    let mut acc = Complex64::new(LANCZOS_COEF[0], 0.0);
    for (k, c) in LANCZOS_COEF.iter().enumerate().skip(1) {
        acc += *c / (z + k as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    HALF_LN_2PI + (z + 0.5) * t.ln() - t + acc.ln()
}

/// `ln sin(pi w)`, stable for large `|Im w|` where `sin` itself overflows.
pub(crate) fn ln_sin_pi(w: Complex64) -> Complex64 {
    if w.im.abs() < 20.0 {
        return (w * PI).sin().ln();
    }
    if w.im < 0.0 {
        return ln_sin_pi(w.conj()).conj();
    }
    // sin(pi w) = (i/2) e^{-i pi w} (1 - e^{2 i pi w}) and |e^{2 i pi w}| is tiny here.
    let i = Complex64::i();
    let small = (i * 2.0 * PI * w).exp();
    Complex64::new(0.5f64.ln(), PI / 2.0) - i * PI * w + (Complex64::new(1.0, 0.0) - small).ln()
}

/// Gamma function, via `exp(lngamma)`.
pub fn gamma(s: Complex64) -> Result<Complex64> {
    lngamma(s).map(|l| l.exp())
}

/// Digamma function psi(x) = Gamma'(x)/Gamma(x) for real x > 0.
pub fn digamma(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::Domain {
            function: "digamma",
            detail: format!("x = {x} must be positive and finite"),
        });
    }
    let mut shift = 0.0;
    let mut x = x;
    while x < 10.0 {
        shift -= 1.0 / x;
        x += 1.0;
    }
    Ok(shift + x.ln() - 0.5 / x - digamma_asymptotic_tail(x))
}

/// `B_{2k} / (2k)` for k = 1..7.
pub(crate) const DIGAMMA_TAIL_COEF: [f64; 7] = [
    1.0 / 12.0,
    -1.0 / 120.0,
    1.0 / 252.0,
    -1.0 / 240.0,
    1.0 / 132.0,
    -691.0 / 32_760.0,
    1.0 / 12.0,
];

/// `sum_k B_{2k} / (2k x^{2k})`, so that `psi(x) = ln x - 1/(2x) - tail(x)`.
/// Accurate to roundoff for x >= 10.
pub(crate) fn digamma_asymptotic_tail(x: f64) -> f64 {
    let inv2 = 1.0 / (x * x);
    let mut p = inv2;
    let mut acc = 0.0;
    for c in DIGAMMA_TAIL_COEF {
        acc += c * p;
        p *= inv2;
    }
    acc
}
