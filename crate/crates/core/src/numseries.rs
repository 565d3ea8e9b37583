//! The infinite series appearing in the identities, each with an explicit
//! truncation rule.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::specfun::{
    besselk0, besselk0_scaled, hurwitz_zeta, hyp1f1, lngamma_unchecked, Complex64, MobiusTable,
    DIGAMMA_TAIL_COEF, EULER_GAMMA,
};
use crate::xikernel::lambda_kernel;
use crate::zeros::ZeroRecord;

/// Absolute size below which a term bound ends a rapidly convergent sum.
const TERM_FLOOR: f64 = 1e-17;
const MAX_TERMS: usize = 10_000_000;

/// Below this `t` the Bessel-sum difference uses its power series.
pub const FERRAR_SERIES_SEAM: f64 = 2.0;

fn check_positive(function: &'static str, name: &str, v: f64) -> Result<()> {
    if !(v > 0.0) || !v.is_finite() {
        return Err(Error::Domain {
            function,
            detail: format!("{name} = {v} must be positive and finite"),
        });
    }
    Ok(())
}

/// `sum_{n>=1} e^{-pi a^2 n^2} cos(sqrt(pi) a n z)`.
pub fn theta_sum(alpha: f64, z: Complex64) -> Result<Complex64> {
    check_positive("theta_sum", "alpha", alpha)?;
    let w = PI.sqrt() * alpha * z;
    // the term bound e^{-pi a^2 n^2 + n |Im w|} peaks here
    let peak = w.im.abs() / (2.0 * PI * alpha * alpha);
    let mut acc = Complex64::new(0.0, 0.0);
    for n in 1..MAX_TERMS {
        let nf = n as f64;
        let g = -PI * alpha * alpha * nf * nf;
        acc += g.exp() * (w * nf).cos();
        if nf > peak && (g + nf * w.im.abs()).exp() < TERM_FLOOR {
            return Ok(acc);
        }
    }
    Err(Error::NonConvergence {
        what: "theta_sum",
        budget: MAX_TERMS,
        unit: "terms",
    })
}

/// `sum_{n>=1} e^{-pi b^2 n^2} cosh(sqrt(pi) b n z)`, summed with `cosh`
/// directly rather than by rotating `z`.
pub fn cosh_theta_sum(beta: f64, z: Complex64) -> Result<Complex64> {
    check_positive("cosh_theta_sum", "beta", beta)?;
    let w = PI.sqrt() * beta * z;
    let peak = w.re.abs() / (2.0 * PI * beta * beta);
    let mut acc = Complex64::new(0.0, 0.0);
    for n in 1..MAX_TERMS {
        let nf = n as f64;
        let g = -PI * beta * beta * nf * nf;
        acc += g.exp() * (w * nf).cosh();
        if nf > peak && (g + nf * w.re.abs()).exp() < TERM_FLOOR {
            return Ok(acc);
        }
    }
    Err(Error::NonConvergence {
        what: "cosh_theta_sum",
        budget: MAX_TERMS,
        unit: "terms",
    })
}

/// `sum_{n>=1} K0(n t)`.
///
/// Summed term by term until `K0(n t) < 1e-17`; for `t < 1e-4` the series
/// representation of the difference with `pi/(2t)` is used instead.
pub fn k0_sum(t: f64) -> Result<f64> {
    check_positive("k0_sum", "t", t)?;
    if t < 1e-4 {
        return Ok(ferrar_kernel_series(t) + PI / (2.0 * t));
    }
    let mut acc = 0.0;
    for n in 1..MAX_TERMS {
        let k = besselk0(n as f64 * t)?;
        acc += k;
        if k < TERM_FLOOR {
            return Ok(acc);
        }
    }
    Err(Error::NonConvergence {
        what: "k0_sum",
        budget: MAX_TERMS,
        unit: "terms",
    })
}

/// `sum_{n>=1} K0(n t) - pi/(2t)`, smooth through `t -> 0` apart from a
/// logarithm.
pub fn ferrar_kernel(t: f64) -> Result<f64> {
    check_positive("ferrar_kernel", "t", t)?;
    if t < FERRAR_SERIES_SEAM {
        Ok(ferrar_kernel_series(t))
    } else {
        Ok(k0_sum(t)? - PI / (2.0 * t))
    }
}

/// `(gamma + ln(t/4pi))/2 + 1/2 sum_{j>=1} binom(-1/2, j) zeta(2j+1) (t/2pi)^{2j}`,
/// convergent for `t < 2 pi`.
fn ferrar_kernel_series(t: f64) -> f64 {
    let q = (t / (2.0 * PI)).powi(2);
    let mut binom = 1.0;
    let mut qj = 1.0;
    let mut acc = 0.0;
    for j in 1..200 {
        let jf = j as f64;
        binom *= (-0.5 - (jf - 1.0)) / jf;
        qj *= q;
        let z = hurwitz_zeta(2.0 * jf + 1.0, 1.0).unwrap_or(1.0);
        let term = binom * z * qj;
        acc += term;
        if term.abs() < 1e-18 {
            break;
        }
    }
    0.5 * (EULER_GAMMA + (t / (4.0 * PI)).ln()) + 0.5 * acc
}

/// `sum_{n>=1} (e^x K0(x) - 1/(n alpha))` with `x = pi alpha^2 n^2 / 2`.
///
/// Terms behave like `-1/(4 pi alpha^3 n^3)`. The sum is taken directly until
/// `x >= 50`; the remainder uses the asymptotic expansion of `e^x K0(x)`
/// summed against Hurwitz zeta values.
pub fn ferrar_bessel_sum(alpha: f64) -> Result<f64> {
    check_positive("ferrar_bessel_sum", "alpha", alpha)?;
    let k = PI * alpha * alpha / 2.0;
    let n_direct = ((50.0 / k).sqrt().ceil() as usize).max(1);
    let mut acc = 0.0;
    for n in 1..=n_direct {
        acc += ferrar_bessel_term(alpha, n)?;
    }
    // e^x K0(x) - sqrt(pi/2x) ~ sqrt(pi/2x) sum_{m>=1} (-1)^m a_m x^{-m},
    // a_m = prod_{j<=m} (2j-1)^2/(8j), and sqrt(pi/2x) = 1/(alpha n)
    let mut a_m = 1.0;
    let mut tail = 0.0;
    for m in 1..=12 {
        let mf = m as f64;
        a_m *= (2.0 * mf - 1.0).powi(2) / (8.0 * mf);
        let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
        let h = hurwitz_zeta(2.0 * mf + 1.0, n_direct as f64 + 1.0)?;
        tail += sign * a_m * k.powi(-m) * h;
    }
    Ok(acc + tail / alpha)
}

/// One term `e^x K0(x) - 1/(n alpha)` of [`ferrar_bessel_sum`].
pub fn ferrar_bessel_term(alpha: f64, n: usize) -> Result<f64> {
    let nf = n as f64;
    let x = PI * alpha * alpha * nf * nf / 2.0;
    Ok(besselk0_scaled(x)? - 1.0 / (nf * alpha))
}

/// `sum_{k>=1} lambda(k alpha)`.
///
/// Terms are `O(k^{-2})`. The sum runs directly until `k alpha >= 20`; beyond
/// that `lambda(x) = -sum_j B_{2j}/(2j) x^{-2j}` is summed exactly in `k`
/// through Hurwitz zeta values (an Euler–Maclaurin-type tail).
pub fn lambda_sum(alpha: f64) -> Result<f64> {
    check_positive("lambda_sum", "alpha", alpha)?;
    let k_direct = ((20.0 / alpha).ceil() as usize).max(1);
    let mut acc = 0.0;
    for k in 1..=k_direct {
        acc += lambda_kernel(k as f64 * alpha)?;
    }
    let mut tail = 0.0;
    let inv2 = 1.0 / (alpha * alpha);
    let mut p = inv2;
    for (j, c) in DIGAMMA_TAIL_COEF.iter().enumerate() {
        let order = 2.0 * (j + 1) as f64;
        tail -= c * p * hurwitz_zeta(order, k_direct as f64 + 1.0)?;
        p *= inv2;
    }
    Ok(acc + tail)
}

fn mobius_term_factor(alpha: f64, z: Complex64, n: usize) -> Complex64 {
    let nf = n as f64;
    (-PI * alpha * alpha / (nf * nf)).exp() * (PI.sqrt() * alpha * z / nf).cos()
}

/// Partial sum `sum_{n<=N} mu(n)/n e^{-pi a^2/n^2} cos(sqrt(pi) a z/n)`.
///
/// The series converges only conditionally, at the rate of the prime number
/// theorem.
pub fn mobius_theta_sum(alpha: f64, z: Complex64, table: &MobiusTable, n_terms: usize) -> Result<Complex64> {
    Ok(mobius_theta_partial(alpha, z, table, n_terms, false)?.value)
}

/// The same sum rewritten with `sum mu(n)/n = 0` subtracted term by term:
/// `sum_{n<=N} mu(n)/n (e^{-pi a^2/n^2} cos(sqrt(pi) a z/n) - 1)`.
/// The bracket is `O(n^{-2})`, so the rewritten series converges absolutely
/// to the same limit.
pub fn mobius_theta_sum_accelerated(
    alpha: f64,
    z: Complex64,
    table: &MobiusTable,
    n_terms: usize,
) -> Result<Complex64> {
    Ok(mobius_theta_partial(alpha, z, table, n_terms, true)?.value)
}

/// A partial sum with the spread of the partial sums over its last decade.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MobiusPartialSum {
    pub value: Complex64,
    pub last_decade_spread: f64,
}

pub fn mobius_theta_partial(
    alpha: f64,
    z: Complex64,
    table: &MobiusTable,
    n_terms: usize,
    accelerated: bool,
) -> Result<MobiusPartialSum> {
    check_positive("mobius_theta_sum", "alpha", alpha)?;
    table.require(n_terms)?;
    let decade_start = n_terms / 10 + 1;
    let mut acc = Complex64::new(0.0, 0.0);
    let (mut lo_re, mut hi_re, mut lo_im, mut hi_im) = (f64::INFINITY, f64::NEG_INFINITY, f64::INFINITY, f64::NEG_INFINITY);
    for (i, &mu) in table.values()[..n_terms].iter().enumerate() {
        let n = i + 1;
        if mu != 0 {
            let mut f = mobius_term_factor(alpha, z, n);
            if accelerated {
                f -= 1.0;
            }
            acc += f * (mu as f64 / n as f64);
        }
        if n >= decade_start {
            lo_re = lo_re.min(acc.re);
            hi_re = hi_re.max(acc.re);
            lo_im = lo_im.min(acc.im);
            hi_im = hi_im.max(acc.im);
        }
    }
    let spread = if n_terms == 0 { 0.0 } else { (hi_re - lo_re).hypot(hi_im - lo_im) };
    Ok(MobiusPartialSum {
        value: acc,
        last_decade_spread: spread,
    })
}

/// One zero's contribution
/// `Gamma((1-rho)/2)/zeta'(rho) 1F1((1-rho)/2; 1/2; -z^2/4) pi^{rho/2} alpha^rho`.
pub fn zero_term(rho: Complex64, zeta_prime: Complex64, alpha: f64, z: Complex64) -> Result<Complex64> {
    let a = (1.0 - rho) / 2.0;
    let f = hyp1f1(a, Complex64::new(0.5, 0.0), -z * z / 4.0)?;
    let log_part = lngamma_unchecked(a) + rho * (0.5 * PI.ln() + alpha.ln());
    Ok(log_part.exp() * f / zeta_prime)
}

/// Bracket closeness rule: ordinates `g < g'` share a bracket when
/// `g' - g < exp(-A g / ln g) + exp(-A g' / ln g')`.
pub fn same_bracket(g: f64, g2: f64, a1: f64) -> bool {
    let w = |x: f64| (-a1 * x / x.ln()).exp();
    (g2 - g).abs() < w(g) + w(g2)
}

/// Running sums of the zero series after each closed bracket. Each zero is
/// taken together with its conjugate.
pub fn zero_sum_partials(zeros: &[ZeroRecord], alpha: f64, z: Complex64, a1: f64) -> Result<Vec<Complex64>> {
    let mut partials = Vec::new();
    let mut acc = Complex64::new(0.0, 0.0);
    for (i, r) in zeros.iter().enumerate() {
        let zp = r.zeta_prime.ok_or(Error::MissingDerivative { gamma: r.gamma })?;
        let rho = r.rho();
        acc += zero_term(rho, zp, alpha, z)? + zero_term(rho.conj(), zp.conj(), alpha, z)?;
        let closes = match zeros.get(i + 1) {
            Some(next) => !same_bracket(r.gamma, next.gamma, a1),
            None => true,
        };
        if closes {
            partials.push(acc);
        }
    }
    Ok(partials)
}

/// Final bracketed sum of the zero series (zero for an empty list).
pub fn zero_sum_bracketed(zeros: &[ZeroRecord], alpha: f64, z: Complex64, a1: f64) -> Result<Complex64> {
    Ok(zero_sum_partials(zeros, alpha, z, a1)?
        .last()
        .copied()
        .unwrap_or(Complex64::new(0.0, 0.0)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::mobius_sieve;
    use approx::assert_relative_eq;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn theta_at_zero_argument() {
        let direct: f64 = (1..10).map(|n| (-PI * (n * n) as f64).exp()).sum();
        assert_relative_eq!(theta_sum(1.0, c(0.0, 0.0)).unwrap().re, direct, max_relative = 1e-15);
    }

    #[test]
    fn cosh_matches_rotated_cos() {
        for (b, z) in [(0.5, c(1.0, 0.0)), (1.25, c(0.0, 2.0)), (2.0, c(1.0, 0.5)), (0.8, c(-2.0, 2.0))] {
            let a = cosh_theta_sum(b, z).unwrap();
            let r = theta_sum(b, c(0.0, 1.0) * z).unwrap();
            assert!((a - r).norm() <= 1e-12 * (1.0 + a.norm()));
        }
    }

    #[test]
    fn k0_sum_large_argument() {
        let t = 40.0;
        assert!((k0_sum(t).unwrap() - besselk0(t).unwrap()).abs() < 1e-17);
    }

    #[test]
    fn ferrar_kernel_continuous_at_seam() {
        let t = FERRAR_SERIES_SEAM;
        let series = ferrar_kernel_series(t);
        let direct = k0_sum(t).unwrap() - PI / (2.0 * t);
        assert!((series - direct).abs() < 1e-13, "{series} vs {direct}");
        let t = 0.5;
        let direct = k0_sum(t).unwrap() - PI / (2.0 * t);
        assert!((ferrar_kernel_series(t) - direct).abs() < 1e-12);
    }

    #[test]
    fn ferrar_terms_decay_cubically() {
        let alpha = 1.0;
        let (n1, n2) = (20usize, 40usize);
        let t1 = ferrar_bessel_term(alpha, n1).unwrap().abs();
        let t2 = ferrar_bessel_term(alpha, n2).unwrap().abs();
        let order = (t1 / t2).ln() / 2f64.ln();
        assert!((2.8..=3.2).contains(&order), "{order}");
    }

    #[test]
    fn ferrar_sum_tail_is_consistent() {
        // moving the switch point must not move the value
        let alpha = 0.8;
        let mut direct = 0.0;
        for n in 1..=2000 {
            direct += ferrar_bessel_term(alpha, n).unwrap();
        }
        let k = PI * alpha * alpha / 2.0;
        let mut tail = 0.0;
        let mut a_m = 1.0;
        for m in 1..=6 {
            let mf = m as f64;
            a_m *= (2.0 * mf - 1.0).powi(2) / (8.0 * mf);
            let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
            tail += sign * a_m * k.powi(-m) * hurwitz_zeta(2.0 * mf + 1.0, 2001.0).unwrap();
        }
        let v = ferrar_bessel_sum(alpha).unwrap();
        assert!((v - (direct + tail / alpha)).abs() < 1e-12);
    }

    #[test]
    fn lambda_sum_tail_consistency() {
        let alpha = 1.5;
        let mut direct = 0.0;
        for k in 1..=5000 {
            direct += lambda_kernel(k as f64 * alpha).unwrap();
        }
        // remaining tail ~ -1/(12 alpha^2) zeta(2, 5001)
        let tail = -hurwitz_zeta(2.0, 5001.0).unwrap() / (12.0 * alpha * alpha);
        assert!((lambda_sum(alpha).unwrap() - (direct + tail)).abs() < 1e-13);
    }

    #[test]
    fn mobius_single_term_and_size_check() {
        let t = mobius_sieve(100).unwrap();
        let (a, z) = (0.7, c(0.3, 0.2));
        let v = mobius_theta_sum(a, z, &t, 1).unwrap();
        let expect = (-PI * a * a).exp() * (PI.sqrt() * a * z).cos();
        assert!((v - expect).norm() < 1e-16);
        assert!(matches!(mobius_theta_sum(a, z, &t, 101), Err(Error::TableTooSmall { .. })));
    }

    #[test]
    fn accelerated_mobius_agrees_with_plain() {
        let t = mobius_sieve(100_000).unwrap();
        let (a, z) = (2.0, c(1.0, 0.0));
        let plain = mobius_theta_partial(a, z, &t, 100_000, false).unwrap();
        let fast = mobius_theta_sum_accelerated(a, z, &t, 100_000).unwrap();
        // the two differ by sum_{n<=N} mu(n)/n, which is small but not tiny
        let m: f64 = t.values().iter().enumerate().map(|(i, &m)| m as f64 / (i + 1) as f64).sum();
        assert!((plain.value - fast - m).norm() < 1e-12);
        assert!(plain.last_decade_spread > 0.0);
    }

    #[test]
    fn empty_zero_list() {
        assert_eq!(zero_sum_bracketed(&[], 1.0, c(0.0, 0.0), 0.1).unwrap(), c(0.0, 0.0));
    }

    #[test]
    fn missing_derivative_reported() {
        let z = [ZeroRecord::unrefined(14.13)];
        assert!(matches!(
            zero_sum_bracketed(&z, 1.0, c(0.0, 0.0), 0.1),
            Err(Error::MissingDerivative { .. })
        ));
    }
}
