//! Closed-form evaluations used along the way: Gaussian cosine integrals and
//! their log and first-moment variants, the cotangent partial fractions,
//! Watson's Bessel series and an inverse Mellin integral.

use std::f64::consts::PI;

use crate::error::Result;
use crate::identities::report::{IdentityId, Method, ReportBuilder, VerificationReport};
use crate::identities::transforms::{check_z, integrate_log_singular, log_gaussian_closed_form, quad_tol};
use crate::numseries::k0_sum;
use crate::quad::{integrate_semi_infinite, integrate_vertical_line, QuadratureResult};
use crate::specfun::{besselk0_scaled, hurwitz_zeta, hyp1f1, lngamma_unchecked, Complex64, EULER_GAMMA};

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

/// `int_0^inf t^k e^{-pi a^2 t^2} cos(sqrt(pi) a t z) dt` for `k` in `{0, 1}`.
fn gaussian_cosine_moment(alpha: f64, z: Complex64, k: i32, tol: f64) -> Result<QuadratureResult> {
    let w = PI.sqrt() * alpha * z;
    integrate_semi_infinite(
        |t| Ok((t.powi(k) * (-PI * alpha * alpha * t * t).exp()) * (w * t).cos()),
        tol,
        0.0,
    )
}

pub fn verify_gaussian_cosine(alpha: f64, z: Complex64, tol: f64) -> Result<VerificationReport> {
    check_z("verify_gaussian_cosine", z)?;
    let mut b = ReportBuilder::new(IdentityId::GaussianCosine, tol)
        .param("alpha", alpha)
        .param("z", z);
    let q = gaussian_cosine_moment(alpha, z, 0, quad_tol(tol))?;
    b.integral("quadrature", q.value, Method::Quadrature, &[q]);
    b.closed_form("closed_form", (-z * z / 4.0).exp() / (2.0 * alpha));
    Ok(b.finish())
}

pub fn verify_gaussian_cosine_moment(alpha: f64, z: Complex64, tol: f64) -> Result<VerificationReport> {
    check_z("verify_gaussian_cosine_moment", z)?;
    let mut b = ReportBuilder::new(IdentityId::GaussianCosineMoment, tol)
        .param("alpha", alpha)
        .param("z", z);
    let q = gaussian_cosine_moment(alpha, z, 1, quad_tol(tol))?;
    b.integral("quadrature", q.value, Method::Quadrature, &[q]);
    let w = z * z / 4.0;
    let closed = (-w).exp() / (2.0 * PI * alpha * alpha) * hyp1f1(c(-0.5), c(0.5), w)?;
    b.closed_form("closed_form", closed);
    Ok(b.finish())
}

/// `int_0^inf e^{-pi a^2 x^2} cos(sqrt(pi) a x z) ln x dx` by quadrature.
pub fn log_gaussian_integral(alpha: f64, z: Complex64, tol: f64) -> Result<(Complex64, [QuadratureResult; 2])> {
    let w = PI.sqrt() * alpha * z;
    let parts = integrate_log_singular(
        |x| Ok(((-PI * alpha * alpha * x * x).exp() * x.ln()) * (w * x).cos()),
        tol,
        0.0,
    )?;
    Ok((parts[0].value + parts[1].value, parts))
}

pub fn verify_log_gaussian(alpha: f64, z: Complex64, tol: f64) -> Result<VerificationReport> {
    check_z("verify_log_gaussian", z)?;
    let mut b = ReportBuilder::new(IdentityId::LogGaussian, tol)
        .param("alpha", alpha)
        .param("z", z);
    let (v, parts) = log_gaussian_integral(alpha, z, quad_tol(tol))?;
    b.integral("quadrature", v, Method::Quadrature, &parts);
    b.closed_form("closed_form", log_gaussian_closed_form(alpha, z)?);
    Ok(b.finish())
}

/// `sum_{n>=1} 1/(t^2 + n^2)`: direct to `N`, then an Euler–Maclaurin tail.
pub fn cotangent_series(t: f64) -> f64 {
    let n = (10.0 * t).ceil().max(1000.0) as usize;
    let nf = n as f64;
    let f = |x: f64| 1.0 / (t * t + x * x);
    let mut acc = 0.0;
    for k in (1..=n).rev() {
        acc += f(k as f64);
    }
    let integral = (t / nf).atan() / t;
    let f1 = -2.0 * nf / (t * t + nf * nf).powi(2);
    acc + integral - 0.5 * f(nf) - f1 / 12.0
}

/// `(pi/t) (1/(e^{2 pi t} - 1) - 1/(2 pi t) + 1/2)`.
pub fn cotangent_closed_form(t: f64) -> f64 {
    PI / t * (1.0 / (2.0 * PI * t).exp_m1() - 1.0 / (2.0 * PI * t) + 0.5)
}

/// `|series - closed form|` for the cotangent partial fractions.
pub fn cotangent_partial_fraction_check(t: f64) -> f64 {
    (cotangent_series(t) - cotangent_closed_form(t)).abs()
}

pub fn verify_cotangent(t: f64, tol: f64) -> VerificationReport {
    let mut b = ReportBuilder::new(IdentityId::CotangentPartialFraction, tol).param("t", t);
    b.series("series", c(cotangent_series(t)));
    b.closed_form("closed_form", c(cotangent_closed_form(t)));
    b.finish()
}

/// `int_0^inf e^{-a^2 t^2/(4pi)} / sqrt(t^2 + 4 pi^2 n^2) dt` by quadrature.
pub fn gaussian_bessel_integral(alpha: f64, n: usize, tol: f64) -> Result<QuadratureResult> {
    let m = 2.0 * PI * n as f64;
    integrate_semi_infinite(
        |t| Ok(c((-alpha * alpha * t * t / (4.0 * PI)).exp() / (t * t + m * m).sqrt())),
        tol,
        0.0,
    )
}

/// `1/2 e^x K0(x)` with `x = pi a^2 n^2 / 2`.
pub fn gaussian_bessel_closed_form(alpha: f64, n: usize) -> Result<f64> {
    let nf = n as f64;
    Ok(0.5 * besselk0_scaled(PI * alpha * alpha * nf * nf / 2.0)?)
}

/// Normalized residual between quadrature and closed form.
pub fn ferrar_gaussian_bessel_check(alpha: f64, n: usize, tol: f64) -> Result<f64> {
    Ok(verify_gaussian_bessel(alpha, n, tol)?.max_residual())
}

pub fn verify_gaussian_bessel(alpha: f64, n: usize, tol: f64) -> Result<VerificationReport> {
    let mut b = ReportBuilder::new(IdentityId::GaussianBessel, tol)
        .param("alpha", alpha)
        .param("n", n as f64);
    let q = gaussian_bessel_integral(alpha, n, quad_tol(tol))?;
    b.integral("quadrature", q.value, Method::Quadrature, &[q]);
    b.closed_form("closed_form", c(gaussian_bessel_closed_form(alpha, n)?));
    Ok(b.finish())
}

/// Right side of Watson's formula for `2 sum K0(n t)`:
/// `pi (1/t + 2 sum_n (1/sqrt(t^2 + 4 pi^2 n^2) - 1/(2 pi n))) + gamma + ln(t/2) - ln(2 pi)`.
pub fn watson_series(t: f64) -> Result<f64> {
    const N: usize = 1000;
    let mut acc = 0.0;
    for n in (1..=N).rev() {
        let a = 2.0 * PI * n as f64;
        let r = (t * t + a * a).sqrt();
        // 1/r - 1/a without cancellation
        acc -= t * t / (a * r * (a + r));
    }
    // remainder: (1/2pi) sum_j binom(-1/2, j) (t/2pi)^{2j} zeta(2j+1, N+1)
    let q = (t / (2.0 * PI)).powi(2);
    let mut binom = 1.0;
    let mut qj = 1.0;
    let mut tail = 0.0;
    for j in 1..=8 {
        let jf = j as f64;
        binom *= (-0.5 - (jf - 1.0)) / jf;
        qj *= q;
        tail += binom * qj * hurwitz_zeta(2.0 * jf + 1.0, (N + 1) as f64)?;
    }
    acc += tail / (2.0 * PI);
    Ok(PI * (1.0 / t + 2.0 * acc) + EULER_GAMMA + (t / 2.0).ln() - (2.0 * PI).ln())
}

pub fn verify_watson(t: f64, tol: f64) -> Result<VerificationReport> {
    let mut b = ReportBuilder::new(IdentityId::WatsonBesselSum, tol).param("t", t);
    b.series("bessel_sum", c(2.0 * k0_sum(t)?));
    b.series("watson_series", c(watson_series(t)?));
    Ok(b.finish())
}

/// `(1/2 pi i) int_{(c)} 1/2 a^{-s/2} Gamma(s/2) e^{-b^2/4a}
/// 1F1((1-s)/2; 1/2; b^2/4a) x^{-s} ds`.
pub fn inverse_mellin_integral(a: f64, b: f64, x: f64, c0: f64, tol: f64) -> Result<QuadratureResult> {
    let w = b * b / (4.0 * a);
    let half = c(0.5);
    let mut q = integrate_vertical_line(
        |s| {
            let f = hyp1f1((1.0 - s) / 2.0, half, c(w))?;
            let log_part = lngamma_unchecked(s / 2.0) - s * (0.5 * a.ln() + x.ln()) - w;
            Ok(log_part.exp() * f * 0.5)
        },
        c0,
        tol,
        PI / 4.0,
    )?;
    q.value /= Complex64::new(0.0, 2.0 * PI);
    q.abs_error /= 2.0 * PI;
    Ok(q)
}

pub fn verify_inverse_mellin(a: f64, b: f64, x: f64, c0: f64, tol: f64) -> Result<VerificationReport> {
    let mut r = ReportBuilder::new(IdentityId::InverseMellin, tol)
        .param("a", a)
        .param("b", b)
        .param("x", x)
        .param("c", c0);
    let q = inverse_mellin_integral(a, b, x, c0, quad_tol(tol))?;
    r.integral("contour", q.value, Method::Contour, &[q]);
    r.closed_form("closed_form", c((-a * x * x).exp() * (b * x).cos()));
    Ok(r.finish())
}

/// Every auxiliary check at its standard point.
pub fn aux_suite(tol: f64) -> Result<Vec<VerificationReport>> {
    let half = Complex64::new(0.5, 0.0);
    Ok(vec![
        verify_gaussian_cosine(1.0, half, tol)?,
        verify_gaussian_cosine_moment(1.0, half, tol)?,
        verify_log_gaussian(1.0, c(1.0), tol)?,
        verify_cotangent(1.0, tol),
        verify_gaussian_bessel(1.0, 1, tol)?,
        verify_watson(1.0, tol)?,
        verify_inverse_mellin(1.0, 1.0, 2.0, 1.0, tol)?,
    ])
}
