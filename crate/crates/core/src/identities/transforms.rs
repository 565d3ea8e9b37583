//! The `F(z, alpha) = F(iz, beta)` family and its relatives. Each side is
//! computed on its own: finite sums or x-integrals on one hand, integrals of
//! `Xi` on the other.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::identities::report::{IdentityId, Method, ReportBuilder, VerificationReport};
use crate::numseries::{cosh_theta_sum, ferrar_bessel_sum, ferrar_kernel, lambda_sum, theta_sum};
use crate::quad::{integrate_real_line, integrate_semi_infinite, integrate_vertical_line, QuadratureResult};
use crate::specfun::{digamma, hyp2f2_11, lngamma_unchecked, Complex64, EULER_GAMMA};
use crate::xikernel::{nabla_on_line, rho_kernel, xi_real, xi_small, KernelParams, XI_HALF_DECAY_RATE};

/// Largest `|z|` accepted by the verifications.
pub const MAX_Z: f64 = 4.0;

/// Tolerance handed to each quadrature, relative to the report tolerance.
pub(crate) fn quad_tol(tol: f64) -> f64 {
    (tol * 1e-2).max(1e-14)
}

pub(crate) fn check_z(function: &'static str, z: Complex64) -> Result<()> {
    if !(z.norm() <= MAX_Z) {
        return Err(Error::Domain {
            function,
            detail: format!("|z| = {} exceeds {MAX_Z}", z.norm()),
        });
    }
    Ok(())
}

fn on_axes(z: Complex64) -> bool {
    z.re == 0.0 || z.im == 0.0
}

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

/// `int_0^inf Xi(t/2) w(t) dt` where `w` decays at least like `e^{-rate t}`.
pub(crate) fn xi_integral<W>(w: W, rate: f64, tol: f64) -> Result<QuadratureResult>
where
    W: Fn(f64) -> Result<Complex64>,
{
    integrate_semi_infinite(|t| Ok(w(t)? * xi_real(0.5 * t)), tol, XI_HALF_DECAY_RATE + rate)
}

/// `int_0^inf f(x) dx` for `f` with an integrable singularity at `0`:
/// `[0, 1]` through `x = e^{-u}`, then `[1, inf)`.
pub(crate) fn integrate_log_singular<F>(f: F, tol: f64, outer_rate: f64) -> Result<[QuadratureResult; 2]>
where
    F: Fn(f64) -> Result<Complex64>,
{
    let inner = integrate_semi_infinite(
        |u| {
            let x = (-u).exp();
            Ok(f(x)? * x)
        },
        0.5 * tol,
        1.0,
    )?;
    let outer = integrate_semi_infinite(|y| f(1.0 + y), 0.5 * tol, outer_rate)?;
    Ok([inner, outer])
}

/// `1 / cosh(x)` without overflow.
fn sech(x: f64) -> f64 {
    let e = (-x.abs()).exp();
    2.0 * e / (1.0 + e * e)
}

/// `|Gamma(w)|^2` for the conjugate pair `w`, `conj(w)`.
fn gamma_abs2(w: Complex64) -> f64 {
    (2.0 * lngamma_unchecked(w).re).exp()
}

// ---------------------------------------------------------------- theta

/// `sqrt(a) (e^{-z^2/8}/(2a) - e^{z^2/8} sum e^{-pi a^2 n^2} cos(sqrt(pi) a n z))`.
pub fn theta_alpha_side(alpha: f64, z: Complex64) -> Result<Complex64> {
    let e = (z * z / 8.0).exp();
    Ok(alpha.sqrt() * (1.0 / (e * 2.0 * alpha) - e * theta_sum(alpha, z)?))
}

/// The partner side, written with `cosh` and summed independently.
pub fn theta_beta_side(beta: f64, z: Complex64) -> Result<Complex64> {
    let e = (z * z / 8.0).exp();
    Ok(beta.sqrt() * (e / (2.0 * beta) - cosh_theta_sum(beta, z)? / e))
}

/// `int_0^inf Xi(t/2)/(1+t^2) nabla(alpha, z, (1+it)/2) dt`.
pub fn theta_xi_integral(params: &KernelParams, tol: f64) -> Result<QuadratureResult> {
    xi_integral(|t| Ok(nabla_on_line(params, t)? / (1.0 + t * t)), 0.0, tol)
}

pub fn verify_theta(params: &KernelParams, tol: f64) -> Result<VerificationReport> {
    check_z("verify_theta", params.z())?;
    let (alpha, z) = (params.alpha(), params.z());
    let mut b = ReportBuilder::new(IdentityId::Theta, tol)
        .param("alpha", alpha)
        .param("z", z);
    b.series("alpha_series", theta_alpha_side(alpha, z)?);
    b.series("beta_series", theta_beta_side(params.beta(), z)?);
    let q = theta_xi_integral(params, quad_tol(tol))?;
    let integral = q.value / PI;
    b.integral("xi_integral", integral, Method::Quadrature, &[q]);
    if on_axes(z) {
        b.check("xi_integral_imag", integral.im.abs(), tol);
    }
    Ok(b.finish())
}

// ---------------------------------------------------------------- digamma

/// `sqrt(a) ((gamma - ln(2 pi a))/(2a) + sum_k lambda(k a))`.
pub fn digamma_series_side(alpha: f64) -> Result<f64> {
    Ok(alpha.sqrt() * ((EULER_GAMMA - (2.0 * PI * alpha).ln()) / (2.0 * alpha) + lambda_sum(alpha)?))
}

pub fn verify_ramanujan_digamma(alpha: f64, tol: f64) -> Result<VerificationReport> {
    KernelParams::new(alpha, c(0.0))?;
    let beta = 1.0 / alpha;
    let mut b = ReportBuilder::new(IdentityId::Digamma, tol).param("alpha", alpha);
    b.series("alpha_series", c(digamma_series_side(alpha)?));
    b.series("beta_series", c(digamma_series_side(beta)?));
    let ln_a = alpha.ln();
    let q = xi_integral(
        |t| {
            let xi = xi_real(0.5 * t);
            let g2 = gamma_abs2(Complex64::new(-0.25, 0.25 * t));
            Ok(c(xi * g2 * (0.5 * t * ln_a).cos() / (1.0 + t * t)))
        },
        XI_HALF_DECAY_RATE + PI / 4.0,
        quad_tol(tol),
    )?;
    b.integral("xi_integral", -q.value / PI.powf(1.5), Method::Quadrature, &[q]);
    Ok(b.finish())
}

// ---------------------------------------------------------------- Hardy

fn hardy_x_integrals(alpha: f64, z: Complex64, tol: f64) -> Result<[QuadratureResult; 2]> {
    let w = PI.sqrt() * alpha * z;
    integrate_log_singular(
        |x| Ok(((-PI * alpha * alpha * x * x).exp() * (digamma(x + 1.0)? - x.ln())) * (w * x).cos()),
        tol,
        0.0,
    )
}

/// `sqrt(a) e^{z^2/8} int_0^inf (psi(x+1) - ln x) e^{-pi a^2 x^2} cos(sqrt(pi) a x z) dx`.
pub fn hardy_side(alpha: f64, z: Complex64, tol: f64) -> Result<(Complex64, [QuadratureResult; 2])> {
    let parts = hardy_x_integrals(alpha, z, tol)?;
    let v = alpha.sqrt() * (z * z / 8.0).exp() * (parts[0].value + parts[1].value);
    Ok((v, parts))
}

/// `int_0^inf e^{-pi a^2 x^2} cos(sqrt(pi) a x z) ln x dx` in closed form.
pub fn log_gaussian_closed_form(alpha: f64, z: Complex64) -> Result<Complex64> {
    let w = z * z / 4.0;
    let bracket = c(EULER_GAMMA + (4.0 * PI * alpha * alpha).ln()) + z * z / 2.0 * hyp2f2_11(w)?;
    Ok(-(-w).exp() / (4.0 * alpha) * bracket)
}

pub fn verify_hardy(params: &KernelParams, tol: f64) -> Result<VerificationReport> {
    check_z("verify_hardy", params.z())?;
    let (alpha, z) = (params.alpha(), params.z());
    let qt = quad_tol(tol);
    let mut b = ReportBuilder::new(IdentityId::Hardy, tol)
        .param("alpha", alpha)
        .param("z", z);
    let (va, pa) = hardy_side(alpha, z, qt)?;
    b.integral("alpha_x_integral", va, Method::Quadrature, &pa);
    let twin = params.twin();
    let (vb, pb) = hardy_side(twin.alpha(), twin.z(), qt)?;
    b.integral("beta_x_integral", vb, Method::Quadrature, &pb);

    // psi(x+1) alone by quadrature, the ln x part in closed form
    let w = PI.sqrt() * alpha * z;
    let psi = integrate_semi_infinite(
        |x| Ok((-PI * alpha * alpha * x * x).exp() * digamma(x + 1.0)? * (w * x).cos()),
        qt,
        0.0,
    )?;
    let split = alpha.sqrt() * (z * z / 8.0).exp() * (psi.value - log_gaussian_closed_form(alpha, z)?);
    b.integral("alpha_psi_integral_closed_log", split, Method::Quadrature, &[psi]);

    let q = xi_integral(
        |t| Ok(nabla_on_line(params, t)? * (sech(0.5 * PI * t) / (1.0 + t * t))),
        PI / 2.0,
        qt,
    )?;
    let integral = q.value;
    b.integral("xi_integral", integral, Method::Quadrature, &[q]);
    if on_axes(z) {
        b.check("xi_integral_imag", integral.im.abs(), tol);
    }
    Ok(b.finish())
}

// ---------------------------------------------------------------- Ferrar

/// `sqrt(a) e^{z^2/8} int_0^inf e^{-a^2 t^2/(4pi)} cos(a t z/(2 sqrt(pi)))
/// (sum_n K0(n t) - pi/(2t)) dt`.
pub fn ferrar_side(alpha: f64, z: Complex64, tol: f64) -> Result<(Complex64, [QuadratureResult; 2])> {
    let w = alpha * z / (2.0 * PI.sqrt());
    let parts = integrate_log_singular(
        |t| Ok(((-alpha * alpha * t * t / (4.0 * PI)).exp() * ferrar_kernel(t)?) * (w * t).cos()),
        tol,
        0.0,
    )?;
    let v = alpha.sqrt() * (z * z / 8.0).exp() * (parts[0].value + parts[1].value);
    Ok((v, parts))
}

/// The Bessel-series form at `z = 0`, rescaled to the common value of the
/// Ferrar sides.
pub fn ferrar_bessel_side(alpha: f64) -> Result<f64> {
    let lead = (-EULER_GAMMA + (16.0 * PI).ln() + 2.0 * alpha.ln()) / alpha;
    let v = alpha.sqrt() * (lead - 2.0 * ferrar_bessel_sum(alpha)?);
    Ok(-PI / 4.0 * v)
}

pub fn verify_ferrar(params: &KernelParams, tol: f64) -> Result<VerificationReport> {
    check_z("verify_ferrar", params.z())?;
    let (alpha, z) = (params.alpha(), params.z());
    let qt = quad_tol(tol);
    let mut b = ReportBuilder::new(IdentityId::Ferrar, tol)
        .param("alpha", alpha)
        .param("z", z);
    let (va, pa) = ferrar_side(alpha, z, qt)?;
    b.integral("alpha_t_integral", va, Method::Quadrature, &pa);
    let twin = params.twin();
    let (vb, pb) = ferrar_side(twin.alpha(), twin.z(), qt)?;
    b.integral("beta_t_integral", vb, Method::Quadrature, &pb);
    let q = xi_integral(
        |t| {
            let g2 = gamma_abs2(Complex64::new(0.25, 0.25 * t));
            Ok(nabla_on_line(params, t)? * (g2 / (1.0 + t * t)))
        },
        PI / 4.0,
        qt,
    )?;
    let integral = -q.value / (2.0 * PI.sqrt());
    b.integral("xi_integral", integral, Method::Quadrature, &[q]);
    if z == c(0.0) {
        b.series("bessel_series", c(ferrar_bessel_side(alpha)?));
    }
    if on_axes(z) {
        b.check("xi_integral_imag", integral.im.abs(), tol);
    }
    Ok(b.finish())
}

// ---------------------------------------------------------------- Ramanujan

/// `a^{-1/2} e^{-z^2/8} - 4 pi a^{1/2} e^{z^2/8}
/// int_0^inf x e^{-pi a^2 x^2} cos(sqrt(pi) a x z)/(e^{2 pi x} - 1) dx`.
pub fn ramanujan_lhs(alpha: f64, z: Complex64, tol: f64) -> Result<(Complex64, QuadratureResult)> {
    let w = PI.sqrt() * alpha * z;
    let q = integrate_semi_infinite(
        |x| Ok(c(x * (-PI * alpha * alpha * x * x).exp() / (2.0 * PI * x).exp_m1()) * (w * x).cos()),
        tol,
        2.0 * PI,
    )?;
    let e = (z * z / 8.0).exp();
    let v = 1.0 / (alpha.sqrt() * e) - 4.0 * PI * alpha.sqrt() * e * q.value;
    Ok((v, q))
}

/// `a^{-1/2} - 4 pi a^{-3/2} int_0^inf x e^{-pi x^2/a^2}/(e^{2 pi x} - 1) dx`,
/// which is unchanged under `a -> 1/a`.
pub fn ramanujan_invariant(alpha: f64, tol: f64) -> Result<(f64, QuadratureResult)> {
    let q = integrate_semi_infinite(
        |x| Ok(c(x * (-PI * x * x / (alpha * alpha)).exp() / (2.0 * PI * x).exp_m1())),
        tol,
        2.0 * PI,
    )?;
    Ok((alpha.powf(-0.5) - 4.0 * PI * alpha.powf(-1.5) * q.value.re, q))
}

pub fn verify_ramanujan_bose(params: &KernelParams, tol: f64) -> Result<VerificationReport> {
    check_z("verify_ramanujan_bose", params.z())?;
    let (alpha, z) = (params.alpha(), params.z());
    let qt = quad_tol(tol);
    let mut b = ReportBuilder::new(IdentityId::Ramanujan, tol)
        .param("alpha", alpha)
        .param("z", z);
    let (lhs, ql) = ramanujan_lhs(alpha, z, qt)?;
    b.integral("x_integral", lhs, Method::Quadrature, &[ql]);
    let q = integrate_real_line(
        |t| {
            let g2 = gamma_abs2(Complex64::new(-0.25, 0.25 * t));
            let r = rho_kernel(alpha, z, Complex64::new(1.5, 0.5 * t))?;
            Ok(r * (g2 * xi_real(0.5 * t)))
        },
        qt,
        XI_HALF_DECAY_RATE + PI / 4.0,
    )?;
    let rhs = q.value / (8.0 * PI.powf(1.5));
    b.integral("xi_integral", rhs, Method::Quadrature, &[q]);
    let mut pairs = vec![(0, 1)];
    if z == c(0.0) {
        let (ma, qa) = ramanujan_invariant(alpha, qt)?;
        let (mb, qb) = ramanujan_invariant(1.0 / alpha, qt)?;
        b.integral("invariant_alpha", c(ma), Method::Quadrature, &[qa]);
        b.integral("invariant_beta", c(mb), Method::Quadrature, &[qb]);
        pairs.push((2, 3));
    }
    if on_axes(z) {
        b.check("xi_integral_imag", rhs.im.abs(), tol);
    }
    Ok(b.finish_pairs(&pairs))
}

// ---------------------------------------------------------------- line integral

/// `(2/i) int_{(1/2)} xi(s) rho(alpha, z, s) / (s (1 - s)) ds`.
pub fn line_integral_contour(params: &KernelParams, tol: f64) -> Result<(Complex64, QuadratureResult)> {
    let (alpha, z) = (params.alpha(), params.z());
    let q = integrate_vertical_line(
        |s| Ok(xi_small(s) * rho_kernel(alpha, z, s)? / (s * (1.0 - s))),
        0.5,
        tol,
        PI / 4.0,
    )?;
    Ok((q.value * 2.0 / Complex64::i(), q))
}

pub fn verify_line_integral(params: &KernelParams, tol: f64) -> Result<VerificationReport> {
    check_z("verify_line_integral", params.z())?;
    let qt = quad_tol(tol);
    let mut b = ReportBuilder::new(IdentityId::LineIntegral, tol)
        .param("alpha", params.alpha())
        .param("z", params.z());
    let q = theta_xi_integral(params, qt)?;
    b.integral("real_axis", q.value * 4.0, Method::Quadrature, &[q]);
    let (v, qc) = line_integral_contour(params, qt)?;
    b.integral("contour", v, Method::Contour, &[qc]);
    b.series("theta_series", theta_alpha_side(params.alpha(), params.z())? * (4.0 * PI));
    Ok(b.finish())
}
