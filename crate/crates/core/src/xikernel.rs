//! Composite kernels built on the special functions: xi, Xi, rho, nabla and
//! lambda, plus the modulus pair every transformation is stated for.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::specfun::{
    digamma, digamma_asymptotic_tail, hyp1f1, lngamma_unchecked, zeta_unchecked, Complex64,
    EULER_GAMMA,
};

/// Exponential rate at which `Xi(t/2)` decays in `t`.
pub const XI_HALF_DECAY_RATE: f64 = PI / 8.0;

/// The modulus `alpha` together with the complex parameter `z`.
///
/// The partner modulus `beta = 1/alpha` is always derived, never stored.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct KernelParams {
    alpha: f64,
    z: Complex64,
}

impl KernelParams {
    pub fn new(alpha: f64, z: Complex64) -> Result<Self> {
        if !(alpha > 0.0) || !alpha.is_finite() {
            return Err(Error::Domain {
                function: "KernelParams",
                detail: format!("alpha = {alpha} must be positive and finite"),
            });
        }
        if !(z.re.is_finite() && z.im.is_finite()) {
            return Err(Error::Domain {
                function: "KernelParams",
                detail: format!("z = {z} must be finite"),
            });
        }
        Ok(Self { alpha, z })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        1.0 / self.alpha
    }

    pub fn z(&self) -> Complex64 {
        self.z
    }

    /// `(beta, i z)`: the point at which the partner side is evaluated.
    pub fn twin(&self) -> Self {
        Self {
            alpha: self.beta(),
            z: Complex64::i() * self.z,
        }
    }
}

/// Riemann's `xi(s) = s(s-1)/2 pi^{-s/2} Gamma(s/2) zeta(s)`, entire.
pub fn xi_small(s: Complex64) -> Complex64 {
    let one = Complex64::new(1.0, 0.0);
    if s.re < 0.5 {
        return xi_small(one - s);
    }
    let d = s - one;
    let front = (-s / 2.0 * PI.ln() + lngamma_unchecked(s / 2.0)).exp() * s * 0.5;
    if d.norm() < 1e-6 {
        // (s - 1) zeta(s) = 1 + gamma (s - 1) + O((s - 1)^2)
        return front * (one + d * EULER_GAMMA);
    }
    front * d * zeta_unchecked(s)
}

/// `Xi(t) = xi(1/2 + i t)`.
pub fn xi_cap(t: Complex64) -> Complex64 {
    xi_small(Complex64::new(0.5 - t.im, t.re))
}

/// `Xi(t)` for real `t`, where it is real.
pub fn xi_real(t: f64) -> f64 {
    xi_small(Complex64::new(0.5, t)).re
}

fn check_x(function: &'static str, x: f64) -> Result<()> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::Domain {
            function,
            detail: format!("x = {x} must be positive and finite"),
        });
    }
    Ok(())
}

/// `rho(x, z, s) = x^{1/2 - s} e^{-z^2/8} 1F1((1-s)/2; 1/2; z^2/4)`.
pub fn rho_kernel(x: f64, z: Complex64, s: Complex64) -> Result<Complex64> {
    check_x("rho_kernel", x)?;
    let half = Complex64::new(0.5, 0.0);
    let z2 = z * z;
    let f = hyp1f1((1.0 - s) / 2.0, half, z2 / 4.0)?;
    Ok(((half - s) * x.ln() - z2 / 8.0).exp() * f)
}

/// `nabla(x, z, s) = rho(x, z, s) + rho(x, z, 1 - s)`.
pub fn nabla_kernel(x: f64, z: Complex64, s: Complex64) -> Result<Complex64> {
    Ok(rho_kernel(x, z, s)? + rho_kernel(x, z, 1.0 - s)?)
}

/// `nabla(alpha, z, (1 + i t)/2)`, the form every real-axis integral uses.
pub fn nabla_on_line(params: &KernelParams, t: f64) -> Result<Complex64> {
    nabla_kernel(params.alpha, params.z, Complex64::new(0.5, 0.5 * t))
}

/// `lambda(x) = psi(x) + 1/(2x) - ln x`, which behaves like `-1/(12 x^2)`.
pub fn lambda_kernel(x: f64) -> Result<f64> {
    check_x("lambda_kernel", x)?;
    if x >= 10.0 {
        // evaluate the asymptotic series directly instead of cancelling
        return Ok(-digamma_asymptotic_tail(x));
    }
    Ok(digamma(x)? + 0.5 / x - x.ln())
}
