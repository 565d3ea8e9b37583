//! Classical special functions, implemented from scratch in double precision.

mod bessel;
mod gamma;
mod hyper;
mod mobius;
mod zeta;

pub use num_complex::Complex64;

pub use bessel::{besselk0, besselk0_scaled, SEAM as BESSEL_K0_SEAM};
pub use gamma::{digamma, gamma, lngamma};
pub use hyper::{hyp1f1, hyp2f2_11, MAX_ARG as HYPER_MAX_ARG};
pub use mobius::{mobius_sieve, MobiusTable};
pub use zeta::{hurwitz_zeta, zeta, zeta_direct};

pub(crate) use gamma::{digamma_asymptotic_tail, lngamma_unchecked, DIGAMMA_TAIL_COEF};
pub(crate) use zeta::{zeta_right, zeta_unchecked};

/// Complex number as used throughout the crate.
pub type ComplexValue = Complex64;

/// Euler's constant.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;
