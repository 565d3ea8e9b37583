//! Modified Bessel function K0 for real positive argument.
//!
//! `x <= 2`: power-log series. `x > 2`: Steed's continued fraction (Temme's
//! CF2 form), which yields `e^x K0(x)` directly.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::specfun::EULER_GAMMA;

/// Seam between the series and continued-fraction regimes.
pub const SEAM: f64 = 2.0;

fn check(x: f64) -> Result<()> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::Domain {
            function: "besselk0",
            detail: format!("x = {x} must be positive and finite"),
        });
    }
    Ok(())
}

/// K0(x).
pub fn besselk0(x: f64) -> Result<f64> {
    check(x)?;
    if x <= SEAM {
        Ok(k0_series(x))
    } else {
        Ok(k0_scaled_cf(x) * (-x).exp())
    }
}

/// e^x K0(x); finite for arguments where K0 itself underflows.
pub fn besselk0_scaled(x: f64) -> Result<f64> {
    check(x)?;
    if x <= SEAM {
        Ok(k0_series(x) * x.exp())
    } else {
        Ok(k0_scaled_cf(x))
    }
}

pub(crate) fn k0_series(x: f64) -> f64 {
    let q = 0.25 * x * x;
    let lead = -((0.5 * x).ln() + EULER_GAMMA);
    let mut term = 1.0;
    let mut harmonic = 0.0;
    let mut i0 = 1.0;
    let mut rest = 0.0;
    for k in 1..60 {
        let kf = k as f64;
        term *= q / (kf * kf);
        harmonic += 1.0 / kf;
        i0 += term;
        rest += term * harmonic;
        if term < 1e-18 * i0 {
            break;
        }
    }
    lead * i0 + rest
}

pub(crate) fn k0_scaled_cf(x: f64) -> f64 {
    let a1 = 0.25;
    let mut b = 2.0 * (1.0 + x);
    let mut d = 1.0 / b;
    let mut delh = d;
    let mut q1 = 0.0;
    let mut q2 = 1.0;
    let mut q = a1;
    let mut c = a1;
    let mut a = -a1;
    let mut s = 1.0 + q * delh;
    for i in 2..10_000 {
        let fi = i as f64;
        a -= 2.0 * (fi - 1.0);
        c = -a * c / fi;
        let qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh = (b * d - 1.0) * delh;
        let dels = q * delh;
        s += dels;
        if (dels / s).abs() < 1e-17 {
            break;
        }
    }
    (PI / (2.0 * x)).sqrt() / s
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn regimes_agree_at_seam() {
        let series = k0_series(SEAM);
        let cf = k0_scaled_cf(SEAM) * (-SEAM).exp();
        assert_relative_eq!(series, cf, max_relative = 1e-12);
        // and a little either side
        for x in [1.5, 2.5, 3.0] {
            assert_relative_eq!(k0_series(x), k0_scaled_cf(x) * (-x).exp(), max_relative = 1e-12);
        }
    }

    #[test]
    fn leading_asymptotic() {
        let x = 20.0;
        let v = besselk0(x).unwrap() * x.exp() * x.sqrt();
        let lead = (PI / 2.0).sqrt();
        // leading term is off by the 1/(8x) correction, nothing more
        assert!((v - lead).abs() < lead / (8.0 * x) * 1.01);
        let corrected = lead * (1.0 - 1.0 / (8.0 * x) + 9.0 / (128.0 * x * x));
        assert!((v - corrected).abs() < 2e-5);
    }

    #[test]
    fn scaled_survives_large_arguments() {
        let x = 1.0e6;
        let v = besselk0_scaled(x).unwrap();
        assert_relative_eq!(v, (PI / (2.0 * x)).sqrt() * (1.0 - 1.0 / (8.0 * x)), max_relative = 1e-12);
    }

    #[test]
    fn domain() {
        assert!(besselk0(0.0).is_err());
        assert!(besselk0(-1.0).is_err());
        assert!(besselk0_scaled(f64::INFINITY).is_err());
    }
}
