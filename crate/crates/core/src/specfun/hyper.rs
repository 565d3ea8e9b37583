//! Confluent hypergeometric 1F1 and the one 2F2 the Hardy-type identity needs.

use crate::error::{Error, Result};
use crate::specfun::Complex64;

/// Relative size of the last accepted term.
const TERM_EPS: f64 = 1e-17;
const MAX_TERMS: usize = 100_000;
/// Documented working range for the argument.
pub const MAX_ARG: f64 = 50.0;

fn check_arg(function: &'static str, z: Complex64) -> Result<()> {
    if !(z.norm() <= MAX_ARG) {
        return Err(Error::Domain {
            function,
            detail: format!("|z| = {} exceeds working range {MAX_ARG}", z.norm()),
        });
    }
    Ok(())
}

/// Kummer's 1F1(a; c; z).
///
/// For `Re z < 0` the series is evaluated after Kummer's transformation
/// `1F1(a;c;z) = e^z 1F1(c-a;c;-z)`, which turns the alternating sum into a
/// positive one. Terminating series (`a` a nonpositive integer) are summed
/// as they stand.
pub fn hyp1f1(a: Complex64, c: Complex64, z: Complex64) -> Result<Complex64> {
    if c.im == 0.0 && c.re <= 0.0 && c.re.fract() == 0.0 {
        return Err(Error::Domain {
            function: "hyp1f1",
            detail: format!("c = {c} is a nonpositive integer"),
        });
    }
    check_arg("hyp1f1", z)?;
    let terminating = a.im == 0.0 && a.re <= 0.0 && a.re.fract() == 0.0;
    if z.re < 0.0 && !terminating {
        Ok(z.exp() * hyp1f1_series(c - a, c, -z)?)
    } else {
        hyp1f1_series(a, c, z)
    }
}

fn hyp1f1_series(a: Complex64, c: Complex64, z: Complex64) -> Result<Complex64> {
    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = term;
    // terms can grow before they shrink; only stop once n has passed |a| + |z|
    let grow_until = a.norm() + z.norm();
    for n in 0..MAX_TERMS {
        let nf = n as f64;
        term *= (a + nf) * z / ((c + nf) * (nf + 1.0));
        sum += term;
        if term.norm() == 0.0 {
            return Ok(sum);
        }
        if nf > grow_until && term.norm() <= TERM_EPS * sum.norm() {
            return Ok(sum);
        }
    }
    Err(Error::NonConvergence {
        what: "hyp1f1 series",
        budget: MAX_TERMS,
        unit: "terms",
    })
}

/// 2F2(1, 1; 3/2, 2; z), summed directly:
/// `sum_n z^n / ((3/2)_n (n + 1))`.
pub fn hyp2f2_11(z: Complex64) -> Result<Complex64> {
    check_arg("hyp2f2_11", z)?;
    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = term;
    let grow_until = z.norm();
    for n in 0..MAX_TERMS {
        let nf = n as f64;
        term *= z * (nf + 1.0) / ((nf + 1.5) * (nf + 2.0));
        sum += term;
        if nf > grow_until && term.norm() <= TERM_EPS * sum.norm() {
            return Ok(sum);
        }
    }
    Err(Error::NonConvergence {
        what: "hyp2f2 series",
        budget: MAX_TERMS,
        unit: "terms",
    })
}
