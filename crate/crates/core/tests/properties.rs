use std::f64::consts::PI;

use proptest::prelude::*;
use xitheta::numseries::{cosh_theta_sum, theta_sum};
use xitheta::specfun::{digamma, gamma, hyp1f1, lngamma, zeta, zeta_direct};
use xitheta::xikernel::{nabla_on_line, xi_small, KernelParams};
use xitheta::Complex64;

fn rel(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / a.norm().max(b.norm())
}

fn away_from_integers(x: f64) -> bool {
    (x - x.round()).abs() > 0.05
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn gamma_reflection(re in -4.5f64..4.5, im in -20.0f64..20.0) {
        prop_assume!(away_from_integers(re) || im.abs() > 0.05);
        let s = Complex64::new(re, im);
        let one = Complex64::new(1.0, 0.0);
        let lhs = gamma(s).unwrap() * gamma(one - s).unwrap();
        let rhs = PI / (s * PI).sin();
        prop_assert!(rel(lhs, rhs) <= 1e-10, "s = {s}: {lhs} vs {rhs}");
    }

    #[test]
    fn gamma_duplication(re in 0.1f64..6.0, im in -15.0f64..15.0) {
        let s = Complex64::new(re, im);
        let lhs = gamma(s).unwrap() * gamma(s + 0.5).unwrap();
        let two = Complex64::new(2.0, 0.0);
        let rhs = PI.sqrt() * two.powc(1.0 - 2.0 * s) * gamma(2.0 * s).unwrap();
        prop_assert!(rel(lhs, rhs) <= 1e-10, "s = {s}");
    }

    #[test]
    fn lngamma_is_conjugate_symmetric(re in -6.0f64..6.0, im in 0.01f64..40.0) {
        let s = Complex64::new(re, im);
        let a = lngamma(s).unwrap();
        let b = lngamma(s.conj()).unwrap().conj();
        prop_assert!((a - b).norm() <= 1e-12 * (1.0 + a.norm()));
    }

    #[test]
    fn kummer_transformation(
        are in -3.0f64..3.0, aim in -3.0f64..3.0,
        c in prop::sample::select(vec![0.5, 1.5, 2.0, 3.25]),
        zr in -7.0f64..7.0, zi in -7.0f64..7.0,
    ) {
        let z = Complex64::new(zr, zi);
        prop_assume!(z.norm() <= 10.0);
        let a = Complex64::new(are, aim);
        let c = Complex64::new(c, 0.0);
        let lhs = hyp1f1(a, c, z).unwrap();
        let rhs = z.exp() * hyp1f1(c - a, c, -z).unwrap();
        // floored so that values near a zero of 1F1 are compared absolutely
        let scale = lhs.norm().max(rhs.norm()).max(1e-3);
        prop_assert!((lhs - rhs).norm() / scale <= 1e-10, "a={a} c={c} z={z}: {lhs} vs {rhs}");
    }

    #[test]
    fn zeta_functional_equation(t in -60.0f64..60.0) {
        let s = Complex64::new(0.3, t);
        let one = Complex64::new(1.0, 0.0);
        let two = Complex64::new(2.0, 0.0);
        let factor = two.powc(s) * Complex64::new(PI, 0.0).powc(s - 1.0) * (s * PI / 2.0).sin() * gamma(one - s).unwrap();
        let lhs = zeta_direct(s).unwrap();
        let rhs = factor * zeta_direct(one - s).unwrap();
        prop_assert!(rel(lhs, rhs) <= 1e-9, "t = {t}: {lhs} vs {rhs}");
    }

    #[test]
    fn zeta_continuation_matches_series(re in 0.05f64..0.5, t in -50.0f64..50.0) {
        let s = Complex64::new(re, t);
        prop_assert!(rel(zeta(s).unwrap(), zeta_direct(s).unwrap()) <= 1e-9);
    }

    #[test]
    fn digamma_recurrence(x in 1e-3f64..10.0) {
        let lhs = digamma(x + 1.0).unwrap();
        let rhs = digamma(x).unwrap() + 1.0 / x;
        prop_assert!((lhs - rhs).abs() <= 8.0 * f64::EPSILON * (lhs.abs() + 1.0 / x));
    }

    #[test]
    fn xi_symmetric(re in -2.0f64..3.0, im in -30.0f64..30.0) {
        let s = Complex64::new(re, im);
        let a = xi_small(s);
        let b = xi_small(Complex64::new(1.0, 0.0) - s);
        prop_assert!((a - b).norm() <= 1e-11 * a.norm().max(1e-300));
    }

    #[test]
    fn theta_sum_rotation(beta in 0.5f64..2.0, zr in -2.0f64..2.0, zi in -2.0f64..2.0) {
        let z = Complex64::new(zr, zi);
        let a = cosh_theta_sum(beta, z).unwrap();
        let b = theta_sum(beta, z * Complex64::i()).unwrap();
        prop_assert!((a - b).norm() <= 1e-12 * (1.0 + a.norm()));
    }
}

#[test]
fn nabla_symmetry_grid() {
    let zs = [Complex64::new(0.3, 0.0), Complex64::new(0.0, 0.7), Complex64::new(0.4, 0.2)];
    for alpha in [0.5, 1.0, 2.0] {
        for &z in &zs {
            let p = KernelParams::new(alpha, z).unwrap();
            let q = p.twin();
            for k in 0..=300 {
                let t = 0.1 * k as f64;
                let a = nabla_on_line(&p, t).unwrap();
                let b = nabla_on_line(&q, t).unwrap();
                assert!(
                    (a - b).norm() <= 1e-10 * (1.0 + a.norm()),
                    "alpha={alpha} z={z} t={t}: {a} vs {b}"
                );
            }
        }
    }
}
