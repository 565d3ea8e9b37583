use std::f64::consts::PI;

use xitheta::identities::*;
use xitheta::specfun::{mobius_sieve, EULER_GAMMA};
use xitheta::xikernel::KernelParams;
use xitheta::zeros::{load_zeros, refine_all, ZeroRecord};
use xitheta::{Complex64, Error};

const TOL: f64 = 1e-9;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn params(alpha: f64, z: Complex64) -> KernelParams {
    KernelParams::new(alpha, z).unwrap()
}

fn value(r: &VerificationReport, side: &str) -> Complex64 {
    r.side(side).unwrap_or_else(|| panic!("no side {side}")).value
}

fn zeros100() -> Vec<ZeroRecord> {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/../../data/zeros100.txt");
    refine_all(&load_zeros(path, 100).unwrap()).unwrap()
}

#[test]
fn theta_fixed_point_and_common_value() {
    let r = verify_theta(&params(1.0, c(0.0, 0.0)), TOL).unwrap();
    assert!(r.pass);
    assert_eq!(value(&r, "alpha_series"), value(&r, "beta_series"));

    // alpha = 2, z = 1: mpmath gives 0.31201491221698115840
    let r = verify_theta(&params(2.0, c(1.0, 0.0)), TOL).unwrap();
    assert!(r.pass, "{r:?}");
    for s in &r.sides {
        assert!((s.value - 0.312_014_912_216_981_16).norm() < 1e-10, "{}: {}", s.name, s.value);
    }
    assert_eq!(r.sides.len(), 3);
    assert_eq!(r.residuals.len(), 3);
}

#[test]
fn theta_alpha_one_is_its_own_twin() {
    for z in [c(1.0, 0.0), c(0.0, 2.0), c(1.0, 0.5)] {
        let r = verify_theta(&params(1.0, z), TOL).unwrap();
        assert!(r.pass, "z = {z}: {r:?}");
    }
}

#[test]
fn digamma_identity() {
    let r = verify_ramanujan_digamma(1.0, TOL).unwrap();
    assert!(r.pass);
    assert_eq!(value(&r, "alpha_series"), value(&r, "beta_series"));
    let r = verify_ramanujan_digamma(2.0, TOL).unwrap();
    assert!(r.pass, "{r:?}");
    assert!(r.max_residual() < 1e-12);
}

#[test]
fn hardy_sides_and_log_piece() {
    let r = verify_hardy(&params(1.0, c(1.0, 0.0)), TOL).unwrap();
    assert!(r.pass, "{r:?}");
    // mpmath: 0.69020277610801528439
    assert!((value(&r, "xi_integral") - 0.690_202_776_108_015_3).norm() < 1e-10);
    for alpha in [0.5, 1.0, 2.0] {
        let want = -(EULER_GAMMA + (4.0 * alpha * alpha * PI).ln()) / (4.0 * alpha);
        let got = log_gaussian_closed_form(alpha, c(0.0, 0.0)).unwrap();
        assert!((got - want).norm() < 1e-15);
    }
}

#[test]
fn ferrar_bessel_series_side_at_zero() {
    let r = verify_ferrar(&params(1.0, c(0.0, 0.0)), TOL).unwrap();
    assert!(r.pass, "{r:?}");
    assert_eq!(r.sides.len(), 4);
    // mpmath, both by t-integral and by the Bessel series: -2.7434669516308188512
    assert!((value(&r, "bessel_series") + 2.743_466_951_630_818_9).norm() < 1e-12);
    let r = verify_ferrar(&params(2.0, c(1.0, 0.0)), TOL).unwrap();
    assert!(r.pass);
    assert_eq!(r.sides.len(), 3);
}

#[test]
fn ramanujan_has_no_twin_but_an_invariant_at_zero() {
    let r = verify_ramanujan_bose(&params(1.0, c(1.0, 0.0)), TOL).unwrap();
    assert!(r.pass, "{r:?}");
    assert_eq!(r.residuals.len(), 1);
    // mpmath: 0.43997568015998132956
    assert!((value(&r, "x_integral") - 0.439_975_680_159_981_3).norm() < 1e-12);

    let r = verify_ramanujan_bose(&params(2.0, c(0.0, 0.0)), TOL).unwrap();
    assert!(r.pass, "{r:?}");
    assert_eq!(r.residuals.len(), 2);
    assert!((value(&r, "invariant_alpha") - value(&r, "invariant_beta")).norm() < 1e-12);
    // the left side itself is not invariant under alpha -> 1/alpha
    let (a, _) = ramanujan_lhs(2.0, c(0.0, 0.0), 1e-12).unwrap();
    let (b, _) = ramanujan_lhs(0.5, c(0.0, 0.0), 1e-12).unwrap();
    assert!((a - b).norm() > 0.1);
}

#[test]
fn line_integral_paths() {
    for (alpha, z) in [(1.0, c(0.0, 0.0)), (2.0, c(0.0, 0.0)), (1.0, c(1.0, 0.0))] {
        let r = verify_line_integral(&params(alpha, z), TOL).unwrap();
        assert!(r.pass, "{r:?}");
        let theta = verify_theta(&params(alpha, z), TOL).unwrap();
        let via_theta = value(&theta, "xi_integral") * (4.0 * PI);
        assert!((value(&r, "real_axis") - via_theta).norm() < 1e-10);
    }
}

#[test]
fn imaginary_parts_vanish_on_the_axes() {
    for z in [c(1.0, 0.0), c(0.0, 2.0)] {
        for alpha in [0.5, 2.0] {
            let p = params(alpha, z);
            for r in [
                verify_theta(&p, TOL).unwrap(),
                verify_hardy(&p, TOL).unwrap(),
                verify_ferrar(&p, TOL).unwrap(),
                verify_ramanujan_bose(&p, TOL).unwrap(),
            ] {
                let chk = r.check("xi_integral_imag").expect("imaginary part check");
                assert!(chk.pass, "{:?} alpha={alpha} z={z}: {}", r.identity, chk.value);
            }
        }
    }
}

#[test]
fn rejects_large_z() {
    let p = params(1.0, c(3.0, 3.0));
    assert!(matches!(verify_theta(&p, TOL), Err(Error::Domain { .. })));
    assert!(matches!(verify_hardy(&p, TOL), Err(Error::Domain { .. })));
    assert!(KernelParams::new(0.0, c(0.0, 0.0)).is_err());
    assert!(KernelParams::new(-1.0, c(0.0, 0.0)).is_err());
}

#[test]
fn tightening_tolerance_keeps_passes() {
    let p = params(0.8, c(1.0, 0.5));
    for tol in [1e-6, 1e-8] {
        let loose = verify_hardy(&p, tol).unwrap();
        let tight = verify_hardy(&p, tol / 10.0).unwrap();
        assert!(loose.pass && tight.pass);
        let margin: f64 = loose.sides.iter().map(|s| s.abs_error).sum();
        for (a, b) in loose.sides.iter().zip(&tight.sides) {
            assert!((a.value - b.value).norm() <= margin + 1e-15, "{}", a.name);
        }
    }
}

#[test]
fn reports_are_reproducible() {
    let p = params(1.25, c(1.0, 0.5));
    let a = serde_json::to_string(&verify_ferrar(&p, TOL).unwrap()).unwrap();
    let b = serde_json::to_string(&verify_ferrar(&p, TOL).unwrap()).unwrap();
    assert_eq!(a, b);
}

#[test]
fn auxiliary_closed_forms() {
    for r in aux_suite(TOL).unwrap() {
        assert!(r.pass, "{r:?}");
    }
    assert!(cotangent_partial_fraction_check(1.0) <= 1e-11);
    assert!(cotangent_partial_fraction_check(10.0) <= 1e-11);
    let zeta2 = PI * PI / 6.0;
    assert!((cotangent_series(1e-3) - zeta2).abs() < 1e-5);
    assert!((cotangent_closed_form(1e-3) - zeta2).abs() < 1e-5);

    for (alpha, n) in [(1.0, 1), (1.0, 3), (0.5, 1)] {
        assert!(ferrar_gaussian_bessel_check(alpha, n, TOL).unwrap() <= 1e-9);
    }
    let r = verify_log_gaussian(2.0, c(0.0, 0.5), TOL).unwrap();
    assert!(r.pass, "{r:?}");
    let r = verify_log_gaussian(1.0, c(1.0, 0.0), TOL).unwrap();
    assert!(r.pass);
}

#[test]
fn rhl_trend_and_oracle() {
    let zeros = zeros100();
    let table = mobius_sieve(100_000).unwrap();
    let config = RhlConfig::default();

    let r = verify_rhl(&params(1.0, c(0.0, 0.0)), &zeros, &table, &config, 1e-3).unwrap();
    assert_eq!(value(&r, "alpha_side"), value(&r, "beta_side"));

    let r = verify_rhl(&params(2.0, c(0.0, 0.0)), &zeros, &table, &config, 1e-3).unwrap();
    assert!(r.pass, "{r:?}");
    for k in [10, 25, 50, 100] {
        assert!(r.check(&format!("residual_at_{k}_zeros")).is_some());
    }
    // mpmath with the same zeros and Möbius limit: -0.29866944096467164355
    assert!((value(&r, "alpha_side") + 0.298_669_440_964_671_64).norm() < 1e-12);
}

#[test]
fn rhl_needs_derivatives() {
    let zeros = vec![ZeroRecord::unrefined(14.134_725_141_734_693)];
    let table = mobius_sieve(10_000).unwrap();
    let config = RhlConfig {
        zero_counts: vec![1],
        mobius_terms: 10_000,
        ..RhlConfig::default()
    };
    let err = verify_rhl(&params(2.0, c(0.0, 0.0)), &zeros, &table, &config, 1e-3).unwrap_err();
    assert!(matches!(err, Error::MissingDerivative { .. }), "{err:?}");

    let short = RhlConfig {
        mobius_terms: 9_999,
        ..config
    };
    let err = verify_rhl(&params(2.0, c(0.0, 0.0)), &zeros, &table, &short, 1e-3).unwrap_err();
    assert!(matches!(err, Error::Domain { .. }));
}
