//! Library values against multiprecision references (see tools/oracles.py).

use std::collections::HashMap;
use std::sync::OnceLock;

use xitheta::identities::{
    digamma_series_side, ferrar_bessel_side, ferrar_side, hardy_side, log_gaussian_integral, ramanujan_invariant, ramanujan_lhs, rhl_side,
    theta_alpha_side, RhlConfig,
};
use xitheta::numseries::{ferrar_bessel_sum, ferrar_kernel, k0_sum, lambda_sum, theta_sum};
use xitheta::specfun::{
    besselk0, besselk0_scaled, digamma, gamma, hurwitz_zeta, hyp1f1, hyp2f2_11, lngamma, mobius_sieve, zeta,
};
use xitheta::xikernel::{lambda_kernel, nabla_kernel, rho_kernel, xi_real, xi_small};
use xitheta::zeros::{load_zeros, refine_all, zeta_derivative};
use xitheta::Complex64;

fn oracle(name: &str) -> Complex64 {
    static TABLE: OnceLock<HashMap<String, Complex64>> = OnceLock::new();
    let table = TABLE.get_or_init(|| {
        include_str!("oracle_values.txt")
            .lines()
            .map(|l| {
                let f: Vec<&str> = l.split_whitespace().collect();
                (f[0].to_string(), Complex64::new(f[1].parse().unwrap(), f[2].parse().unwrap()))
            })
            .collect()
    });
    *table.get(name).unwrap_or_else(|| panic!("no oracle {name}"))
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

#[track_caller]
fn close(name: &str, got: Complex64, rel: f64) {
    let want = oracle(name);
    let err = (got - want).norm() / want.norm().max(1e-300);
    assert!(err <= rel, "{name}: got {got}, want {want}, rel err {err:.2e}");
}

#[track_caller]
fn close_re(name: &str, got: f64, rel: f64) {
    close(name, c(got, 0.0), rel);
}

#[test]
fn gamma_family() {
    close("lngamma_3.7_2.1", lngamma(c(3.7, 2.1)).unwrap(), 1e-14);
    close("lngamma_0.25_30", lngamma(c(0.25, 30.0)).unwrap(), 1e-14);
    // branch: imaginary part of the continuous log-gamma
    close("lngamma_-2.5_0.5", lngamma(c(-2.5, 0.5)).unwrap(), 1e-13);
    close("gamma_0.5_10", gamma(c(0.5, 10.0)).unwrap(), 1e-12);
    close_re("digamma_0.3", digamma(0.3).unwrap(), 1e-14);
    close_re("digamma_12.5", digamma(12.5).unwrap(), 1e-14);
    assert!(digamma(-0.5).is_err());
}

#[test]
fn hypergeometric() {
    close("hyp1f1_a", hyp1f1(c(-0.25, -1.0), c(0.5, 0.0), c(-1.0, 0.0)).unwrap(), 1e-13);
    close("hyp1f1_b", hyp1f1(c(0.75, 2.0), c(0.5, 0.0), c(0.0, 2.25)).unwrap(), 1e-13);
    close("hyp1f1_c", hyp1f1(c(-0.5, 0.0), c(0.5, 0.0), c(-4.0, 0.0)).unwrap(), 1e-13);
    close("hyp1f1_d", hyp1f1(c(0.25, 5.0), c(0.5, 0.0), c(-1.0, 1.0)).unwrap(), 1e-12);
    close("hyp2f2_11_a", hyp2f2_11(c(3.0, 1.0)).unwrap(), 1e-13);
    close("hyp2f2_11_b", hyp2f2_11(c(-4.0, 0.0)).unwrap(), 1e-12);
}

#[test]
fn bessel_k0() {
    for (name, x) in [
        ("besselk0_0.01", 0.01),
        ("besselk0_0.5", 0.5),
        ("besselk0_1", 1.0),
        ("besselk0_1.99", 1.99),
        ("besselk0_2.01", 2.01),
        ("besselk0_5", 5.0),
    ] {
        close_re(name, besselk0(x).unwrap(), 1e-13);
    }
    close_re("besselk0_scaled_30", besselk0_scaled(30.0).unwrap(), 1e-14);
    close_re("besselk0_scaled_500", besselk0_scaled(500.0).unwrap(), 1e-14);
}

#[test]
fn zeta_family() {
    close("zeta_0.5_14", zeta(c(0.5, 14.0)).unwrap(), 1e-12);
    close("zeta_3", zeta(c(3.0, 0.0)).unwrap(), 1e-14);
    close("zeta_-1.5_2", zeta(c(-1.5, 2.0)).unwrap(), 1e-12);
    close("zeta_0.3_40", zeta(c(0.3, 40.0)).unwrap(), 1e-11);
    close_re("hurwitz_3_5.5", hurwitz_zeta(3.0, 5.5).unwrap(), 1e-14);
    close_re("hurwitz_2_101", hurwitz_zeta(2.0, 101.0).unwrap(), 1e-14);
}

#[test]
fn kernels() {
    close("xi_half", xi_small(c(0.5, 0.0)), 1e-14);
    close("xi_0.3_5", xi_small(c(0.3, 5.0)), 1e-12);
    close("xi_2", xi_small(c(2.0, 0.0)), 1e-14);
    close_re("Xi_10", xi_real(10.0), 1e-12);
    close_re("Xi_5", xi_real(5.0), 1e-12);
    close("rho_2_1_0.5_3", rho_kernel(2.0, c(1.0, 0.0), c(0.5, 3.0)).unwrap(), 1e-13);
    close("nabla_0.7", nabla_kernel(0.7, c(0.4, 0.2), c(0.5, 2.0)).unwrap(), 1e-13);
    close_re("lambda_0.7", lambda_kernel(0.7).unwrap(), 1e-13);
    close_re("lambda_15", lambda_kernel(15.0).unwrap(), 1e-12);
}

#[test]
fn series() {
    // absolute: the value itself is of size 3e-6
    let got = theta_sum(2.0, c(1.0, 0.0)).unwrap();
    assert!((got - oracle("theta_sum_2_1")).norm() < 1e-17);
    close("theta_sum_0.5_2i", theta_sum(0.5, c(0.0, 2.0)).unwrap(), 1e-14);
    close_re("k0_sum_1", k0_sum(1.0).unwrap(), 1e-14);
    close_re("k0_sum_0.05", k0_sum(0.05).unwrap(), 1e-13);
    close_re("ferrar_kernel_0.5", ferrar_kernel(0.5).unwrap(), 1e-13);
    close_re("ferrar_kernel_3", ferrar_kernel(3.0).unwrap(), 1e-13);
    close_re("ferrar_bessel_sum_0.5", ferrar_bessel_sum(0.5).unwrap(), 1e-13);
    close_re("ferrar_bessel_sum_1", ferrar_bessel_sum(1.0).unwrap(), 1e-13);
    close_re("ferrar_bessel_sum_2", ferrar_bessel_sum(2.0).unwrap(), 1e-12);
    close_re("lambda_sum_0.5", lambda_sum(0.5).unwrap(), 1e-13);
    close_re("lambda_sum_1", lambda_sum(1.0).unwrap(), 1e-13);
    close_re("lambda_sum_2", lambda_sum(2.0).unwrap(), 1e-13);
}

#[test]
fn identity_sides() {
    close("theta_alpha_side_2_1", theta_alpha_side(2.0, c(1.0, 0.0)).unwrap(), 1e-14);
    close("theta_alpha_side_0.8_1+0.5i", theta_alpha_side(0.8, c(1.0, 0.5)).unwrap(), 1e-14);
    close_re("digamma_side_1", digamma_series_side(1.0).unwrap(), 1e-13);
    close_re("digamma_side_1.5", digamma_series_side(1.5).unwrap(), 1e-13);
    close_re("digamma_side_2", digamma_series_side(2.0).unwrap(), 1e-13);
    close("ramanujan_lhs_2_1", ramanujan_lhs(2.0, c(1.0, 0.0), 1e-14).unwrap().0, 1e-12);
    close_re("ramanujan_invariant_2", ramanujan_invariant(2.0, 1e-14).unwrap().0, 1e-12);
    close("log_gaussian_1_1", log_gaussian_integral(1.0, c(1.0, 0.0), 1e-14).unwrap().0, 1e-12);
    close("hardy_side_2_1", hardy_side(2.0, c(1.0, 0.0), 1e-14).unwrap().0, 1e-12);
    close("hardy_side_1_1", hardy_side(1.0, c(1.0, 0.0), 1e-14).unwrap().0, 1e-12);
    close("ramanujan_lhs_1_1", ramanujan_lhs(1.0, c(1.0, 0.0), 1e-14).unwrap().0, 1e-12);
    close("ferrar_side_1_0", ferrar_side(1.0, c(0.0, 0.0), 1e-14).unwrap().0, 1e-12);
    close_re("ferrar_bessel_side_1", ferrar_bessel_side(1.0).unwrap(), 1e-13);
}

#[test]
fn zeros_and_rhl_side() {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/../../data/zeros100.txt");
    let zeros = refine_all(&load_zeros(path, 100).unwrap()).unwrap();
    close_re("zeta_zero_1", zeros[0].gamma, 1e-15);
    close_re("zeta_zero_100", zeros[99].gamma, 1e-14);
    close("zeta_prime_zero_1", zeta_derivative(zeros[0].gamma), 1e-9);
    let table = mobius_sieve(100_000).unwrap();
    let side = rhl_side(2.0, c(0.0, 0.0), &table, &zeros, &RhlConfig::default()).unwrap();
    close("rhl_side_2_0", side, 1e-12);
}
