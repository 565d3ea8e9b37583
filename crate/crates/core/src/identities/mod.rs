//! One verification per identity. Every report carries each side computed
//! independently and the pairwise residuals between them.

mod aux;
mod report;
mod rhl;
mod transforms;

pub use aux::{
    aux_suite, cotangent_closed_form, cotangent_partial_fraction_check, cotangent_series,
    ferrar_gaussian_bessel_check, gaussian_bessel_closed_form, gaussian_bessel_integral,
    inverse_mellin_integral, log_gaussian_integral, verify_cotangent, verify_gaussian_bessel,
    verify_gaussian_cosine, verify_gaussian_cosine_moment, verify_inverse_mellin,
    verify_log_gaussian, verify_watson, watson_series,
};
pub use report::{residual, Check, IdentityId, Method, Param, Residual, Side, VerificationReport};
pub use rhl::{rhl_side, verify_rhl, RhlConfig, MIN_MOBIUS_TERMS};
pub use transforms::{
    digamma_series_side, ferrar_bessel_side, ferrar_side, hardy_side, line_integral_contour,
    log_gaussian_closed_form, ramanujan_invariant, ramanujan_lhs, theta_alpha_side,
    theta_beta_side, theta_xi_integral, verify_ferrar, verify_hardy, verify_line_integral,
    verify_ramanujan_bose, verify_ramanujan_digamma, verify_theta, MAX_Z,
};
