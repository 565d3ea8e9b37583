use serde::{Deserialize, Serialize};

use crate::quad::QuadratureResult;
use crate::specfun::Complex64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum IdentityId {
    Theta,
    Digamma,
    Hardy,
    Ferrar,
    Ramanujan,
    Rhl,
    LineIntegral,
    GaussianCosine,
    GaussianCosineMoment,
    LogGaussian,
    CotangentPartialFraction,
    GaussianBessel,
    WatsonBesselSum,
    InverseMellin,
}

impl IdentityId {
    pub fn as_str(&self) -> &'static str {
        match self {
            Self::Theta => "theta",
            Self::Digamma => "digamma",
            Self::Hardy => "hardy",
            Self::Ferrar => "ferrar",
            Self::Ramanujan => "ramanujan",
            Self::Rhl => "rhl",
            Self::LineIntegral => "line_integral",
            Self::GaussianCosine => "gaussian_cosine",
            Self::GaussianCosineMoment => "gaussian_cosine_moment",
            Self::LogGaussian => "log_gaussian",
            Self::CotangentPartialFraction => "cotangent_partial_fraction",
            Self::GaussianBessel => "gaussian_bessel",
            Self::WatsonBesselSum => "watson_bessel_sum",
            Self::InverseMellin => "inverse_mellin",
        }
    }
}

/// How a side was computed. Sides of one report never share a method and
/// code path, so agreement is evidence rather than tautology.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Series,
    Quadrature,
    Contour,
    ClosedForm,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Param {
    pub name: String,
    pub value: Complex64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Side {
    pub name: String,
    pub value: Complex64,
    pub method: Method,
    /// Quadrature bookkeeping summed over every integral in this side.
    pub evaluations: usize,
    pub abs_error: f64,
    pub truncation_t: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Residual {
    pub a: String,
    pub b: String,
    pub value: f64,
}

/// A criterion beyond side agreement, e.g. a vanishing imaginary part.
/// `limit == None` marks a value reported for information only.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub value: f64,
    pub limit: Option<f64>,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub identity: IdentityId,
    pub params: Vec<Param>,
    pub sides: Vec<Side>,
    pub residuals: Vec<Residual>,
    pub checks: Vec<Check>,
    pub tolerance: f64,
    pub pass: bool,
}

impl VerificationReport {
    pub fn side(&self, name: &str) -> Option<&Side> {
        self.sides.iter().find(|s| s.name == name)
    }

    pub fn max_residual(&self) -> f64 {
        self.residuals.iter().map(|r| r.value).fold(0.0, f64::max)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// `|a - b| / (1 + max(|a|, |b|))`.
pub fn residual(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / (1.0 + a.norm().max(b.norm()))
}

pub(crate) struct ReportBuilder {
    identity: IdentityId,
    params: Vec<Param>,
    sides: Vec<Side>,
    checks: Vec<Check>,
    tolerance: f64,
}

impl ReportBuilder {
    pub fn new(identity: IdentityId, tolerance: f64) -> Self {
        Self {
            identity,
            params: Vec::new(),
            sides: Vec::new(),
            checks: Vec::new(),
            tolerance,
        }
    }

    pub fn param(mut self, name: &str, value: impl Into<Complex64>) -> Self {
        self.params.push(Param {
            name: name.into(),
            value: value.into(),
        });
        self
    }

    pub fn series(&mut self, name: &str, value: Complex64) {
        self.push(name, value, Method::Series, None);
    }

    pub fn closed_form(&mut self, name: &str, value: Complex64) {
        self.push(name, value, Method::ClosedForm, None);
    }

    /// A side obtained from one or more integrals, keeping their bookkeeping.
    pub fn integral(&mut self, name: &str, value: Complex64, method: Method, parts: &[QuadratureResult]) {
        self.push(name, value, method, Some(parts));
    }

    fn push(&mut self, name: &str, value: Complex64, method: Method, parts: Option<&[QuadratureResult]>) {
        let parts = parts.unwrap_or(&[]);
        self.sides.push(Side {
            name: name.into(),
            value,
            method,
            evaluations: parts.iter().map(|q| q.evaluations).sum(),
            abs_error: parts.iter().map(|q| q.abs_error).fold(0.0, |a, b| a + b),
            truncation_t: parts.iter().map(|q| q.truncation_t).fold(0.0, f64::max),
        });
    }

    pub fn check(&mut self, name: &str, value: f64, limit: f64) {
        self.checks.push(Check {
            name: name.into(),
            value,
            limit: Some(limit),
            pass: value <= limit,
        });
    }

    pub fn check_flag(&mut self, name: &str, ok: bool) {
        self.checks.push(Check {
            name: name.into(),
            value: if ok { 1.0 } else { 0.0 },
            limit: None,
            pass: ok,
        });
    }

    pub fn info(&mut self, name: &str, value: f64) {
        self.checks.push(Check {
            name: name.into(),
            value,
            limit: None,
            pass: true,
        });
    }

    /// Residuals over every pair of sides.
    pub fn finish(self) -> VerificationReport {
        let mut pairs = Vec::new();
        for i in 0..self.sides.len() {
            for j in i + 1..self.sides.len() {
                pairs.push((i, j));
            }
        }
        self.finish_pairs(&pairs)
    }

    /// Residuals over the given pairs of side indices only.
    pub fn finish_pairs(self, pairs: &[(usize, usize)]) -> VerificationReport {
        let residuals: Vec<Residual> = pairs
            .iter()
            .map(|&(i, j)| Residual {
                a: self.sides[i].name.clone(),
                b: self.sides[j].name.clone(),
                value: residual(self.sides[i].value, self.sides[j].value),
            })
            .collect();
        let pass = residuals.iter().all(|r| r.value <= self.tolerance) && self.checks.iter().all(|c| c.pass);
        VerificationReport {
            identity: self.identity,
            params: self.params,
            sides: self.sides,
            residuals,
            checks: self.checks,
            tolerance: self.tolerance,
            pass,
        }
    }
}
