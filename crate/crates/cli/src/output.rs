//! Report rendering. Floats are written as shortest round-trip decimals, so
//! the same results always produce the same bytes.

use anyhow::Result;
use serde::Serialize;
use xitheta::identities::{Param, VerificationReport};
use xitheta::Complex64;

use crate::sweep::Outcome;

#[derive(Serialize)]
struct Failure<'a> {
    identity: &'a str,
    alpha: Option<f64>,
    z: Option<Complex64>,
    message: String,
}

#[derive(Serialize)]
struct Envelope<'a> {
    tolerance: f64,
    pass: bool,
    reports: Vec<&'a VerificationReport>,
    errors: Vec<Failure<'a>>,
}

/// True when every task finished and every report passed.
pub fn all_pass(outcomes: &[Outcome]) -> bool {
    outcomes
        .iter()
        .all(|o| matches!(&o.result, Ok(reports) if reports.iter().all(|r| r.pass)))
}

pub fn json(outcomes: &[Outcome], tolerance: f64) -> Result<String> {
    let mut reports = Vec::new();
    let mut errors = Vec::new();
    for o in outcomes {
        match &o.result {
            Ok(r) => reports.extend(r.iter()),
            Err(e) => errors.push(Failure {
                identity: o.identity,
                alpha: o.alpha,
                z: o.z,
                message: e.to_string(),
            }),
        }
    }
    let envelope = Envelope {
        tolerance,
        pass: all_pass(outcomes),
        reports,
        errors,
    };
    let mut text = serde_json::to_string_pretty(&envelope)?;
    text.push('\n');
    Ok(text)
}

fn complex(z: Complex64) -> String {
    format!("{:?}{:+?}i", z.re, z.im)
}

fn params(ps: &[Param]) -> String {
    ps.iter()
        .map(|p| {
            if p.name == "z" || p.value.im != 0.0 {
                format!("{}={}", p.name, complex(p.value))
            } else {
                format!("{}={:?}", p.name, p.value.re)
            }
        })
        .collect::<Vec<_>>()
        .join(";")
}

/// One row per pairwise residual; a task that failed to run gets one row
/// carrying its error.
pub fn csv(outcomes: &[Outcome], tolerance: f64) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["identity", "params", "side_a", "side_b", "residual", "tolerance", "pass", "error"])?;
    for o in outcomes {
        match &o.result {
            Ok(reports) => {
                for r in reports {
                    let ps = params(&r.params);
                    for res in &r.residuals {
                        w.write_record([
                            r.identity.as_str(),
                            &ps,
                            &res.a,
                            &res.b,
                            &format!("{:?}", res.value),
                            &format!("{:?}", r.tolerance),
                            &r.pass.to_string(),
                            "",
                        ])?;
                    }
                }
            }
            Err(e) => {
                let mut ps = Vec::new();
                if let Some(a) = o.alpha {
                    ps.push(format!("alpha={a:?}"));
                }
                if let Some(z) = o.z {
                    ps.push(format!("z={}", complex(z)));
                }
                w.write_record([
                    o.identity,
                    &ps.join(";"),
                    "",
                    "",
                    "",
                    &format!("{tolerance:?}"),
                    "false",
                    &e.to_string(),
                ])?;
            }
        }
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}
