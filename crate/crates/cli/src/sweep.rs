//! Expands a selection of identities over grid points into independent tasks
//! and runs them in parallel. Results keep task order.

use clap::ValueEnum;
use rayon::prelude::*;
use xitheta::identities::{
    aux_suite, verify_ferrar, verify_hardy, verify_line_integral, verify_ramanujan_bose, verify_ramanujan_digamma,
    verify_rhl, verify_theta, RhlConfig, VerificationReport,
};
use xitheta::specfun::MobiusTable;
use xitheta::xikernel::KernelParams;
use xitheta::zeros::ZeroRecord;
use xitheta::Complex64;

use crate::grid::GridPoint;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Selection {
    Theta,
    Hardy,
    Ferrar,
    Ramanujan,
    Digamma,
    Rhl,
    Lineint,
    Aux,
    All,
}

impl Selection {
    /// The identities covered, in report order.
    pub fn expand(self, with_rhl: bool) -> Vec<Selection> {
        use Selection::*;
        match self {
            All => {
                let mut v = vec![Theta, Digamma, Hardy, Ferrar, Ramanujan, Lineint];
                if with_rhl {
                    v.push(Rhl);
                }
                v.push(Aux);
                v
            }
            one => vec![one],
        }
    }
}

pub struct RhlInputs {
    pub zeros: Vec<ZeroRecord>,
    pub table: MobiusTable,
    pub config: RhlConfig,
    pub tol_trend: f64,
}

#[derive(Debug, Clone, Copy)]
enum Task {
    Point(Selection, GridPoint),
    Digamma(f64),
    Aux,
}

/// A finished task: a report, or the error that stopped it.
pub struct Outcome {
    pub identity: &'static str,
    pub alpha: Option<f64>,
    pub z: Option<Complex64>,
    pub result: xitheta::Result<Vec<VerificationReport>>,
}

fn tasks(selection: &[Selection], grid: &[GridPoint]) -> Vec<Task> {
    let mut out = Vec::new();
    for &s in selection {
        match s {
            Selection::Aux => out.push(Task::Aux),
            Selection::Digamma => {
                let mut seen: Vec<f64> = Vec::new();
                for p in grid {
                    if !seen.contains(&p.alpha) {
                        seen.push(p.alpha);
                        out.push(Task::Digamma(p.alpha));
                    }
                }
            }
            Selection::All => unreachable!("expanded before use"),
            _ => out.extend(grid.iter().map(|&p| Task::Point(s, p))),
        }
    }
    out
}

fn name(s: Selection) -> &'static str {
    match s {
        Selection::Theta => "theta",
        Selection::Hardy => "hardy",
        Selection::Ferrar => "ferrar",
        Selection::Ramanujan => "ramanujan",
        Selection::Digamma => "digamma",
        Selection::Rhl => "rhl",
        Selection::Lineint => "lineint",
        Selection::Aux => "aux",
        Selection::All => "all",
    }
}

fn run_task(task: Task, tol: f64, rhl: Option<&RhlInputs>) -> Outcome {
    match task {
        Task::Aux => Outcome {
            identity: "aux",
            alpha: None,
            z: None,
            result: aux_suite(tol),
        },
        Task::Digamma(alpha) => Outcome {
            identity: "digamma",
            alpha: Some(alpha),
            z: None,
            result: verify_ramanujan_digamma(alpha, tol).map(|r| vec![r]),
        },
        Task::Point(s, p) => {
            let result = KernelParams::new(p.alpha, p.z).and_then(|k| {
                match s {
                    Selection::Theta => verify_theta(&k, tol),
                    Selection::Hardy => verify_hardy(&k, tol),
                    Selection::Ferrar => verify_ferrar(&k, tol),
                    Selection::Ramanujan => verify_ramanujan_bose(&k, tol),
                    Selection::Lineint => verify_line_integral(&k, tol),
                    Selection::Rhl => {
                        let r = rhl.expect("rhl inputs are loaded when rhl is selected");
                        verify_rhl(&k, &r.zeros, &r.table, &r.config, r.tol_trend)
                    }
                    Selection::Digamma | Selection::Aux | Selection::All => unreachable!(),
                }
                .map(|r| vec![r])
            });
            Outcome {
                identity: name(s),
                alpha: Some(p.alpha),
                z: Some(p.z),
                result,
            }
        }
    }
}

/// Runs every selected identity at every grid point on the current rayon pool.
pub fn run(selection: &[Selection], grid: &[GridPoint], tol: f64, rhl: Option<&RhlInputs>) -> Vec<Outcome> {
    tasks(selection, grid)
        .into_par_iter()
        .map(|t| run_task(t, tol, rhl))
        .collect()
}
