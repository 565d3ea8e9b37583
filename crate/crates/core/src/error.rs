use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{function}: pole at {at}")]
    Pole { function: &'static str, at: String },

    #[error("{function}: argument outside domain ({detail})")]
    Domain {
        function: &'static str,
        detail: String,
    },

    #[error("{what} did not converge within {budget} {unit}")]
    NonConvergence {
        what: &'static str,
        budget: usize,
        unit: &'static str,
    },

    #[error("zeros file line {line}: {detail}")]
    Parse { line: usize, detail: String },

    #[error("zeros file line {line}: ordinate not strictly ascending")]
    NonAscending { line: usize },

    #[error("no sign change of Xi on [{lo}, {hi}]")]
    NoSignChange { lo: f64, hi: f64 },

    #[error("Mobius table holds {limit} entries, {needed} required")]
    TableTooSmall { limit: usize, needed: usize },

    #[error("zero at ordinate {gamma} has no zeta' value")]
    MissingDerivative { gamma: f64 },

    #[error("io: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
