use thiserror::Error;

use crate::potentials::{Family, VertexId};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("quadrature did not converge: error estimate {estimate:.3e} > tolerance {tol:.3e} after {evaluations} evaluations")]
    NonConvergence { estimate: f64, tol: f64, evaluations: usize },

    #[error("Gamma has a pole at the nonpositive integer {0}")]
    PoleAtNonpositiveInteger(i64),

    #[error("no sign change on [{lo}, {hi}]: f(lo) = {f_lo:e}, f(hi) = {f_hi:e}")]
    NoSignChange { lo: f64, hi: f64, f_lo: f64, f_hi: f64 },

    #[error("Q(z) has a pole at the origin")]
    PoleAtOrigin,

    #[error("{operation} is not applicable to the {family} family")]
    NotApplicable { family: Family, operation: &'static str },

    #[error("vertex {0} is not a singular point of this family")]
    UnknownVertex(VertexId),

    #[error("no connection factor for [{from}, {to}]")]
    MissingFactor { from: VertexId, to: VertexId },

    #[error("terms at vertex {anchor} disagree on dominance")]
    InconsistentDominance { anchor: VertexId },

    #[error("line trace failed near z = {re} + {im}i: {reason}")]
    StepFailure { re: f64, im: f64, reason: String },

    #[error("leading coefficient of the local expansion vanishes")]
    DegenerateLeadingCoefficient,

    #[error("singular point order {0} is not supported (expected -1, 1 or 2)")]
    UnsupportedOrder(i32),

    #[error("eigenvalue {n} not converged: refinement difference {estimate:.3e} exceeds {threshold:.3e}")]
    NotConverged { n: usize, estimate: f64, threshold: f64 },

    #[error("energy scan up to {scan_max} found only {found} of {wanted} levels")]
    NoBracket { found: usize, wanted: usize, scan_max: f64 },

    #[error("line {line}: {message}")]
    ItineraryParse { line: usize, message: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    pub(crate) fn not_applicable(family: Family, operation: &'static str) -> Self {
        Error::NotApplicable { family, operation }
    }
}
