use std::path::PathBuf;

/// Errors raised across the toolkit.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// The supplied interval does not bracket a sign change.
    #[error("no sign change on [{lo}, {hi}]: f(lo) = {f_lo}, f(hi) = {f_hi}")]
    Bracket {
        lo: f64,
        hi: f64,
        f_lo: f64,
        f_hi: f64,
    },

    /// An iterative method ran out of iterations or subdivisions.
    #[error("{method} did not converge after {iterations} iterations")]
    Convergence {
        method: &'static str,
        iterations: usize,
    },

    /// The hazard of a pure exponential has no interior peak.
    #[error("degenerate case: {0}")]
    Degenerate(String),

    /// Observations unusable by a likelihood or test.
    #[error("data error: {0}")]
    Data(String),

    #[error("unknown dataset `{0}`")]
    UnknownDataset(String),

    #[error("I/O error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    /// A CSV cell could not be turned into a positive real. Rows are 1-based.
    #[error("parse error at row {row}: {message}")]
    Parse { row: usize, message: String },

    /// Every start of a multi-start fit failed. The best partial result is kept.
    #[error("maximum likelihood fit did not converge for {family}")]
    NonConvergence {
        family: String,
        best: Option<Box<crate::estimation::FitResult>>,
    },

    /// Too many failed replications in a Monte Carlo study.
    #[error("simulation study failed: {0}")]
    Study(String),
}

pub type Result<T> = std::result::Result<T, Error>;
