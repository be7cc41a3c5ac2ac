//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown density family `{0}` (expected gaussian, uniform or laplace)")]
    UnknownFamily(String),

    #[error("probability {0} outside the open interval (0, 1)")]
    InvalidProbability(f64),

    #[error("quantile bracket expansion exceeded ±{bound} while inverting u = {u}")]
    BracketExpansion { u: f64, bound: f64 },

    #[error("density is not integrable or its quadrature failed to converge: {0}")]
    NonIntegrable(String),

    #[error("density has (numerically) zero variance and cannot be standardized")]
    ZeroVariance,

    #[error("sample is empty")]
    EmptySample,

    #[error("sample value at index {index} is not finite: {value}")]
    NonFiniteSample { index: usize, value: f64 },

    #[error("sample sizes differ: {left} vs {right}")]
    SampleSizeMismatch { left: usize, right: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("degenerate sample (all values equal) makes the likelihood unbounded")]
    DegenerateSample,

    #[error(
        "solver did not converge after {iterations} iterations (best cost {best_cost} at {best_theta:?})"
    )]
    NonConvergence {
        best_theta: Vec<f64>,
        best_cost: f64,
        iterations: usize,
    },

    #[error("density vanishes inside its support at x = {0}; 1/p metric integrand is singular")]
    VanishingDensity(f64),

    #[error("invalid simulation config: {0}")]
    InvalidConfig(String),

    #[error("estimator `{estimator}` failed in {failures} of {trials} trials (over 50%)")]
    TooManyFailures {
        estimator: String,
        failures: usize,
        trials: usize,
        /// Aggregates over the trials that did succeed.
        partial: Box<crate::montecarlo::SimReport>,
    },

    #[error("no numeric column found in CSV input")]
    NoNumericColumn,

    #[error("CSV column `{0}` not found")]
    ColumnNotFound(String),

    #[error("pdf table needs at least two rows, got {0}")]
    PdfTableTooSmall(usize),

    #[error("pdf table must be sorted with strictly increasing z values (row {0})")]
    PdfTableNotSorted(usize),

    #[error("pdf table contains a negative density value at row {0}")]
    PdfTableNegative(usize),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
