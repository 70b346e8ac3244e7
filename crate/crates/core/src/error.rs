//! Crate-wide error type.

use thiserror::Error;

/// Result alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

/// Errors raised by simulators, estimators and inference routines.
#[derive(Debug, Error)]
pub enum Error {
    /// A parameter value violates a model precondition.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// A configuration value violates an operation precondition.
    #[error("invalid config: {0}")]
    InvalidConfig(String),

    /// Vector or matrix dimensions do not match the expected layout.
    #[error("dimension mismatch for {what}: expected {expected}, got {got}")]
    DimensionMismatch {
        what: &'static str,
        expected: usize,
        got: usize,
    },

    /// Training produced a non-finite loss. Distinct from plain
    /// non-convergence, which is visible in the training history but is
    /// not an error.
    #[error("training diverged at epoch {epoch}: loss = {loss}")]
    TrainingDiverged { epoch: usize, loss: f64 },

    /// Degenerate input that leaves the operation undefined, e.g. a
    /// single-class label vector or all-zero weights.
    #[error("degenerate input: {0}")]
    Degenerate(String),

    /// Ratio evaluation was asked for a parameter pair with no cached
    /// calibration and no generative model attached for on-demand fits.
    #[error("no calibration for ({theta0}, {theta1}) and no model attached for on-demand calibration")]
    MissingCalibration { theta0: String, theta1: String },

    /// The model does not expose an exact log-density oracle.
    #[error("model `{0}` has no exact log-density oracle")]
    NoExactDensity(String),

    /// A numeric routine failed (non-finite value, factorization failure).
    #[error("numeric failure: {0}")]
    Numeric(String),

    /// Error attributed to one sample of a dataset.
    #[error("at sample {index}: {source}")]
    AtSample {
        index: usize,
        #[source]
        source: Box<Error>,
    },

    /// Error attributed to one component pair of a decomposed estimator.
    #[error("component pair ({lo}, {hi}): {source}")]
    AtPair {
        lo: usize,
        hi: usize,
        #[source]
        source: Box<Error>,
    },

    /// Serialization format mismatch or corruption.
    #[error("format error: {0}")]
    Format(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl Error {
    /// Wrap an error with the index of the offending sample.
    pub fn at_sample(self, index: usize) -> Self {
        Error::AtSample {
            index,
            source: Box::new(self),
        }
    }

    /// Wrap an error with the component pair it belongs to.
    pub fn at_pair(self, lo: usize, hi: usize) -> Self {
        Error::AtPair {
            lo,
            hi,
            source: Box::new(self),
        }
    }
}
