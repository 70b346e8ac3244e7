//! Benchmark generative models with seeded sampling and exact
//! log-density oracles.
//!
//! Two models are provided: a one-dimensional three-component Gaussian
//! mixture parameterized by a mixing coefficient `γ`, and a
//! five-dimensional model built from independent latent draws pushed
//! through a fixed projection matrix. Both expose closed-form log
//! densities; the densities are the test oracles for everything built on
//! top and are never consumed by the estimators themselves.

pub mod distributions;
pub mod io;
pub mod multidim;
pub mod univariate;

pub use multidim::MultidimModel;
pub use univariate::UnivariateMixtureModel;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::params::ParamPoint;

/// A simulator that can draw feature vectors given a parameter point.
///
/// Models are immutable after construction and safe to share across
/// threads; all randomness enters through the per-call seed.
pub trait GenerativeModel: Send + Sync {
    /// Short stable name used in artifacts and error messages.
    fn name(&self) -> &'static str;

    /// Dimension of a feature vector.
    fn feature_dim(&self) -> usize;

    /// Dimension of a parameter point.
    fn param_dim(&self) -> usize;

    /// Check that a parameter point is valid for this model.
    fn validate_params(&self, theta: &ParamPoint) -> Result<()>;

    /// Draw `n` i.i.d. samples at `theta`. Pure function of
    /// `(theta, n, seed)`.
    fn sample(&self, theta: &ParamPoint, n: usize, seed: u64) -> Result<SampleSet>;

    /// Exact log density, when the model exposes one. `None` means the
    /// model is simulation-only.
    fn exact_log_density(&self, x: &[f64], theta: &ParamPoint) -> Option<Result<f64>> {
        let _ = (x, theta);
        None
    }
}

/// Mixture structure on top of a generative model: θ-independent
/// component densities combined with parameter-dependent weights.
///
/// This is the interface consumed by the pairwise decomposition, which
/// assumes the components themselves do not move with θ (only the
/// weights do).
pub trait MixtureModel: GenerativeModel {
    fn n_components(&self) -> usize;

    /// Mixing weights `w_c(θ)`; non-negative, summing to one.
    fn mixture_weights(&self, theta: &ParamPoint) -> Result<Vec<f64>>;

    /// Draw `n` samples from component `c` alone.
    fn sample_component(&self, c: usize, n: usize, seed: u64) -> Result<SampleSet>;

    /// Exact log density of component `c`, when available.
    fn component_log_density(&self, c: usize, x: &[f64]) -> Option<Result<f64>>;
}

/// A matrix of `n` samples by `p` features together with the parameter
/// point and seed that generated it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SampleSet {
    data: Vec<f64>,
    n_rows: usize,
    n_cols: usize,
    params: ParamPoint,
    seed: u64,
}

impl SampleSet {
    /// Build a sample set from row-major data, validating shape and
    /// finiteness.
    pub fn new(
        data: Vec<f64>,
        n_rows: usize,
        n_cols: usize,
        params: ParamPoint,
        seed: u64,
    ) -> Result<Self> {
        if n_rows == 0 || n_cols == 0 {
            return Err(Error::InvalidParameter(
                "sample set needs n ≥ 1 rows and p ≥ 1 columns".into(),
            ));
        }
        if data.len() != n_rows * n_cols {
            return Err(Error::DimensionMismatch {
                what: "sample data",
                expected: n_rows * n_cols,
                got: data.len(),
            });
        }
        if data.iter().any(|v| !v.is_finite()) {
            return Err(Error::Numeric("sample set contains non-finite entries".into()));
        }
        Ok(SampleSet {
            data,
            n_rows,
            n_cols,
            params,
            seed,
        })
    }

    pub fn n_rows(&self) -> usize {
        self.n_rows
    }

    pub fn n_cols(&self) -> usize {
        self.n_cols
    }

    pub fn params(&self) -> &ParamPoint {
        &self.params
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.n_cols..(i + 1) * self.n_cols]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[f64]> {
        self.data.chunks_exact(self.n_cols)
    }

    /// All values of one column, copied.
    pub fn column(&self, j: usize) -> Vec<f64> {
        (0..self.n_rows).map(|i| self.row(i)[j]).collect()
    }

    /// Concatenate two sample sets drawn from the same model and
    /// parameter point.
    pub fn concat(&self, other: &SampleSet) -> Result<SampleSet> {
        if self.n_cols != other.n_cols {
            return Err(Error::DimensionMismatch {
                what: "sample columns",
                expected: self.n_cols,
                got: other.n_cols,
            });
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        SampleSet::new(
            data,
            self.n_rows + other.n_rows,
            self.n_cols,
            self.params.clone(),
            self.seed,
        )
    }

    /// Short identifier used in artifact metadata.
    pub fn label(&self) -> String {
        format!("n{}_seed{}", self.n_rows, self.seed)
    }
}
