//! Primitive univariate distributions with seeded sampling and
//! closed-form log densities.
//!
//! These are the building blocks of the benchmark models and of their
//! exact-density oracles. Sampling goes through `rand_distr`; densities
//! are written out explicitly because they double as the test oracles.

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Exp, Normal};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_7;

/// Gaussian distribution parameterized by mean and standard deviation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Gaussian {
    pub mean: f64,
    pub sd: f64,
}

impl Gaussian {
    pub fn new(mean: f64, sd: f64) -> Result<Self> {
        if !(sd > 0.0) || !sd.is_finite() || !mean.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "Gaussian requires finite mean and sd > 0, got mean={mean}, sd={sd}"
            )));
        }
        Ok(Gaussian { mean, sd })
    }

    pub fn log_density(&self, x: f64) -> f64 {
        let z = (x - self.mean) / self.sd;
        -0.5 * z * z - self.sd.ln() - LN_SQRT_2PI
    }

    pub fn sample(&self, rng: &mut ChaCha8Rng) -> f64 {
        Normal::new(self.mean, self.sd)
            .expect("validated at construction")
            .sample(rng)
    }
}

/// Exponential distribution under the rate convention: density
/// `λ·exp(−λx)` on `x ≥ 0`, mean `1/λ`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Exponential {
    pub rate: f64,
}

impl Exponential {
    pub fn new(rate: f64) -> Result<Self> {
        if !(rate > 0.0) || !rate.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "Exponential requires rate > 0, got {rate}"
            )));
        }
        Ok(Exponential { rate })
    }

    pub fn log_density(&self, x: f64) -> f64 {
        if x < 0.0 {
            f64::NEG_INFINITY
        } else {
            self.rate.ln() - self.rate * x
        }
    }

    pub fn sample(&self, rng: &mut ChaCha8Rng) -> f64 {
        Exp::new(self.rate)
            .expect("validated at construction")
            .sample(rng)
    }
}

/// Finite mixture of Gaussian components with fixed weights.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GaussianMixture {
    components: Vec<Gaussian>,
    weights: Vec<f64>,
}

impl GaussianMixture {
    pub fn new(components: Vec<Gaussian>, weights: Vec<f64>) -> Result<Self> {
        if components.len() != weights.len() || components.is_empty() {
            return Err(Error::InvalidParameter(
                "mixture needs matching, non-empty components and weights".into(),
            ));
        }
        validate_weights(&weights)?;
        Ok(GaussianMixture {
            components,
            weights,
        })
    }

    pub fn log_density(&self, x: f64) -> f64 {
        let terms: Vec<f64> = self
            .components
            .iter()
            .zip(&self.weights)
            .filter(|(_, &w)| w > 0.0)
            .map(|(c, &w)| w.ln() + c.log_density(x))
            .collect();
        log_sum_exp(&terms)
    }

    pub fn sample(&self, rng: &mut ChaCha8Rng) -> f64 {
        let c = sample_categorical(&self.weights, rng);
        self.components[c].sample(rng)
    }
}

/// Check that mixture weights are non-negative and sum to one.
pub fn validate_weights(weights: &[f64]) -> Result<()> {
    if weights.iter().any(|&w| !(w >= 0.0) || !w.is_finite()) {
        return Err(Error::InvalidParameter(
            "mixture weights must be finite and non-negative".into(),
        ));
    }
    let total: f64 = weights.iter().sum();
    if (total - 1.0).abs() > 1e-9 {
        return Err(Error::InvalidParameter(format!(
            "mixture weights must sum to 1, got {total}"
        )));
    }
    Ok(())
}

/// Draw a component index with the given weights.
pub fn sample_categorical(weights: &[f64], rng: &mut ChaCha8Rng) -> usize {
    let u: f64 = rng.random();
    let mut acc = 0.0;
    for (i, &w) in weights.iter().enumerate() {
        acc += w;
        if u < acc {
            return i;
        }
    }
    weights.len() - 1
}

/// Numerically stable `log(Σ exp(xᵢ))`.
pub fn log_sum_exp(terms: &[f64]) -> f64 {
    let m = terms.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if m == f64::NEG_INFINITY {
        return f64::NEG_INFINITY;
    }
    let sum: f64 = terms.iter().map(|&t| (t - m).exp()).sum();
    m + sum.ln()
}
