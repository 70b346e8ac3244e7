//! One-dimensional three-component Gaussian mixture benchmark.
//!
//! The density is
//!
//! ```text
//! p(x|γ) = (1−γ)·(p₀(x) + p₁(x))/2 + γ·p₂(x)
//! ```
//!
//! with components `N(−2, 0.25²)`, `N(0, 2²)` and `N(1, 0.5²)`. Only the
//! mixing weights move with `γ`, which makes the model the reference case
//! for the pairwise ratio decomposition.

use crate::error::{Error, Result};
use crate::params::ParamPoint;
use crate::seeding::{self, rng_from_seed};
use crate::simulators::distributions::{log_sum_exp, sample_categorical, Gaussian};
use crate::simulators::{GenerativeModel, MixtureModel, SampleSet};

/// The benchmark mixture over ℝ with parameter `γ ∈ [0, 1]`.
#[derive(Debug, Clone)]
pub struct UnivariateMixtureModel {
    components: [Gaussian; 3],
}

impl Default for UnivariateMixtureModel {
    fn default() -> Self {
        Self::new()
    }
}

impl UnivariateMixtureModel {
    pub fn new() -> Self {
        UnivariateMixtureModel {
            components: [
                Gaussian { mean: -2.0, sd: 0.25 },
                Gaussian { mean: 0.0, sd: 2.0 },
                Gaussian { mean: 1.0, sd: 0.5 },
            ],
        }
    }

    pub fn components(&self) -> &[Gaussian; 3] {
        &self.components
    }

    /// Mixing weights `((1−γ)/2, (1−γ)/2, γ)`.
    pub fn weights(gamma: f64) -> Result<[f64; 3]> {
        validate_gamma(gamma)?;
        Ok([(1.0 - gamma) / 2.0, (1.0 - gamma) / 2.0, gamma])
    }

    /// Draw `n` i.i.d. samples at mixing coefficient `gamma`.
    pub fn sample_univariate(&self, gamma: f64, n: usize, seed: u64) -> Result<SampleSet> {
        let weights = Self::weights(gamma)?;
        if n == 0 {
            return Err(Error::InvalidParameter("need n ≥ 1 samples".into()));
        }
        let mut rng = rng_from_seed(seed);
        let mut data = Vec::with_capacity(n);
        for _ in 0..n {
            let c = sample_categorical(&weights, &mut rng);
            data.push(self.components[c].sample(&mut rng));
        }
        SampleSet::new(data, n, 1, ParamPoint::scalar(gamma), seed)
    }

    /// Closed-form log density; the test oracle for the 1D experiments.
    pub fn exact_log_density_univariate(&self, x: f64, gamma: f64) -> Result<f64> {
        let weights = Self::weights(gamma)?;
        let terms: Vec<f64> = self
            .components
            .iter()
            .zip(weights.iter())
            .filter(|(_, &w)| w > 0.0)
            .map(|(c, &w)| w.ln() + c.log_density(x))
            .collect();
        Ok(log_sum_exp(&terms))
    }
}

fn validate_gamma(gamma: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&gamma) || !gamma.is_finite() {
        return Err(Error::InvalidParameter(format!(
            "gamma must lie in [0, 1], got {gamma}"
        )));
    }
    Ok(())
}

impl GenerativeModel for UnivariateMixtureModel {
    fn name(&self) -> &'static str {
        "univariate_mixture"
    }

    fn feature_dim(&self) -> usize {
        1
    }

    fn param_dim(&self) -> usize {
        1
    }

    fn validate_params(&self, theta: &ParamPoint) -> Result<()> {
        validate_gamma(theta.as_scalar()?)
    }

    fn sample(&self, theta: &ParamPoint, n: usize, seed: u64) -> Result<SampleSet> {
        self.sample_univariate(theta.as_scalar()?, n, seed)
    }

    fn exact_log_density(&self, x: &[f64], theta: &ParamPoint) -> Option<Result<f64>> {
        if x.len() != 1 {
            return Some(Err(Error::DimensionMismatch {
                what: "feature vector",
                expected: 1,
                got: x.len(),
            }));
        }
        let gamma = match theta.as_scalar() {
            Ok(g) => g,
            Err(e) => return Some(Err(e)),
        };
        Some(self.exact_log_density_univariate(x[0], gamma))
    }
}

impl MixtureModel for UnivariateMixtureModel {
    fn n_components(&self) -> usize {
        3
    }

    fn mixture_weights(&self, theta: &ParamPoint) -> Result<Vec<f64>> {
        Ok(Self::weights(theta.as_scalar()?)?.to_vec())
    }

    fn sample_component(&self, c: usize, n: usize, seed: u64) -> Result<SampleSet> {
        if c >= 3 {
            return Err(Error::InvalidParameter(format!(
                "component index {c} out of range for 3 components"
            )));
        }
        if n == 0 {
            return Err(Error::InvalidParameter("need n ≥ 1 samples".into()));
        }
        // Component samples are tagged with the degenerate weight vector
        // selecting that component; γ is not meaningful here.
        let sub = seeding::derive_seed(seed, seeding::tags::SIMULATE, c as u64);
        let mut rng = rng_from_seed(sub);
        let data: Vec<f64> = (0..n).map(|_| self.components[c].sample(&mut rng)).collect();
        SampleSet::new(data, n, 1, ParamPoint::scalar(f64::from(c as u8)), seed)
    }

    fn component_log_density(&self, c: usize, x: &[f64]) -> Option<Result<f64>> {
        if c >= 3 {
            return Some(Err(Error::InvalidParameter(format!(
                "component index {c} out of range for 3 components"
            ))));
        }
        if x.len() != 1 {
            return Some(Err(Error::DimensionMismatch {
                what: "feature vector",
                expected: 1,
                got: x.len(),
            }));
        }
        Some(Ok(self.components[c].log_density(x[0])))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mean_and_std(values: &[f64]) -> (f64, f64) {
        let n = values.len() as f64;
        let mean = values.iter().sum::<f64>() / n;
        let var = values.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / (n - 1.0);
        (mean, var.sqrt())
    }

    #[test]
    fn rejects_gamma_outside_unit_interval() {
        let m = UnivariateMixtureModel::new();
        assert!(m.sample_univariate(-0.01, 10, 0).is_err());
        assert!(m.sample_univariate(1.01, 10, 0).is_err());
        assert!(m.exact_log_density_univariate(0.0, 2.0).is_err());
    }

    #[test]
    fn weights_sum_to_one_for_random_gammas() {
        let mut rng = rng_from_seed(5);
        for _ in 0..1000 {
            let g: f64 = rand::Rng::random(&mut rng);
            let w = UnivariateMixtureModel::weights(g).unwrap();
            assert!((w.iter().sum::<f64>() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn empirical_mean_at_gamma_zero() {
        // ½·(−2) + ½·0 = −1.
        let m = UnivariateMixtureModel::new();
        let s = m.sample_univariate(0.0, 1_000_000, 31).unwrap();
        let (mean, _) = mean_and_std(&s.column(0));
        assert!((mean - (-1.0)).abs() < 0.01, "mean = {mean}");
    }

    #[test]
    fn empirical_moments_at_gamma_one() {
        // Single component N(1, 0.5²).
        let m = UnivariateMixtureModel::new();
        let s = m.sample_univariate(1.0, 1_000_000, 32).unwrap();
        let (mean, sd) = mean_and_std(&s.column(0));
        assert!((mean - 1.0).abs() < 0.01, "mean = {mean}");
        assert!((sd - 0.5).abs() < 0.01, "sd = {sd}");
    }

    #[test]
    fn empirical_mean_at_gamma_nominal() {
        // Mixture mean: ½·0.95·(−2) + 0.05·1 = −0.90.
        let m = UnivariateMixtureModel::new();
        let s = m.sample_univariate(0.05, 1_000_000, 33).unwrap();
        let (mean, _) = mean_and_std(&s.column(0));
        assert!((mean - (-0.90)).abs() < 0.01, "mean = {mean}");
    }

    #[test]
    fn sampling_is_pure_in_seed() {
        let m = UnivariateMixtureModel::new();
        let a = m.sample_univariate(0.3, 1000, 99).unwrap();
        let b = m.sample_univariate(0.3, 1000, 99).unwrap();
        assert_eq!(a, b);
        let c = m.sample_univariate(0.3, 1000, 100).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn identical_gammas_give_unit_ratio() {
        let m = UnivariateMixtureModel::new();
        for &x in &[-3.0, -2.0, 0.0, 1.5, 7.0] {
            let a = m.exact_log_density_univariate(x, 0.0).unwrap();
            let b = m.exact_log_density_univariate(x, 0.0).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn log_density_matches_direct_formula_at_peak() {
        // x = −2, γ = 0: log(½·pdf_N(−2;−2,0.25²) + ½·pdf_N(−2;0,2²)).
        let m = UnivariateMixtureModel::new();
        let g0 = Gaussian { mean: -2.0, sd: 0.25 };
        let g1 = Gaussian { mean: 0.0, sd: 2.0 };
        let expect = (0.5 * g0.log_density(-2.0).exp() + 0.5 * g1.log_density(-2.0).exp()).ln();
        let got = m.exact_log_density_univariate(-2.0, 0.0).unwrap();
        assert!((got - expect).abs() < 1e-12, "got {got}, expect {expect}");
    }

    #[test]
    fn component_sampling_matches_component_moments() {
        let m = UnivariateMixtureModel::new();
        let s = m.sample_component(2, 200_000, 17).unwrap();
        let (mean, sd) = mean_and_std(&s.column(0));
        assert!((mean - 1.0).abs() < 0.01);
        assert!((sd - 0.5).abs() < 0.01);
        assert!(m.sample_component(3, 10, 0).is_err());
    }
}
