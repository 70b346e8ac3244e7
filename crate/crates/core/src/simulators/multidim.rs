//! Five-dimensional benchmark: independent latent draws pushed through a
//! fixed invertible projection.
//!
//! Latent vector `z`:
//!
//! ```text
//! z0 ~ N(α, 1)
//! z1 ~ N(β, 3)              (σ = 3 read as a standard deviation)
//! z2 ~ ½·N(−2, 1) + ½·N(2, 0.5)
//! z3 ~ Exponential(rate 3)  (mean 1/3)
//! z4 ~ Exponential(rate 0.5)
//! ```
//!
//! Observed `x = R·z` for a fixed 5×5 matrix `R`. The default `R` is a
//! checked-in symmetric perturbation of the identity (|det R| ≈ 0.86),
//! stored under `data/projection_5d.csv`; any invertible matrix can be
//! supplied instead. The exact log density is
//! `log p_z(R⁻¹x) − log |det R|` and exists because `R` is invertible.

use nalgebra::DMatrix;

use crate::error::{Error, Result};
use crate::params::ParamPoint;
use crate::seeding::rng_from_seed;
use crate::simulators::distributions::{Exponential, Gaussian, GaussianMixture};
use crate::simulators::{GenerativeModel, SampleSet};

/// Embedded default projection matrix, row-major CSV.
const DEFAULT_PROJECTION_CSV: &str = include_str!("../../data/projection_5d.csv");

/// Minimum |det R| accepted at construction.
const MIN_ABS_DET: f64 = 1e-6;

/// The 5-dimensional benchmark model with parameters `(α, β)`.
#[derive(Debug, Clone)]
pub struct MultidimModel {
    projection: DMatrix<f64>,
    inverse: DMatrix<f64>,
    log_abs_det: f64,
    z2: GaussianMixture,
    z3: Exponential,
    z4: Exponential,
}

impl MultidimModel {
    /// Build the model with an explicit projection matrix. Rejects
    /// non-invertible matrices.
    pub fn new(projection: [[f64; 5]; 5]) -> Result<Self> {
        let r = DMatrix::from_fn(5, 5, |i, j| projection[i][j]);
        let det = r.determinant();
        if !det.is_finite() || det.abs() < MIN_ABS_DET {
            return Err(Error::InvalidParameter(format!(
                "projection matrix must be invertible, |det| = {}",
                det.abs()
            )));
        }
        let inverse = r
            .clone()
            .try_inverse()
            .ok_or_else(|| Error::Numeric("projection matrix inversion failed".into()))?;
        Ok(MultidimModel {
            projection: r,
            inverse,
            log_abs_det: det.abs().ln(),
            z2: GaussianMixture::new(
                vec![
                    Gaussian { mean: -2.0, sd: 1.0 },
                    Gaussian { mean: 2.0, sd: 0.5 },
                ],
                vec![0.5, 0.5],
            )?,
            z3: Exponential::new(3.0)?,
            z4: Exponential::new(0.5)?,
        })
    }

    /// Build the model with the checked-in default projection.
    pub fn with_default_projection() -> Result<Self> {
        Self::new(parse_projection_csv(DEFAULT_PROJECTION_CSV)?)
    }

    /// Build the model with the identity projection (latents observed
    /// directly); mainly for tests.
    pub fn with_identity_projection() -> Result<Self> {
        let mut m = [[0.0; 5]; 5];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 1.0;
        }
        Self::new(m)
    }

    pub fn projection(&self) -> [[f64; 5]; 5] {
        let mut out = [[0.0; 5]; 5];
        for i in 0..5 {
            for j in 0..5 {
                out[i][j] = self.projection[(i, j)];
            }
        }
        out
    }

    /// Draw `n` samples at `(alpha, beta)`.
    pub fn sample_multidim(&self, alpha: f64, beta: f64, n: usize, seed: u64) -> Result<SampleSet> {
        validate_alpha_beta(alpha, beta)?;
        if n == 0 {
            return Err(Error::InvalidParameter("need n ≥ 1 samples".into()));
        }
        let g0 = Gaussian { mean: alpha, sd: 1.0 };
        let g1 = Gaussian { mean: beta, sd: 3.0 };
        let mut rng = rng_from_seed(seed);
        let mut data = Vec::with_capacity(n * 5);
        for _ in 0..n {
            let z = [
                g0.sample(&mut rng),
                g1.sample(&mut rng),
                self.z2.sample(&mut rng),
                self.z3.sample(&mut rng),
                self.z4.sample(&mut rng),
            ];
            for i in 0..5 {
                let mut acc = 0.0;
                for (j, zj) in z.iter().enumerate() {
                    acc += self.projection[(i, j)] * zj;
                }
                data.push(acc);
            }
        }
        SampleSet::new(data, n, 5, ParamPoint::new(vec![alpha, beta]), seed)
    }

    /// Exact log density `log p_z(R⁻¹x) − log|det R|`. Returns `−∞`
    /// outside the support of the exponential latents.
    pub fn exact_log_density_multidim(&self, x: &[f64; 5], alpha: f64, beta: f64) -> Result<f64> {
        validate_alpha_beta(alpha, beta)?;
        let mut z = [0.0; 5];
        for (i, zi) in z.iter_mut().enumerate() {
            let mut acc = 0.0;
            for (j, xj) in x.iter().enumerate() {
                acc += self.inverse[(i, j)] * xj;
            }
            *zi = acc;
        }
        let g0 = Gaussian { mean: alpha, sd: 1.0 };
        let g1 = Gaussian { mean: beta, sd: 3.0 };
        let log_pz = g0.log_density(z[0])
            + g1.log_density(z[1])
            + self.z2.log_density(z[2])
            + self.z3.log_density(z[3])
            + self.z4.log_density(z[4]);
        Ok(log_pz - self.log_abs_det)
    }
}

fn validate_alpha_beta(alpha: f64, beta: f64) -> Result<()> {
    if !alpha.is_finite() || !beta.is_finite() {
        return Err(Error::InvalidParameter(format!(
            "(alpha, beta) must be finite, got ({alpha}, {beta})"
        )));
    }
    Ok(())
}

/// Parse a 5×5 row-major CSV matrix.
pub fn parse_projection_csv(text: &str) -> Result<[[f64; 5]; 5]> {
    let mut out = [[0.0; 5]; 5];
    let rows: Vec<&str> = text.lines().filter(|l| !l.trim().is_empty()).collect();
    if rows.len() != 5 {
        return Err(Error::Format(format!(
            "projection matrix needs 5 rows, got {}",
            rows.len()
        )));
    }
    for (i, line) in rows.iter().enumerate() {
        let cells: Vec<&str> = line.split(',').collect();
        if cells.len() != 5 {
            return Err(Error::Format(format!(
                "projection matrix row {i} needs 5 columns, got {}",
                cells.len()
            )));
        }
        for (j, cell) in cells.iter().enumerate() {
            out[i][j] = cell.trim().parse::<f64>().map_err(|e| {
                Error::Format(format!("projection matrix entry ({i},{j}): {e}"))
            })?;
        }
    }
    Ok(out)
}

impl GenerativeModel for MultidimModel {
    fn name(&self) -> &'static str {
        "multidim"
    }

    fn feature_dim(&self) -> usize {
        5
    }

    fn param_dim(&self) -> usize {
        2
    }

    fn validate_params(&self, theta: &ParamPoint) -> Result<()> {
        let v = theta.values();
        if v.len() != 2 {
            return Err(Error::DimensionMismatch {
                what: "parameter point",
                expected: 2,
                got: v.len(),
            });
        }
        validate_alpha_beta(v[0], v[1])
    }

    fn sample(&self, theta: &ParamPoint, n: usize, seed: u64) -> Result<SampleSet> {
        self.validate_params(theta)?;
        let v = theta.values();
        self.sample_multidim(v[0], v[1], n, seed)
    }

    fn exact_log_density(&self, x: &[f64], theta: &ParamPoint) -> Option<Result<f64>> {
        if x.len() != 5 {
            return Some(Err(Error::DimensionMismatch {
                what: "feature vector",
                expected: 5,
                got: x.len(),
            }));
        }
        if let Err(e) = self.validate_params(theta) {
            return Some(Err(e));
        }
        let v = theta.values();
        let xa = [x[0], x[1], x[2], x[3], x[4]];
        Some(self.exact_log_density_multidim(&xa, v[0], v[1]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_projection_is_invertible() {
        let m = MultidimModel::with_default_projection().unwrap();
        assert!(m.log_abs_det.is_finite());
        assert!(m.log_abs_det.exp() >= 0.1);
    }

    #[test]
    fn singular_projection_rejected_at_construction() {
        let m = [[0.0; 5]; 5];
        assert!(MultidimModel::new(m).is_err());
        // Rank-deficient: two identical rows.
        let mut r = [[0.0; 5]; 5];
        for (i, row) in r.iter_mut().enumerate() {
            row[i] = 1.0;
        }
        r[4] = r[3];
        assert!(MultidimModel::new(r).is_err());
    }

    #[test]
    fn identity_projection_moments() {
        // Column 0 mean 0 (α = 0); column 3 mean 1/3 under the rate
        // convention for Exponential(3).
        let m = MultidimModel::with_identity_projection().unwrap();
        let s = m.sample_multidim(0.0, 0.0, 1_000_000, 21).unwrap();
        let n = s.n_rows() as f64;
        let mean0: f64 = s.column(0).iter().sum::<f64>() / n;
        let mean3: f64 = s.column(3).iter().sum::<f64>() / n;
        assert!(mean0.abs() < 0.01, "mean0 = {mean0}");
        assert!((mean3 - 1.0 / 3.0).abs() < 0.01, "mean3 = {mean3}");
    }

    #[test]
    fn nominal_dataset_shape() {
        let m = MultidimModel::with_default_projection().unwrap();
        let s = m.sample_multidim(1.0, -1.0, 500, 5).unwrap();
        assert_eq!(s.n_rows(), 500);
        assert_eq!(s.n_cols(), 5);
    }

    #[test]
    fn same_seed_is_bit_identical() {
        let m = MultidimModel::with_default_projection().unwrap();
        let a = m.sample_multidim(1.0, -1.0, 200, 123).unwrap();
        let b = m.sample_multidim(1.0, -1.0, 200, 123).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn exponential_support_violation_gives_neg_infinity() {
        let m = MultidimModel::with_identity_projection().unwrap();
        let x = [0.0, 0.0, 0.0, -0.5, 1.0];
        let ld = m.exact_log_density_multidim(&x, 0.0, 0.0).unwrap();
        assert_eq!(ld, f64::NEG_INFINITY);
    }

    #[test]
    fn identity_projection_density_is_sum_of_latents() {
        let m = MultidimModel::with_identity_projection().unwrap();
        let g0 = Gaussian { mean: 0.3, sd: 1.0 };
        let g1 = Gaussian { mean: -0.7, sd: 3.0 };
        let mut rng = rng_from_seed(3);
        for _ in 0..100 {
            let z: Vec<f64> = (0..3)
                .map(|_| rand::Rng::random_range(&mut rng, -4.0..4.0))
                .chain((0..2).map(|_| rand::Rng::random_range(&mut rng, 0.0..3.0)))
                .collect();
            let expect = g0.log_density(z[0])
                + g1.log_density(z[1])
                + m.z2.log_density(z[2])
                + m.z3.log_density(z[3])
                + m.z4.log_density(z[4]);
            let xa = [z[0], z[1], z[2], z[3], z[4]];
            let got = m.exact_log_density_multidim(&xa, 0.3, -0.7).unwrap();
            assert!((got - expect).abs() < 1e-12);
        }
    }

    #[test]
    fn ratio_at_reference_points_matches_latent_formula() {
        // x = R·(1, −1, 0, 0.5, 1): the ratio between (α,β) = (1,−1) and
        // (0,0) only involves the two Gaussian latents.
        let m = MultidimModel::with_default_projection().unwrap();
        let z = [1.0, -1.0, 0.0, 0.5, 1.0];
        let r = m.projection();
        let mut x = [0.0; 5];
        for i in 0..5 {
            for j in 0..5 {
                x[i] += r[i][j] * z[j];
            }
        }
        let num = m.exact_log_density_multidim(&x, 1.0, -1.0).unwrap();
        let den = m.exact_log_density_multidim(&x, 0.0, 0.0).unwrap();

        let ga1 = Gaussian { mean: 1.0, sd: 1.0 };
        let ga0 = Gaussian { mean: 0.0, sd: 1.0 };
        let gb1 = Gaussian { mean: -1.0, sd: 3.0 };
        let gb0 = Gaussian { mean: 0.0, sd: 3.0 };
        let expect = ga1.log_density(z[0]) - ga0.log_density(z[0]) + gb1.log_density(z[1])
            - gb0.log_density(z[1]);
        assert!(
            ((num - den) - expect).abs() < 1e-9,
            "got {}, expect {expect}",
            num - den
        );
    }
}
