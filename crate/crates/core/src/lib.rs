//! Likelihood-free inference with calibrated classifiers.
//!
//! The library approximates density ratios `p(x|θ0) / p(x|θ1)` for
//! simulator-defined models by training parameterized probabilistic
//! classifiers, calibrating their scores with univariate density
//! estimation, and driving maximum-likelihood estimation, confidence
//! intervals and self-diagnostics through the calibrated ratios.
//!
//! Pipeline, bottom to top:
//!
//! * [`simulators`] — benchmark generative models with seeded sampling and
//!   exact log-density oracles used for testing and "exact" baselines.
//! * [`classifier`] — training-set construction and a small feed-forward
//!   probabilistic classifier `s(x; θ0, θ1)` trained from scratch.
//! * [`calibration`] — univariate density estimates of classifier scores
//!   (histogram, KDE) and isotonic score-calibration maps.
//! * [`ratio`] — composed per-observation ratio estimators, including the
//!   pairwise mixture decomposition.
//! * [`inference`] — dataset-level likelihood-ratio curves, grid and
//!   Bayesian-optimization MLEs, ensemble studies.
//! * [`diagnostics`] — reference-point independence sweeps and the
//!   reweighted-discrimination ROC test.

pub mod calibration;
pub mod classifier;
pub mod diagnostics;
pub mod error;
pub mod inference;
pub mod params;
pub mod ratio;
pub mod seeding;
pub mod simulators;

pub use error::{Error, Result};
pub use params::ParamPoint;
