//! Gaussian-process volatility modeling.
//!
//! The observable is a series of (standardized) log-returns `x_t`. The latent
//! log-variance `v_t = log(sigma_t^2)` evolves through an unknown transition
//! function `f(v_{t-1}, x_{t-1})` carrying a GP prior with a linear mean and a
//! squared-exponential kernel. Marginalizing `f` makes the state chain
//! non-Markovian: every one-step state predictive conditions on the whole
//! realized history, which is what the inference engines here are built
//! around.
//!
//! Two inference engines are provided:
//!
//! * [`smc`] — RAPCF, an online regularized auxiliary particle chain filter
//!   that jointly filters state chains and GP hyperparameters, emitting
//!   one-step predictive log-likelihoods as it assimilates data.
//! * [`pgas`] — particle Gibbs with ancestor sampling, a batch MCMC sampler
//!   targeting the full posterior over hyperparameters and state chains.
//!
//! [`baselines`] implements GARCH(1,1), EGARCH(1,1) and GJR-GARCH(1,1,1)
//! with maximum-likelihood fitting; [`eval`] holds the rolling backtest
//! harness and the rank/significance statistics used to compare methods;
//! [`synthbench`] reproduces the synthetic recovery and timing experiments.

pub mod baselines;
pub mod eval;
pub mod gp;
mod linalg;
pub mod pgas;
pub mod quad;
pub mod series;
pub mod smc;
pub mod synthbench;

pub use gp::{GpHyperParams, GpInput, PredictiveGaussian, ThetaPrior};
pub use series::ReturnSeries;
pub use smc::{PredictionRecord, RapcfConfig};
