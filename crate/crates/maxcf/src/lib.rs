//! Numerical library for max-characteristic functions of nonnegative,
//! integrable random vectors.
//!
//! The max-characteristic function of a nonnegative random vector `Z` is
//! `phi(x) = E max(1, x_1 Z_1, ..., x_d Z_d)` on the nonnegative orthant;
//! it determines the distribution of `Z`. The crate provides:
//!
//! - [`models`]: a catalog of random-vector models (D-norm generators and
//!   example distributions) with reproducible samplers and closed forms,
//! - [`dnorm`]: D-norm evaluation `E max_i |x_i| Z_i`, exact where possible
//!   and Monte Carlo otherwise,
//! - [`maxcf`]: max-CF evaluation (closed form, Monte Carlo, tail
//!   integral), the Bernoulli-thinning transform calculus and its limit,
//! - [`inversion`]: recovery of the distribution function from a max-CF by
//!   one-sided differentiation, plus diagnostics for candidate functions,
//! - [`transport`]: Wasserstein-1 distances with L1 ground cost (exact 1-d
//!   formula, exact discrete solver, interval bounds),
//! - [`experiments`]: scripted convergence, counterexample, risk-identity
//!   and non-closedness experiments emitting serializable reports.
//!
//! Every stochastic operation takes an explicit seed and is deterministic
//! for a fixed seed, independent of thread count.

pub mod deriv;
pub mod dnorm;
pub mod error;
pub mod estimate;
pub mod experiments;
pub mod inversion;
pub mod maxcf;
pub mod models;
pub mod quad;
pub mod rng;
pub mod special;
pub mod transport;

pub use error::{Error, Result};
pub use estimate::EstimateWithCi;
pub use models::{EmpiricalSample, GpdParams, ModelKind, RandomVectorModel};
