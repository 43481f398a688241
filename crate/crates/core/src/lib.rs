//! The Shiha lifetime distribution and a model-comparison harness around it.
//!
//! The Shiha law with rate `omega > 0` and weight `eta >= 0` is the
//! three-component mixture
//!
//! ```text
//! f(y) = p1·Exp(ω) + p2·Exp(2ω) + p3·Gamma(2, 2ω),
//! p1 = ω/(ω+3η), p2 = η/(ω+3η), p3 = 2η/(ω+3η)
//! ```
//!
//! which collapses to `Exp(ω)` at `eta = 0`. Its hazard is unimodal
//! (upside-down bathtub) with a peak located through the Lambert W function.
//!
//! Module map:
//!
//! - [`numerics`]: Lambert W, bracketed roots, adaptive quadrature and the
//!   Kolmogorov / Anderson–Darling tail functions.
//! - [`shiha`]: density, cdf, hazard, quantiles, moments, entropy,
//!   stress–strength reliability and two samplers.
//! - [`competitors`]: APTXGD, power Lindley, three-parameter generalized
//!   Lindley, Chris–Jerry and Akash densities behind one [`ModelSpec`] surface.
//! - [`estimation`]: bounded multi-start Nelder–Mead maximum likelihood.
//! - [`gof`]: K-S, A-D, AIC/BIC, TTT, QQ/PP and sample summaries.
//! - [`simulation`]: bias/MSE Monte Carlo studies of the estimator.
//! - [`data`]: the four embedded reference datasets and CSV ingestion.
//! - [`cli`]: the `shiha` command-line front end and table reproduction.
//!
//! ```
//! use shiha::ShihaParams;
//!
//! let p = ShihaParams::new(1.0, 1.0).unwrap();
//! assert!((p.pdf(0.0).unwrap() - 0.75).abs() < 1e-15);
//! let peak = p.hazard_peak().unwrap();
//! assert!(peak.h_max > 1.0 && peak.h_max < 2.0);
//! ```

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod competitors;
pub mod data;
mod error;
pub mod estimation;
pub mod gof;
pub mod numerics;
pub mod rng;
pub mod shiha;
pub mod simulation;

pub use competitors::{Family, ModelSpec};
pub use data::Dataset;
pub use error::{Error, Result};
pub use estimation::{fit_mle, log_likelihood, FitConfig, FitResult};
pub use gof::{GofReport, SummaryStats};
pub use numerics::Tolerance;
pub use shiha::{Descriptors, HazardPeak, MixtureWeights, ShihaParams};
pub use simulation::{run_study, Sampler, SimReport, StudyConfig};
