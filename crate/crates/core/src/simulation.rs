//! Monte Carlo bias/MSE studies of the Shiha maximum likelihood estimator.

use rayon::prelude::*;
use serde::Serialize;

use crate::competitors::Family;
use crate::error::{Error, Result};
use crate::estimation::{fit_mle, FitConfig};
use crate::rng::substream;
use crate::shiha::ShihaParams;

/// Largest tolerated share of non-converged replications.
pub const MAX_FAILURE_RATE: f64 = 0.01;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Sampler {
    Inverse,
    Mixture,
}

#[derive(Debug, Clone, PartialEq)]
pub struct StudyConfig {
    pub true_params: ShihaParams,
    pub sample_sizes: Vec<usize>,
    pub replications: usize,
    pub seed: u64,
    pub sampler: Sampler,
    pub fit: FitConfig,
}

impl StudyConfig {
    pub fn new(
        true_params: ShihaParams,
        sample_sizes: Vec<usize>,
        replications: usize,
        seed: u64,
        sampler: Sampler,
    ) -> Result<Self> {
        if replications == 0 {
            return Err(Error::Domain("replications must be at least 1".into()));
        }
        if sample_sizes.is_empty()
            || sample_sizes[0] == 0
            || sample_sizes.windows(2).any(|w| w[0] >= w[1])
        {
            return Err(Error::Domain(
                "sample sizes must be positive and strictly increasing".into(),
            ));
        }
        Ok(Self {
            true_params,
            sample_sizes,
            replications,
            seed,
            sampler,
            fit: FitConfig::study(),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SimRow {
    pub n: usize,
    pub parameter: &'static str,
    pub true_value: f64,
    pub bias: f64,
    pub mse: f64,
    /// Standard error of the bias estimate.
    pub bias_se: f64,
    /// Standard error of the MSE estimate.
    pub mse_se: f64,
    pub replications: usize,
    pub failures: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SimReport {
    pub omega: f64,
    pub eta: f64,
    pub sampler: Sampler,
    pub seed: u64,
    pub rows: Vec<SimRow>,
}

impl SimReport {
    pub fn row(&self, n: usize, parameter: &str) -> Option<&SimRow> {
        self.rows
            .iter()
            .find(|r| r.n == n && r.parameter == parameter)
    }
}

fn pairwise_sum(xs: &[f64]) -> f64 {
    if xs.len() <= 8 {
        return xs.iter().sum();
    }
    let (a, b) = xs.split_at(xs.len() / 2);
    pairwise_sum(a) + pairwise_sum(b)
}

fn sample(cfg: &StudyConfig, n: usize, i: usize) -> Vec<f64> {
    let mut rng = substream(cfg.seed, &[n as u64, i as u64]);
    match cfg.sampler {
        Sampler::Inverse => cfg.true_params.sample_inverse_with(n, &mut rng),
        Sampler::Mixture => cfg.true_params.sample_mixture_with(n, &mut rng),
    }
}

fn summarize(
    n: usize,
    parameter: &'static str,
    truth: f64,
    estimates: &[f64],
    failures: usize,
) -> SimRow {
    let m = estimates.len() as f64;
    let dev: Vec<f64> = estimates.iter().map(|e| e - truth).collect();
    let sq: Vec<f64> = dev.iter().map(|d| d * d).collect();
    let bias = pairwise_sum(&dev) / m;
    let mse = pairwise_sum(&sq) / m;
    let (bias_se, mse_se) = if estimates.len() > 1 {
        let var_d: Vec<f64> = dev.iter().map(|d| (d - bias).powi(2)).collect();
        let var_s: Vec<f64> = sq.iter().map(|s| (s - mse).powi(2)).collect();
        let k = m - 1.0;
        (
            (pairwise_sum(&var_d) / k / m).sqrt(),
            (pairwise_sum(&var_s) / k / m).sqrt(),
        )
    } else {
        (0.0, 0.0)
    };
    SimRow {
        n,
        parameter,
        true_value: truth,
        bias,
        mse,
        bias_se,
        mse_se,
        replications: estimates.len(),
        failures,
    }
}

/// Runs every replication for every sample size. Replications execute on the
/// current rayon pool; the report does not depend on the number of threads.
pub fn run_study(cfg: &StudyConfig) -> Result<SimReport> {
    let truth = [cfg.true_params.omega(), cfg.true_params.eta()];
    let mut rows = Vec::new();
    for &n in &cfg.sample_sizes {
        let fits: Vec<Option<[f64; 2]>> = (0..cfg.replications)
            .into_par_iter()
            .map(|i| {
                let data = sample(cfg, n, i);
                fit_mle(Family::Shiha, &data, &cfg.fit)
                    .ok()
                    .map(|f| [f.model.params()[0], f.model.params()[1]])
            })
            .collect();
        let ok: Vec<[f64; 2]> = fits.iter().flatten().copied().collect();
        let failures = cfg.replications - ok.len();
        if failures as f64 > MAX_FAILURE_RATE * cfg.replications as f64 || ok.is_empty() {
            return Err(Error::Study(format!(
                "{failures} of {} replications failed at n = {n}",
                cfg.replications
            )));
        }
        for (j, name) in ["omega", "eta"].into_iter().enumerate() {
            let est: Vec<f64> = ok.iter().map(|p| p[j]).collect();
            rows.push(summarize(n, name, truth[j], &est, failures));
        }
    }
    Ok(SimReport {
        omega: truth[0],
        eta: truth[1],
        sampler: cfg.sampler,
        seed: cfg.seed,
        rows,
    })
}
