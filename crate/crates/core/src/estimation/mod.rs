//! Maximum likelihood fitting for every [`Family`].
//!
//! The search runs Nelder–Mead in log-parameter space; parameters are mapped
//! back with `exp` and clamped to [`Family::param_bounds`]. A cheap scouting
//! pass runs from every start, then the most promising scouts are polished to
//! the final tolerance.

mod nelder_mead;

pub use nelder_mead::{minimize, Minimum, SimplexOptions};

use std::cmp::Ordering;

use serde::Serialize;

use crate::competitors::{Family, LogDensity, ModelSpec};
use crate::error::{Error, Result};
use crate::gof::information_criteria;

/// Relative distance to a bound under which an estimate is flagged as a
/// boundary estimate.
const BOUNDARY_REL: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FitResult {
    pub model: ModelSpec,
    pub log_lik: f64,
    pub aic: f64,
    pub bic: f64,
    pub n: usize,
    pub k: usize,
    pub converged: bool,
    pub at_boundary: Vec<bool>,
}

/// Optimizer settings.
#[derive(Debug, Clone, PartialEq)]
pub struct FitConfig {
    /// Multipliers applied to `1/mean(data)` for the `ω` start.
    pub omega_jitter: Vec<f64>,
    /// Start values for every other parameter.
    pub shape_starts: Vec<f64>,
    pub scout_xtol: f64,
    pub scout_max_evals: usize,
    /// Number of best scouts refined to `xtol`.
    pub polish: usize,
    /// Relative simplex diameter at convergence.
    pub xtol: f64,
    pub max_evals: usize,
}

impl Default for FitConfig {
    fn default() -> Self {
        Self {
            omega_jitter: vec![1.0 / 3.0, 1.0, 3.0],
            shape_starts: vec![0.1, 1.0, 10.0],
            scout_xtol: 1e-3,
            scout_max_evals: 300,
            polish: 2,
            xtol: 1e-8,
            max_evals: 4000,
        }
    }
}

impl FitConfig {
    /// Lighter scouting and a single polish, for the thousands of fits of a
    /// simulation study.
    pub fn study() -> Self {
        Self {
            scout_xtol: 1e-2,
            scout_max_evals: 80,
            polish: 1,
            ..Self::default()
        }
    }

    /// One-parameter families get a wider `ω` grid so that at least eight
    /// starts are always used.
    fn starts(&self, family: Family, data_mean: f64) -> Vec<Vec<f64>> {
        let omega0 = 1.0 / data_mean;
        let k = family.param_count();
        let mut starts: Vec<Vec<f64>> = Vec::new();
        if k == 1 {
            let lo = self
                .omega_jitter
                .iter()
                .cloned()
                .fold(f64::INFINITY, f64::min);
            let hi = self.omega_jitter.iter().cloned().fold(0.0, f64::max);
            let count = 8.max(self.omega_jitter.len());
            for i in 0..count {
                let t = i as f64 / (count - 1) as f64;
                let m = (lo.ln() + t * (hi.ln() - lo.ln())).exp();
                starts.push(vec![omega0 * m]);
            }
            return starts;
        }
        for &m in &self.omega_jitter {
            let mut partial: Vec<Vec<f64>> = vec![vec![omega0 * m]];
            for _ in 1..k {
                partial = partial
                    .into_iter()
                    .flat_map(|p| {
                        self.shape_starts.iter().map(move |&s| {
                            let mut q = p.clone();
                            q.push(s);
                            q
                        })
                    })
                    .collect();
            }
            starts.extend(partial);
        }
        starts
    }
}

fn check_data(data: &[f64]) -> Result<()> {
    if data.is_empty() {
        return Err(Error::Data("empty sample".into()));
    }
    if let Some((i, v)) = data
        .iter()
        .enumerate()
        .find(|(_, &v)| !(v > 0.0) || !v.is_finite())
    {
        return Err(Error::Data(format!(
            "observation {} is not a positive real: {v}",
            i + 1
        )));
    }
    Ok(())
}

fn sum_log_density(family: Family, params: &[f64], data: &[f64]) -> f64 {
    let density = LogDensity::new(family, params);
    let mut total = 0.0;
    for &y in data {
        let v = density.eval(y);
        if !v.is_finite() {
            return f64::NEG_INFINITY;
        }
        total += v;
    }
    total
}

/// `Σ ln f(yᵢ)`. Returns `-∞` when the density underflows at some point.
pub fn log_likelihood(model: &ModelSpec, data: &[f64]) -> Result<f64> {
    check_data(data)?;
    Ok(sum_log_density(model.family(), model.params(), data))
}

struct Candidate {
    params: Vec<f64>,
    log_lik: f64,
    converged: bool,
}

fn near(v: f64, bound: f64) -> bool {
    (v / bound - 1.0).abs() <= BOUNDARY_REL
}

fn snap_to_bounds(params: &[f64], bounds: &[(f64, f64)]) -> Vec<f64> {
    params
        .iter()
        .zip(bounds)
        .map(|(&v, &(lo, hi))| {
            if near(v, lo) {
                lo
            } else if near(v, hi) {
                hi
            } else {
                v
            }
        })
        .collect()
}

/// Larger log-likelihood first, then the lexicographically smaller vector.
fn rank(a: &Candidate, b: &Candidate) -> Ordering {
    b.log_lik.total_cmp(&a.log_lik).then_with(|| {
        a.params
            .iter()
            .zip(&b.params)
            .map(|(x, y)| x.total_cmp(y))
            .find(|o| o.is_ne())
            .unwrap_or(Ordering::Equal)
    })
}

/// Maximum likelihood estimate of `family` on `data`.
pub fn fit_mle(family: Family, data: &[f64], config: &FitConfig) -> Result<FitResult> {
    check_data(data)?;
    let bounds = family.param_bounds();
    let log_bounds: Vec<(f64, f64)> = bounds.iter().map(|&(lo, hi)| (lo.ln(), hi.ln())).collect();
    // exact bounds at the ends of the log box
    let to_params = |x: &[f64]| -> Vec<f64> {
        x.iter()
            .zip(&log_bounds)
            .zip(&bounds)
            .map(|((&v, &(llo, lhi)), &(lo, hi))| {
                if v <= llo {
                    lo
                } else if v >= lhi {
                    hi
                } else {
                    v.exp().clamp(lo, hi)
                }
            })
            .collect()
    };
    // outside the box: value at the nearest face plus a quadratic pull back
    let objective = |x: &[f64]| -> f64 {
        let ll = sum_log_density(family, &to_params(x), data);
        if !ll.is_finite() {
            return f64::INFINITY;
        }
        let excess: f64 = x
            .iter()
            .zip(&log_bounds)
            .map(|(&v, &(lo, hi))| (lo - v).max(0.0).max(v - hi).powi(2))
            .sum();
        -ll + excess
    };

    let mean = data.iter().sum::<f64>() / data.len() as f64;
    let starts = config.starts(family, mean);

    let scout_opts = SimplexOptions {
        step: 0.5,
        xtol: config.scout_xtol,
        max_evals: config.scout_max_evals,
    };
    let mut scouts: Vec<Minimum> = starts
        .iter()
        .map(|s| {
            let x0: Vec<f64> = s
                .iter()
                .zip(&log_bounds)
                .map(|(&v, &(lo, hi))| v.ln().clamp(lo, hi))
                .collect();
            minimize(objective, &x0, scout_opts)
        })
        .collect();
    scouts.sort_by(|a, b| a.fx.total_cmp(&b.fx));

    let mut candidates: Vec<Candidate> = Vec::new();
    for scout in scouts.iter().take(config.polish.max(1)) {
        if !scout.fx.is_finite() {
            continue;
        }
        let mut best = scout.clone();
        let mut converged = false;
        // restart until a fresh simplex no longer improves the value
        for step in [0.05, 0.002, 0.0005] {
            let opts = SimplexOptions {
                step,
                xtol: config.xtol,
                max_evals: config.max_evals,
            };
            let next = minimize(objective, &best.x, opts);
            converged = next.converged;
            let improved = next.fx < best.fx - 1e-12 * (1.0 + best.fx.abs());
            if next.fx <= best.fx {
                best = next;
            }
            if !improved && converged {
                break;
            }
        }
        let params = snap_to_bounds(&to_params(&best.x), &bounds);
        let log_lik = sum_log_density(family, &params, data);
        candidates.push(Candidate {
            params,
            log_lik,
            converged,
        });
    }
    candidates.sort_by(rank);
    let best_scout = scouts.iter().find_map(|scout| {
        let params = to_params(&scout.x);
        let log_lik = sum_log_density(family, &params, data);
        log_lik.is_finite().then_some(Candidate {
            params,
            log_lik,
            converged: false,
        })
    });

    let n = data.len();
    let k = family.param_count();
    // a polished result must not lose to any raw scout
    let best = match (candidates.into_iter().next(), best_scout) {
        (Some(p), Some(s)) if s.log_lik > p.log_lik + 1e-9 * (1.0 + p.log_lik.abs()) => s,
        (Some(p), _) => p,
        (None, Some(s)) => s,
        (None, None) => {
            return Err(Error::NonConvergence {
                family: family.to_string(),
                best: None,
            })
        }
    };
    let at_boundary = best
        .params
        .iter()
        .zip(&bounds)
        .map(|(&v, &(lo, hi))| near(v, lo) || near(v, hi))
        .collect();
    let (aic, bic) = information_criteria(best.log_lik, k, n)?;
    let result = FitResult {
        model: ModelSpec::new(family, best.params)?,
        log_lik: best.log_lik,
        aic,
        bic,
        n,
        k,
        converged: best.converged,
        at_boundary,
    };
    if !result.converged {
        return Err(Error::NonConvergence {
            family: family.to_string(),
            best: Some(Box::new(result)),
        });
    }
    Ok(result)
}
