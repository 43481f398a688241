//! Goodness-of-fit statistics and plot-ready diagnostics.

use serde::Serialize;

use crate::competitors::ModelSpec;
use crate::error::{Error, Result};
use crate::numerics::{anderson_darling_sf_n, kolmogorov_asymptotic_sf, kolmogorov_sf, Tolerance};

/// Model cdf values are clamped to `[CDF_CLAMP, 1 − CDF_CLAMP]` for A-D.
pub const CDF_CLAMP: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GofReport {
    pub ks_stat: f64,
    pub ks_p: f64,
    pub ad_stat: f64,
    pub ad_p: f64,
    /// At least one cdf value had to be clamped before computing A².
    pub clamped: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SummaryStats {
    pub min: f64,
    pub q1: f64,
    pub median: f64,
    pub q3: f64,
    pub max: f64,
    pub mean: f64,
    pub variance: f64,
    /// `m₃ / m₂^{3/2}`.
    pub skewness: f64,
    /// `m₄ / m₂²`.
    pub kurtosis: f64,
}

impl SummaryStats {
    /// `m₄/m₂² + 3`, the convention used by the reference summary table.
    pub fn table_kurtosis(&self) -> f64 {
        self.kurtosis + 3.0
    }
}

fn sorted(data: &[f64]) -> Result<Vec<f64>> {
    if data.is_empty() {
        return Err(Error::Data("empty sample".into()));
    }
    if data.iter().any(|v| !v.is_finite()) {
        return Err(Error::Data("non-finite observation".into()));
    }
    let mut s = data.to_vec();
    s.sort_by(f64::total_cmp);
    Ok(s)
}

fn model_cdf(m: &ModelSpec, sorted: &[f64]) -> Result<Vec<f64>> {
    sorted.iter().map(|&y| m.cdf(y)).collect()
}

/// K-S distance between the empirical cdf of `sorted` and the values `cdf`.
fn ks_distance(cdf: &[f64]) -> f64 {
    let n = cdf.len() as f64;
    cdf.iter().enumerate().fold(0.0, |d, (i, &f)| {
        let i = i as f64;
        d.max((i + 1.0) / n - f).max(f - i / n)
    })
}

/// One-sample K-S test. Tied samples use the asymptotic p-value.
pub fn ks_test(m: &ModelSpec, data: &[f64]) -> Result<(f64, f64)> {
    let ys = sorted(data)?;
    let d = ks_distance(&model_cdf(m, &ys)?);
    let ties = ys.windows(2).any(|w| w[0] == w[1]);
    let p = if ties {
        kolmogorov_asymptotic_sf(d, ys.len())?
    } else {
        kolmogorov_sf(d, ys.len())?
    };
    Ok((d, p))
}

fn ad_statistic(cdf: &[f64]) -> (f64, bool) {
    let n = cdf.len();
    let mut clamped = false;
    let u: Vec<f64> = cdf
        .iter()
        .map(|&f| {
            let c = f.clamp(CDF_CLAMP, 1.0 - CDF_CLAMP);
            clamped |= c != f;
            c
        })
        .collect();
    let s: f64 = (0..n)
        .map(|i| (2 * i + 1) as f64 * (u[i].ln() + (-u[n - 1 - i]).ln_1p()))
        .sum();
    (-(n as f64) - s / n as f64, clamped)
}

/// Anderson–Darling test with the finite-sample p-value correction.
pub fn ad_test(m: &ModelSpec, data: &[f64]) -> Result<(f64, f64)> {
    let ys = sorted(data)?;
    let (a2, _) = ad_statistic(&model_cdf(m, &ys)?);
    Ok((a2, anderson_darling_sf_n(a2, ys.len())?))
}

/// Both tests at once, including the clamping flag.
pub fn gof_report(m: &ModelSpec, data: &[f64]) -> Result<GofReport> {
    let ys = sorted(data)?;
    let cdf = model_cdf(m, &ys)?;
    let ks_stat = ks_distance(&cdf);
    let ties = ys.windows(2).any(|w| w[0] == w[1]);
    let ks_p = if ties {
        kolmogorov_asymptotic_sf(ks_stat, ys.len())?
    } else {
        kolmogorov_sf(ks_stat, ys.len())?
    };
    let (ad_stat, clamped) = ad_statistic(&cdf);
    let ad_p = anderson_darling_sf_n(ad_stat, ys.len())?;
    Ok(GofReport {
        ks_stat,
        ks_p,
        ad_stat,
        ad_p,
        clamped,
    })
}

/// `(AIC, BIC)`.
pub fn information_criteria(log_lik: f64, k: usize, n: usize) -> Result<(f64, f64)> {
    if k == 0 || n == 0 {
        return Err(Error::Domain("k and n must be positive".into()));
    }
    let k = k as f64;
    Ok((2.0 * k - 2.0 * log_lik, k * (n as f64).ln() - 2.0 * log_lik))
}

/// Scaled total-time-on-test curve, starting at `(0, 0)`.
pub fn ttt_points(data: &[f64]) -> Result<Vec<(f64, f64)>> {
    let ys = sorted(data)?;
    if ys[0] <= 0.0 {
        return Err(Error::Data("TTT requires positive observations".into()));
    }
    let n = ys.len();
    let total: f64 = ys.iter().sum();
    let mut out = Vec::with_capacity(n + 1);
    out.push((0.0, 0.0));
    let mut partial = 0.0;
    for (i, &y) in ys.iter().enumerate() {
        partial += y;
        let rest = (n - i - 1) as f64 * y;
        out.push(((i + 1) as f64 / n as f64, (partial + rest) / total));
    }
    Ok(out)
}

/// Points of the QQ and PP plots.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PlotPoints {
    /// `(model quantile at (i−0.5)/n, y₍ᵢ₎)`; `None` when inversion failed.
    pub qq: Vec<(Option<f64>, f64)>,
    /// `((i−0.5)/n, F(y₍ᵢ₎))`.
    pub pp: Vec<(f64, f64)>,
}

pub fn qq_pp_points(m: &ModelSpec, data: &[f64]) -> Result<PlotPoints> {
    let ys = sorted(data)?;
    let n = ys.len() as f64;
    let tol = Tolerance::default();
    let mut qq = Vec::with_capacity(ys.len());
    let mut pp = Vec::with_capacity(ys.len());
    for (i, &y) in ys.iter().enumerate() {
        let prob = (i as f64 + 0.5) / n;
        qq.push((m.quantile(prob, tol).ok(), y));
        pp.push((prob, m.cdf(y)?));
    }
    Ok(PlotPoints { qq, pp })
}

/// Linear interpolation between order statistics at `h = (n−1)p + 1`.
fn quantile_type7(sorted: &[f64], p: f64) -> f64 {
    let h = (sorted.len() - 1) as f64 * p;
    let lo = h.floor() as usize;
    let hi = (lo + 1).min(sorted.len() - 1);
    sorted[lo] + (h - lo as f64) * (sorted[hi] - sorted[lo])
}

pub fn summary_stats(data: &[f64]) -> Result<SummaryStats> {
    let ys = sorted(data)?;
    if ys.len() < 2 {
        return Err(Error::Data(
            "variance needs at least two observations".into(),
        ));
    }
    let n = ys.len() as f64;
    let mean = ys.iter().sum::<f64>() / n;
    let central = |k: i32| ys.iter().map(|y| (y - mean).powi(k)).sum::<f64>() / n;
    let (m2, m3, m4) = (central(2), central(3), central(4));
    Ok(SummaryStats {
        min: ys[0],
        q1: quantile_type7(&ys, 0.25),
        median: quantile_type7(&ys, 0.5),
        q3: quantile_type7(&ys, 0.75),
        max: ys[ys.len() - 1],
        mean,
        variance: m2 * n / (n - 1.0),
        skewness: m3 / m2.powf(1.5),
        kurtosis: m4 / (m2 * m2),
    })
}
