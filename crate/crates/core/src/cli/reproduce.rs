//! Regenerates the published tables and compares them with stored values.

use serde::Serialize;

use super::reference::{
    FitRow, FIT_TABLES, TABLE1, TABLE1_PARAMS, TABLE2, TABLE2_ETAS, TABLE3, TABLE3_ETAS, TABLE4,
    TABLE5,
};
use crate::competitors::Family;
use crate::data::builtin_dataset;
use crate::error::{Error, Result};
use crate::estimation::{fit_mle, FitConfig, FitResult};
use crate::gof::{gof_report, summary_stats};
use crate::numerics::Tolerance;
use crate::shiha::ShihaParams;
use crate::simulation::{run_study, Sampler, SimReport, StudyConfig};

/// One comparison against a stored value.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub label: String,
    pub expected: f64,
    pub actual: f64,
    /// Absolute tolerance; `None` for ordering checks, which pass when
    /// `actual < expected`.
    pub tolerance: Option<f64>,
    /// Advisory checks are reported but do not decide the outcome.
    pub binding: bool,
    pub pass: bool,
}

impl Check {
    pub fn within(label: impl Into<String>, expected: f64, actual: f64, tolerance: f64) -> Self {
        let pass = (actual - expected).abs() <= tolerance;
        Self {
            label: label.into(),
            expected,
            actual,
            tolerance: Some(tolerance),
            binding: true,
            pass,
        }
    }

    pub fn below(label: impl Into<String>, bound: f64, actual: f64) -> Self {
        Self {
            label: label.into(),
            expected: bound,
            actual,
            tolerance: None,
            binding: true,
            pass: actual < bound,
        }
    }

    pub fn advisory(mut self) -> Self {
        self.binding = false;
        self
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Reproduction {
    pub table: u8,
    pub title: &'static str,
    pub checks: Vec<Check>,
    pub notes: Vec<String>,
}

impl Reproduction {
    /// Every binding check passed.
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass || !c.binding)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.binding && !c.pass)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ReproduceOptions {
    /// Replications per cell of the simulation table.
    pub replications: usize,
    pub seed: u64,
}

impl Default for ReproduceOptions {
    fn default() -> Self {
        Self {
            replications: 2000,
            seed: 2025,
        }
    }
}

pub const TABLE_COUNT: u8 = 9;

pub fn reproduce_table(table: u8, opts: &ReproduceOptions) -> Result<Reproduction> {
    match table {
        1 => table1(),
        2 => table2(),
        3 => table3(),
        4 => table4(opts),
        5 => table5(),
        6..=9 => fit_table(table),
        other => Err(Error::Domain(format!(
            "no table {other}; expected 1 to {TABLE_COUNT}"
        ))),
    }
}

fn params(w: f64, e: f64) -> Result<ShihaParams> {
    ShihaParams::new(w, e)
}

fn table1() -> Result<Reproduction> {
    let tol = Tolerance::new(1e-12, 1e-12, 200)?;
    let mut checks = Vec::new();
    for &(prob, row) in &TABLE1 {
        for (&(w, e), &expected) in TABLE1_PARAMS.iter().zip(&row) {
            let q = params(w, e)?.quantile(prob, tol)?;
            checks.push(Check::within(
                format!("Q({prob}; {w}, {e})"),
                expected,
                q,
                5e-4,
            ));
        }
    }
    Ok(Reproduction {
        table: 1,
        title: "quantiles",
        checks,
        notes: vec![],
    })
}

fn table2() -> Result<Reproduction> {
    let mut checks = Vec::new();
    for &(w, cols) in &TABLE2 {
        for (&e, moments) in TABLE2_ETAS.iter().zip(&cols) {
            let p = params(w, e)?;
            for (k, &expected) in moments.iter().enumerate() {
                let k = k as u32 + 1;
                checks.push(Check::within(
                    format!("mu{k}({w}, {e})"),
                    expected,
                    p.raw_moment(k),
                    5e-3,
                ));
            }
        }
    }
    Ok(Reproduction {
        table: 2,
        title: "first four raw moments",
        checks,
        notes: vec![],
    })
}

fn table3() -> Result<Reproduction> {
    let mut checks = Vec::new();
    for &(w, cols) in &TABLE3 {
        for (&e, cell) in TABLE3_ETAS.iter().zip(&cols) {
            let d = params(w, e)?.descriptors();
            let got = [d.variance, d.skewness, d.kurtosis];
            for ((name, &expected), actual) in ["variance", "skewness", "kurtosis"]
                .iter()
                .zip(cell)
                .zip(got)
            {
                checks.push(Check::within(
                    format!("{name}({w}, {e})"),
                    expected,
                    actual,
                    5e-3,
                ));
            }
        }
    }
    for &e in &TABLE3_ETAS {
        let d = params(1e6, e)?.descriptors();
        checks.push(Check::within(
            format!("skewness(1e6, {e}) limit"),
            2.0,
            d.skewness,
            1e-3,
        ));
        checks.push(Check::within(
            format!("kurtosis(1e6, {e}) limit"),
            9.0,
            d.kurtosis,
            1e-2,
        ));
    }
    Ok(Reproduction {
        table: 3,
        title: "variance, skewness and kurtosis",
        checks,
        notes: vec![],
    })
}

/// Blocks whose bias/MSE values are compared; the others only need the
/// decreasing-MSE pattern.
const TABLE4_MATCHED: [(f64, f64); 2] = [(0.5, 0.5), (1.0, 1.0)];

/// Runs one block of the simulation table.
pub fn simulation_block(w: f64, e: f64, opts: &ReproduceOptions) -> Result<SimReport> {
    let sizes = TABLE4[0].1.iter().map(|r| r[0] as usize).collect();
    run_study(&StudyConfig::new(
        params(w, e)?,
        sizes,
        opts.replications,
        opts.seed,
        Sampler::Mixture,
    )?)
}

fn table4(opts: &ReproduceOptions) -> Result<Reproduction> {
    let mut checks = Vec::new();
    for &((w, e), rows) in &TABLE4 {
        let report = simulation_block(w, e, opts)?;
        let matched = TABLE4_MATCHED.contains(&(w, e));
        let cell = |n: usize, p: &str| report.row(n, p).expect("row for every size");
        if matched {
            for r in &rows {
                let n = r[0] as usize;
                for (j, p) in ["omega", "eta"].into_iter().enumerate() {
                    let c = cell(n, p);
                    let tag = format!("({w}, {e}) n={n}");
                    checks.push(Check::within(
                        format!("bias {p} {tag}"),
                        r[1 + j],
                        c.bias,
                        3.0 * c.bias_se,
                    ));
                    checks.push(Check::within(
                        format!("mse {p} {tag}"),
                        r[3 + j],
                        c.mse,
                        3.0 * c.mse_se,
                    ));
                }
            }
        }
        for p in ["omega", "eta"] {
            checks.push(Check::below(
                format!("mse {p} ({w}, {e}) n=600 below n=30"),
                cell(30, p).mse,
                cell(600, p).mse,
            ));
        }
    }
    let notes = vec![
        format!(
            "{} replications per cell, mixture sampler, seed {}",
            opts.replications, opts.seed
        ),
        "tolerances are three Monte Carlo standard errors of the regenerated value".into(),
        "the (1, 1) block's last row is printed as n = 400 and compared at n = 600".into(),
    ];
    Ok(Reproduction {
        table: 4,
        title: "bias and MSE of the estimators",
        checks,
        notes,
    })
}

fn table5() -> Result<Reproduction> {
    let names = [
        "min", "q1", "median", "q3", "max", "mean", "variance", "skewness", "kurtosis",
    ];
    let mut checks = Vec::new();
    for &(name, expected) in &TABLE5 {
        let s = summary_stats(&builtin_dataset(name)?.values)?;
        let got = [
            s.min,
            s.q1,
            s.median,
            s.q3,
            s.max,
            s.mean,
            s.variance,
            s.skewness,
            s.table_kurtosis(),
        ];
        for (i, (&e, a)) in expected.iter().zip(got).enumerate() {
            let c = Check::within(format!("{} {name}", names[i]), e, a, 0.01);
            checks.push(if i >= 7 { c.advisory() } else { c });
        }
    }
    let notes = vec!["kurtosis is reported as m4/m2^2 + 3; skewness as m3/m2^1.5".into()];
    Ok(Reproduction {
        table: 5,
        title: "summary statistics",
        checks,
        notes,
    })
}

/// Half a unit in the last printed digit; zero for values printed in
/// scientific notation, which mark parameter bounds.
fn printed_half_ulp(text: &str) -> f64 {
    if text.contains('e') {
        return 0.0;
    }
    let decimals = text.split_once('.').map_or(0, |(_, d)| d.len());
    0.5 * 10f64.powi(-(decimals as i32))
}

/// Stored estimates in this crate's parameter order. The TPGLD rows print
/// the weight and power parameters under each other's names.
fn stored_estimates(row: &FitRow) -> Vec<&'static str> {
    let mut e = row.estimates.to_vec();
    if row.family == Family::Tpgld {
        e.swap(1, 2);
    }
    e
}

/// Fits every family of a comparison table, keeping boundary or unconverged
/// best effort results.
pub fn fit_family(family: Family, data: &[f64]) -> Result<FitResult> {
    match fit_mle(family, data, &FitConfig::default()) {
        Err(Error::NonConvergence {
            best: Some(best), ..
        }) => Ok(*best),
        other => other,
    }
}

fn fit_table(table: u8) -> Result<Reproduction> {
    let (dataset, rows) = &FIT_TABLES[usize::from(table - 6)];
    let data = builtin_dataset(dataset)?.values;
    let mut checks = Vec::new();
    let mut notes = Vec::new();
    let mut aics = Vec::new();
    for row in rows {
        let fit = fit_family(row.family, &data)?;
        let gof = gof_report(&fit.model, &data)?;
        let fam = row.family.name();
        for ((text, &actual), pname) in stored_estimates(row)
            .iter()
            .zip(fit.model.params())
            .zip(row.family.param_names())
        {
            let expected: f64 = text.parse().expect("stored estimate parses");
            let tol = (1e-3 * expected.abs()).max(printed_half_ulp(text));
            let c = Check::within(format!("{fam} {pname}"), expected, actual, tol);
            checks.push(if row.family == Family::Shiha {
                c
            } else {
                c.advisory()
            });
        }
        checks.push(Check::within(format!("{fam} AIC"), row.aic, fit.aic, 0.05));
        checks.push(Check::within(format!("{fam} BIC"), row.bic, fit.bic, 0.05));
        checks.push(Check::within(
            format!("{fam} A-D"),
            row.ad,
            gof.ad_stat,
            0.05,
        ));
        checks.push(Check::within(
            format!("{fam} A-D p"),
            row.ad_p,
            gof.ad_p,
            0.03,
        ));
        checks.push(Check::within(
            format!("{fam} K-S"),
            row.ks,
            gof.ks_stat,
            1e-3,
        ));
        checks.push(Check::within(
            format!("{fam} K-S p"),
            row.ks_p,
            gof.ks_p,
            0.02,
        ));
        if fit.at_boundary.iter().any(|&b| b) {
            notes.push(format!(
                "{fam}: estimate on a parameter bound {:?}",
                fit.model.params()
            ));
        }
        if !fit.converged {
            notes.push(format!(
                "{fam}: optimizer did not meet the convergence tolerance"
            ));
        }
        aics.push((row.family, fit.aic));
    }
    let shiha_aic = aics
        .iter()
        .find(|(f, _)| *f == Family::Shiha)
        .map(|a| a.1)
        .unwrap_or(f64::INFINITY);
    let best_other = aics
        .iter()
        .filter(|(f, _)| *f != Family::Shiha)
        .map(|a| a.1)
        .fold(f64::INFINITY, f64::min);
    checks.push(Check::below(
        "SHIHA ranks first by AIC",
        best_other,
        shiha_aic,
    ));
    Ok(Reproduction {
        table,
        title: "parameter estimates and goodness of fit",
        checks,
        notes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn half_ulp() {
        assert_eq!(printed_half_ulp("0.0152"), 0.5e-4);
        assert_eq!(printed_half_ulp("1000"), 0.5);
        assert_eq!(printed_half_ulp("1e-04"), 0.0);
    }

    #[test]
    fn closed_form_tables_pass() {
        for t in [1, 2, 3, 5] {
            let r = reproduce_table(t, &ReproduceOptions::default()).unwrap();
            assert!(
                r.passed(),
                "table {t}: {:?}",
                r.failures().collect::<Vec<_>>()
            );
        }
    }

    #[test]
    fn unknown_table() {
        assert!(reproduce_table(0, &ReproduceOptions::default()).is_err());
        assert!(reproduce_table(10, &ReproduceOptions::default()).is_err());
    }
}
