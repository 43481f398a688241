//! The `shiha` command-line front end.
//!
//! Every command writes one [`output::Envelope`] (JSON by default) or a CSV
//! table. Exit codes: `0` success, `1` numerical or runtime failure, `2`
//! usage error.

pub mod output;
pub mod reference;
pub mod reproduce;

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::competitors::{Family, ModelSpec};
use crate::data::resolve;
use crate::error::Error;
use crate::gof::{gof_report, qq_pp_points, summary_stats, ttt_points};
use crate::numerics::Tolerance;
use crate::shiha::{stress_strength, ShihaParams};
use crate::simulation::{run_study, Sampler, StudyConfig};
use output::{Cell, Envelope, Precision, Table};
use reproduce::{fit_family, reproduce_table, ReproduceOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Environment variable holding the default worker count.
pub const THREADS_ENV: &str = "SHIHA_THREADS";

#[derive(Debug, Parser)]
#[command(name = "shiha", version, about = "Shiha lifetime distribution toolkit")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalOpts {
    #[arg(long, value_enum, default_value = "json", global = true)]
    pub format: Format,
    /// Write to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Print numbers with full round-trip precision instead of six decimals.
    #[arg(long, global = true)]
    pub full_precision: bool,
    /// Worker threads for simulations and multi-start fits.
    #[arg(long, env = THREADS_ENV, global = true)]
    pub threads: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// pdf, cdf, survival or hazard at points or on a grid.
    Eval(EvalArgs),
    /// Fit families to a dataset and rank them by AIC.
    Fit(FitArgs),
    /// Quantiles by inversion of the cdf.
    Quantiles(QuantileArgs),
    /// Raw moments, descriptors and optional MGF values.
    Moments(MomentArgs),
    /// Shannon entropy by quadrature.
    Entropy(ShihaArgs),
    /// Stress–strength reliability P(strength > stress).
    Reliability(ReliabilityArgs),
    /// Seeded random variates.
    Sample(SampleArgs),
    /// Monte Carlo bias/MSE study of the estimator.
    Simulate(SimulateArgs),
    /// Scaled total-time-on-test curve of a dataset.
    Ttt(DataArgs),
    /// QQ/PP coordinates and goodness of fit of a fitted family.
    Diag(DiagArgs),
    /// Regenerate a reference table and compare it with the stored values.
    Reproduce(ReproduceArgs),
}

#[derive(Debug, Args, Serialize)]
pub struct ShihaArgs {
    #[arg(long)]
    pub omega: f64,
    #[arg(long)]
    pub eta: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum What {
    Pdf,
    Cdf,
    Survival,
    Hazard,
}

#[derive(Debug, Args, Serialize)]
pub struct EvalArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub params: ShihaArgs,
    #[arg(long, value_enum, default_value = "pdf")]
    pub what: What,
    /// Comma-separated evaluation points.
    #[arg(
        long,
        value_delimiter = ',',
        allow_hyphen_values = true,
        conflicts_with = "grid",
        required_unless_present = "grid"
    )]
    pub at: Vec<f64>,
    /// `a:b:k`, k equally spaced points from a to b.
    #[arg(long)]
    pub grid: Option<String>,
}

#[derive(Debug, Args, Serialize)]
pub struct DataArgs {
    /// Builtin dataset name or CSV path.
    #[arg(long)]
    pub data: String,
    /// CSV column name.
    #[arg(long)]
    pub column: Option<String>,
}

#[derive(Debug, Args, Serialize)]
pub struct FitArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub data: DataArgs,
    /// `all` or a comma-separated list of families.
    #[arg(long, default_value = "all")]
    pub families: String,
}

#[derive(Debug, Args, Serialize)]
pub struct QuantileArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub params: ShihaArgs,
    #[arg(long, value_delimiter = ',', required = true)]
    pub probs: Vec<f64>,
}

#[derive(Debug, Args, Serialize)]
pub struct MomentArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub params: ShihaArgs,
    /// Highest raw moment order.
    #[arg(long, default_value_t = 4)]
    pub orders: u32,
    /// Comma-separated MGF arguments.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub mgf_at: Vec<f64>,
}

#[derive(Debug, Args, Serialize)]
pub struct ReliabilityArgs {
    /// `omega,eta` of the strength.
    #[arg(long, value_delimiter = ',', num_args = 2, required = true)]
    pub strength: Vec<f64>,
    /// `omega,eta` of the stress.
    #[arg(long, value_delimiter = ',', num_args = 2, required = true)]
    pub stress: Vec<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SamplerArg {
    Inverse,
    Mixture,
}

impl From<SamplerArg> for Sampler {
    fn from(s: SamplerArg) -> Self {
        match s {
            SamplerArg::Inverse => Sampler::Inverse,
            SamplerArg::Mixture => Sampler::Mixture,
        }
    }
}

#[derive(Debug, Args, Serialize)]
pub struct SampleArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub params: ShihaArgs,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub seed: u64,
    #[arg(long, value_enum, default_value = "inverse")]
    pub sampler: SamplerArg,
}

#[derive(Debug, Args, Serialize)]
pub struct SimulateArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub params: ShihaArgs,
    #[arg(long, value_delimiter = ',', default_value = "30,50,100,200,300,600")]
    pub sizes: Vec<usize>,
    #[arg(long, default_value_t = 2000)]
    pub replications: usize,
    /// Use 10000 replications.
    #[arg(long, conflicts_with = "replications")]
    pub full: bool,
    #[arg(long, default_value_t = 2025)]
    pub seed: u64,
    #[arg(long, value_enum, default_value = "mixture")]
    pub sampler: SamplerArg,
}

#[derive(Debug, Args, Serialize)]
pub struct DiagArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub data: DataArgs,
    #[arg(long, default_value = "shiha")]
    pub family: String,
}

#[derive(Debug, Args, Serialize)]
pub struct ReproduceArgs {
    /// Table number, 1 to 9.
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=9))]
    pub table: u8,
    /// Replications for table 4.
    #[arg(long, default_value_t = 2000)]
    pub replications: usize,
    /// Use 10000 replications for table 4.
    #[arg(long, conflicts_with = "replications")]
    pub full: bool,
    #[arg(long, default_value_t = 2025)]
    pub seed: u64,
}

/// Failure of a command, split by exit code.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Runtime(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Runtime(e)
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

/// What a command produced.
pub struct Output {
    pub envelope: Envelope,
    pub table: Table,
    /// Exit with [`EXIT_FAILURE`] after writing the output.
    pub failed: bool,
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn shiha_params(a: &ShihaArgs) -> CliResult<ShihaParams> {
    ShihaParams::new(a.omega, a.eta).map_err(|e| usage(e.to_string()))
}

fn parse_grid(spec: &str) -> CliResult<Vec<f64>> {
    let bad = || {
        usage(format!(
            "grid `{spec}` must be a:b:k with 0 <= a < b and k >= 2"
        ))
    };
    let parts: Vec<&str> = spec.split(':').collect();
    let [a, b, k] = parts.as_slice() else {
        return Err(bad());
    };
    let a: f64 = a.trim().parse().map_err(|_| bad())?;
    let b: f64 = b.trim().parse().map_err(|_| bad())?;
    let k: usize = k.trim().parse().map_err(|_| bad())?;
    if !(0.0 <= a && a < b && b.is_finite()) || k < 2 {
        return Err(bad());
    }
    Ok((0..k)
        .map(|i| a + (b - a) * i as f64 / (k - 1) as f64)
        .collect())
}

fn parse_families(list: &str) -> CliResult<Vec<Family>> {
    if list.trim().eq_ignore_ascii_case("all") {
        return Ok(Family::ALL.to_vec());
    }
    let mut out: Vec<Family> = Vec::new();
    for name in list.split(',') {
        let f: Family = name
            .trim()
            .parse()
            .map_err(|e: Error| usage(e.to_string()))?;
        if !out.contains(&f) {
            out.push(f);
        }
    }
    Ok(out)
}

fn load(args: &DataArgs) -> CliResult<crate::data::Dataset> {
    resolve(&args.data, args.column.as_deref()).map_err(|e| match e {
        Error::UnknownDataset(_) => usage(e.to_string()),
        other => CliError::Runtime(other),
    })
}

fn params_object(family: Family, params: &[f64]) -> Value {
    let mut m = serde_json::Map::new();
    for (name, v) in family.param_names().iter().zip(params) {
        m.insert((*name).to_string(), json!(v));
    }
    Value::Object(m)
}

fn cmd_eval(a: &EvalArgs) -> CliResult<Output> {
    let p = shiha_params(&a.params)?;
    let ys = match &a.grid {
        Some(g) => parse_grid(g)?,
        None => a.at.clone(),
    };
    if let Some(y) = ys.iter().find(|y| !(**y >= 0.0 && y.is_finite())) {
        return Err(usage(format!(
            "evaluation point {y} must be a finite nonnegative number"
        )));
    }
    let mut table = Table::new(&["y", "value"]);
    let mut points = Vec::new();
    for &y in &ys {
        let v = match a.what {
            What::Pdf => p.pdf(y),
            What::Cdf => p.cdf(y),
            What::Survival => p.survival(y),
            What::Hazard => p.hazard(y),
        }?;
        table.push(vec![y.into(), v.into()]);
        points.push(json!({"y": y, "value": v}));
    }
    Ok(Output {
        envelope: Envelope::new("eval", a, json!({ "points": points })),
        table,
        failed: false,
    })
}

fn cmd_fit(a: &FitArgs) -> CliResult<Output> {
    let families = parse_families(&a.families)?;
    let ds = load(&a.data)?;
    let mut ok = Vec::new();
    let mut failed = Vec::new();
    for f in families {
        match fit_family(f, &ds.values)
            .and_then(|fit| Ok((gof_report(&fit.model, &ds.values)?, fit)))
        {
            Ok((gof, fit)) => ok.push((f, fit, gof)),
            Err(e) => failed.push((f, e.to_string())),
        }
    }
    ok.sort_by(|x, y| x.1.aic.total_cmp(&y.1.aic));
    let mut table = Table::new(&[
        "rank",
        "family",
        "estimates",
        "log_lik",
        "aic",
        "bic",
        "ad",
        "ad_p",
        "ks",
        "ks_p",
        "converged",
        "error",
    ]);
    let mut rows = Vec::new();
    for (i, (f, fit, gof)) in ok.iter().enumerate() {
        let est = fit
            .model
            .params()
            .iter()
            .zip(f.param_names())
            .map(|(v, n)| format!("{n}={}", Precision::Full.float(*v)))
            .collect::<Vec<_>>()
            .join(";");
        table.push(vec![
            (i + 1).into(),
            f.name().into(),
            est.into(),
            fit.log_lik.into(),
            fit.aic.into(),
            fit.bic.into(),
            gof.ad_stat.into(),
            gof.ad_p.into(),
            gof.ks_stat.into(),
            gof.ks_p.into(),
            fit.converged.into(),
            Cell::Empty,
        ]);
        rows.push(json!({
            "rank": i + 1,
            "family": f.name(),
            "estimates": params_object(*f, fit.model.params()),
            "at_boundary": fit.at_boundary,
            "log_lik": fit.log_lik,
            "aic": fit.aic,
            "bic": fit.bic,
            "ad": gof.ad_stat,
            "ad_p": gof.ad_p,
            "ks": gof.ks_stat,
            "ks_p": gof.ks_p,
            "converged": fit.converged,
            "cdf_clamped": gof.clamped,
        }));
    }
    for (f, e) in &failed {
        table.push(vec![
            Cell::Empty,
            f.name().into(),
            Cell::Empty,
            Cell::Empty,
            Cell::Empty,
            Cell::Empty,
            Cell::Empty,
            Cell::Empty,
            Cell::Empty,
            Cell::Empty,
            false.into(),
            e.clone().into(),
        ]);
        rows.push(json!({ "family": f.name(), "error": e }));
    }
    let results = json!({ "dataset": ds.name, "n": ds.values.len(), "rows": rows });
    Ok(Output {
        envelope: Envelope::new("fit", a, results),
        table,
        failed: ok.is_empty(),
    })
}

fn cmd_quantiles(a: &QuantileArgs) -> CliResult<Output> {
    let p = shiha_params(&a.params)?;
    if let Some(u) = a.probs.iter().find(|u| !(**u > 0.0 && **u < 1.0)) {
        return Err(usage(format!("probability {u} must lie in (0, 1)")));
    }
    let tol = Tolerance::new(1e-12, 1e-12, 200)?;
    let mut table = Table::new(&["prob", "quantile"]);
    let mut rows = Vec::new();
    for &u in &a.probs {
        let q = p.quantile(u, tol)?;
        table.push(vec![u.into(), q.into()]);
        rows.push(json!({"prob": u, "quantile": q}));
    }
    Ok(Output {
        envelope: Envelope::new("quantiles", a, json!({ "quantiles": rows })),
        table,
        failed: false,
    })
}

fn cmd_moments(a: &MomentArgs) -> CliResult<Output> {
    let p = shiha_params(&a.params)?;
    if a.orders == 0 {
        return Err(usage("--orders must be at least 1"));
    }
    let mut table = Table::new(&["quantity", "value"]);
    let mut raw = Vec::new();
    for k in 1..=a.orders {
        let m = p.raw_moment(k);
        table.push(vec![format!("mu{k}").into(), m.into()]);
        raw.push(json!({"order": k, "value": m}));
    }
    let d = p.descriptors();
    for (name, v) in [
        ("mean", d.mean),
        ("variance", d.variance),
        ("skewness", d.skewness),
        ("kurtosis", d.kurtosis),
        ("excess_kurtosis", d.excess_kurtosis),
    ] {
        table.push(vec![name.into(), v.into()]);
    }
    let mut mgf = Vec::new();
    for &t in &a.mgf_at {
        let v = p.mgf(t).map_err(|e| usage(e.to_string()))?;
        table.push(vec![format!("mgf({t})").into(), v.into()]);
        mgf.push(json!({"t": t, "value": v}));
    }
    let results = json!({ "raw_moments": raw, "descriptors": d, "mgf": mgf });
    Ok(Output {
        envelope: Envelope::new("moments", a, results),
        table,
        failed: false,
    })
}

fn cmd_entropy(a: &ShihaArgs) -> CliResult<Output> {
    let p = shiha_params(a)?;
    let h = p.entropy(Tolerance::new(1e-12, 1e-12, 500)?)?;
    let mut table = Table::new(&["entropy"]);
    table.push(vec![h.into()]);
    Ok(Output {
        envelope: Envelope::new("entropy", a, json!({ "entropy": h })),
        table,
        failed: false,
    })
}

fn cmd_reliability(a: &ReliabilityArgs) -> CliResult<Output> {
    let pair = |v: &[f64]| ShihaParams::new(v[0], v[1]).map_err(|e| usage(e.to_string()));
    let r = stress_strength(&pair(&a.strength)?, &pair(&a.stress)?);
    let mut table = Table::new(&["reliability"]);
    table.push(vec![r.into()]);
    Ok(Output {
        envelope: Envelope::new("reliability", a, json!({ "reliability": r })),
        table,
        failed: false,
    })
}

fn cmd_sample(a: &SampleArgs) -> CliResult<Output> {
    let p = shiha_params(&a.params)?;
    let values = match a.sampler {
        SamplerArg::Inverse => p.sample_inverse(a.n, a.seed),
        SamplerArg::Mixture => p.sample_mixture(a.n, a.seed),
    };
    let mut table = Table::new(&["value"]);
    for &v in &values {
        table.push(vec![v.into()]);
    }
    Ok(Output {
        envelope: Envelope::new("sample", a, json!({ "values": values })),
        table,
        failed: false,
    })
}

fn cmd_simulate(a: &SimulateArgs) -> CliResult<Output> {
    let p = shiha_params(&a.params)?;
    let reps = if a.full { 10_000 } else { a.replications };
    let cfg = StudyConfig::new(p, a.sizes.clone(), reps, a.seed, a.sampler.into())
        .map_err(|e| usage(e.to_string()))?;
    let report = run_study(&cfg)?;
    let mut table = Table::new(&[
        "n",
        "parameter",
        "true_value",
        "bias",
        "mse",
        "bias_se",
        "mse_se",
        "replications",
        "failures",
    ]);
    for r in &report.rows {
        table.push(vec![
            r.n.into(),
            r.parameter.into(),
            r.true_value.into(),
            r.bias.into(),
            r.mse.into(),
            r.bias_se.into(),
            r.mse_se.into(),
            r.replications.into(),
            r.failures.into(),
        ]);
    }
    let results = serde_json::to_value(&report).expect("report serializes");
    Ok(Output {
        envelope: Envelope::new("simulate", a, results),
        table,
        failed: false,
    })
}

fn cmd_ttt(a: &DataArgs) -> CliResult<Output> {
    let ds = load(a)?;
    let pts = ttt_points(&ds.values)?;
    let summary = summary_stats(&ds.values)?;
    let mut table = Table::new(&["u", "ttt"]);
    for &(u, t) in &pts {
        table.push(vec![u.into(), t.into()]);
    }
    let points: Vec<Value> = pts.iter().map(|(u, t)| json!({"u": u, "ttt": t})).collect();
    let results = json!({
        "dataset": ds.name,
        "summary": summary,
        "table_kurtosis": summary.table_kurtosis(),
        "points": points,
    });
    Ok(Output {
        envelope: Envelope::new("ttt", a, results),
        table,
        failed: false,
    })
}

fn cmd_diag(a: &DiagArgs) -> CliResult<Output> {
    let family: Family = a.family.parse().map_err(|e: Error| usage(e.to_string()))?;
    let ds = load(&a.data)?;
    let fit = fit_family(family, &ds.values)?;
    let model: &ModelSpec = &fit.model;
    let gof = gof_report(model, &ds.values)?;
    let pts = qq_pp_points(model, &ds.values)?;
    let mut table = Table::new(&[
        "i",
        "theoretical_quantile",
        "observed",
        "plotting_prob",
        "model_cdf",
    ]);
    let mut qq = Vec::new();
    let mut pp = Vec::new();
    for (i, ((tq, y), (u, f))) in pts.qq.iter().zip(&pts.pp).enumerate() {
        table.push(vec![
            (i + 1).into(),
            (*tq).into(),
            (*y).into(),
            (*u).into(),
            (*f).into(),
        ]);
        qq.push(json!({"theoretical": tq, "observed": y}));
        pp.push(json!({"empirical": u, "model": f}));
    }
    let results = json!({
        "dataset": ds.name,
        "family": family.name(),
        "estimates": params_object(family, model.params()),
        "log_lik": fit.log_lik,
        "gof": gof,
        "qq": qq,
        "pp": pp,
    });
    Ok(Output {
        envelope: Envelope::new("diag", a, results),
        table,
        failed: false,
    })
}

fn cmd_reproduce(a: &ReproduceArgs) -> CliResult<Output> {
    let opts = ReproduceOptions {
        replications: if a.full { 10_000 } else { a.replications },
        seed: a.seed,
    };
    let rep = reproduce_table(a.table, &opts)?;
    let mut table = Table::new(&[
        "label",
        "expected",
        "actual",
        "tolerance",
        "binding",
        "pass",
    ]);
    for c in &rep.checks {
        table.push(vec![
            c.label.clone().into(),
            c.expected.into(),
            c.actual.into(),
            c.tolerance.into(),
            c.binding.into(),
            c.pass.into(),
        ]);
    }
    let total = rep.checks.iter().filter(|c| c.binding).count();
    let failures = rep.failures().count();
    let results = json!({
        "table": rep.table,
        "title": rep.title,
        "passed": rep.passed(),
        "binding_checks": total,
        "binding_failures": failures,
        "notes": rep.notes,
        "checks": rep.checks,
    });
    Ok(Output {
        envelope: Envelope::new("reproduce", a, results),
        table,
        failed: !rep.passed(),
    })
}

fn dispatch(cmd: &Command) -> CliResult<Output> {
    match cmd {
        Command::Eval(a) => cmd_eval(a),
        Command::Fit(a) => cmd_fit(a),
        Command::Quantiles(a) => cmd_quantiles(a),
        Command::Moments(a) => cmd_moments(a),
        Command::Entropy(a) => cmd_entropy(a),
        Command::Reliability(a) => cmd_reliability(a),
        Command::Sample(a) => cmd_sample(a),
        Command::Simulate(a) => cmd_simulate(a),
        Command::Ttt(a) => cmd_ttt(a),
        Command::Diag(a) => cmd_diag(a),
        Command::Reproduce(a) => cmd_reproduce(a),
    }
}

/// Parses `args` (including the program name), runs the command and returns
/// the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK {
                stdout.write_all(text.as_bytes())
            } else {
                stderr.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let g = &cli.global;
    if g.threads == Some(0) {
        let _ = writeln!(stderr, "error: --threads must be at least 1");
        return EXIT_USAGE;
    }
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(g.threads.unwrap_or(0))
        .build()
    {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return EXIT_FAILURE;
        }
    };
    let result = pool.install(|| dispatch(&cli.command));
    let out = match result {
        Ok(out) => out,
        Err(CliError::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            return EXIT_USAGE;
        }
        Err(CliError::Runtime(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            return EXIT_FAILURE;
        }
    };
    let precision = if g.full_precision {
        Precision::Full
    } else {
        Precision::Fixed6
    };
    let text = match g.format {
        Format::Json => out.envelope.to_json(precision),
        Format::Csv => out.table.to_csv(precision),
    };
    let written = match &g.out {
        Some(path) => {
            std::fs::write(path, text.as_bytes()).map_err(|e| format!("{}: {e}", path.display()))
        }
        None => stdout.write_all(text.as_bytes()).map_err(|e| e.to_string()),
    };
    if let Err(msg) = written {
        let _ = writeln!(stderr, "error: {msg}");
        return EXIT_FAILURE;
    }
    if out.failed {
        let _ = writeln!(stderr, "error: {} reported failures", out.envelope.command);
        return EXIT_FAILURE;
    }
    EXIT_OK
}
