//! A small bias/MSE study of the maximum likelihood estimator.

use shiha::{run_study, Sampler, ShihaParams, StudyConfig};

fn main() -> shiha::Result<()> {
    let cfg = StudyConfig::new(
        ShihaParams::new(1.0, 1.5)?,
        vec![30, 100, 300],
        100,
        7,
        Sampler::Mixture,
    )?;
    let report = run_study(&cfg)?;
    println!(
        "{:>5} {:>6} {:>10} {:>12} {:>9}",
        "n", "param", "bias", "MSE", "failures"
    );
    for r in &report.rows {
        println!(
            "{:>5} {:>6} {:>10.4} {:>12.4} {:>9}",
            r.n, r.parameter, r.bias, r.mse, r.failures
        );
    }
    Ok(())
}
