//! Fit all six families to a dataset and rank them by AIC.
//!
//! cargo run --example fit_dataset -- karachi_precipitation
//! cargo run --example fit_dataset -- path/to/data.csv

use shiha::data::resolve;
use shiha::gof::gof_report;
use shiha::{fit_mle, Error, Family, FitConfig};

fn main() -> shiha::Result<()> {
    let reference = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "failure_times".into());
    let ds = resolve(&reference, None)?;
    println!("{} (n = {}): {}", ds.name, ds.values.len(), ds.source);

    let mut rows = Vec::new();
    for family in Family::ALL {
        let fit = match fit_mle(family, &ds.values, &FitConfig::default()) {
            Ok(f) => f,
            Err(Error::NonConvergence {
                best: Some(best), ..
            }) => *best,
            Err(e) => {
                println!("{family}: {e}");
                continue;
            }
        };
        let gof = gof_report(&fit.model, &ds.values)?;
        rows.push((fit, gof));
    }
    rows.sort_by(|a, b| a.0.aic.total_cmp(&b.0.aic));

    println!(
        "{:<7} {:>10} {:>10} {:>15} {:>15}  estimates",
        "model", "AIC", "BIC", "A-D (p)", "K-S (p)"
    );
    for (fit, gof) in rows {
        let est: Vec<String> = fit
            .model
            .family()
            .param_names()
            .iter()
            .zip(fit.model.params())
            .zip(&fit.at_boundary)
            .map(|((n, v), b)| format!("{n}={v:.4}{}", if *b { "*" } else { "" }))
            .collect();
        println!(
            "{:<7} {:>10.4} {:>10.4} {:>7.4} ({:.4}) {:>7.4} ({:.4})  {}",
            fit.model.family(),
            fit.aic,
            fit.bic,
            gof.ad_stat,
            gof.ad_p,
            gof.ks_stat,
            gof.ks_p,
            est.join(", ")
        );
    }
    println!("* estimate on a parameter bound");
    Ok(())
}
