//! Read a CSV column, then fit the Shiha law to it.
//!
//! cargo run --example load_csv -- data.csv time

use shiha::data::load_csv;
use shiha::{fit_mle, Family, FitConfig, ShihaParams};

fn main() -> shiha::Result<()> {
    let mut args = std::env::args().skip(1);
    let path = match args.next() {
        Some(p) => std::path::PathBuf::from(p),
        None => {
            // no file given: write a synthetic one
            let p = std::env::temp_dir().join("shiha_example.csv");
            let draws = ShihaParams::new(0.8, 2.0)?.sample_mixture(300, 5);
            let body: String = draws.iter().map(|v| format!("{v}\n")).collect();
            std::fs::write(&p, format!("time\n{body}")).map_err(|source| shiha::Error::Io {
                path: p.clone(),
                source,
            })?;
            p
        }
    };
    let column = args.next();
    let ds = load_csv(&path, column.as_deref())?;
    println!("read {} values from {}", ds.values.len(), ds.source);
    let fit = fit_mle(Family::Shiha, &ds.values, &FitConfig::default())?;
    println!(
        "omega = {:.4}, eta = {:.4}, log-likelihood = {:.4}",
        fit.model.params()[0],
        fit.model.params()[1],
        fit.log_lik
    );
    Ok(())
}
