//! pdf, cdf, survival and hazard on a grid, plus the hazard peak.
//!
//! cargo run --example distribution_functions -- 1.0 1.0

use shiha::ShihaParams;

fn main() -> shiha::Result<()> {
    let args: Vec<f64> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let (omega, eta) = match args.as_slice() {
        [w, e, ..] => (*w, *e),
        _ => (1.0, 1.0),
    };
    let p = ShihaParams::new(omega, eta)?;
    let peak = p.hazard_peak()?;
    println!("Shiha(omega = {omega}, eta = {eta})");
    println!(
        "hazard peak at y* = {:.6}, h_max = {:.6}",
        peak.y_star, peak.h_max
    );
    println!(
        "{:>6} {:>10} {:>10} {:>10} {:>10}",
        "y", "pdf", "cdf", "survival", "hazard"
    );
    for i in 0..=12 {
        let y = i as f64 * 0.5 / omega;
        println!(
            "{y:>6.2} {:>10.6} {:>10.6} {:>10.6} {:>10.6}",
            p.pdf(y)?,
            p.cdf(y)?,
            p.survival(y)?,
            p.hazard(y)?
        );
    }
    Ok(())
}
