//! K-S and A-D tests plus QQ/PP coordinates for a fitted model.

use shiha::data::builtin_dataset;
use shiha::gof::{ad_test, ks_test, qq_pp_points};
use shiha::{fit_mle, Family, FitConfig};

fn main() -> shiha::Result<()> {
    let ds = builtin_dataset("electronic_components")?;
    let fit = fit_mle(Family::Pld, &ds.values, &FitConfig::default())?;
    let (d, d_p) = ks_test(&fit.model, &ds.values)?;
    let (a2, a2_p) = ad_test(&fit.model, &ds.values)?;
    println!("PLD fit {:?}", fit.model.params());
    println!("K-S D = {d:.4} (p = {d_p:.4}), A-D A2 = {a2:.4} (p = {a2_p:.4})");

    let pts = qq_pp_points(&fit.model, &ds.values)?;
    println!(
        "{:>12} {:>10} {:>10} {:>10}",
        "model q", "observed", "plot p", "F(y)"
    );
    for ((q, y), (u, f)) in pts.qq.iter().zip(&pts.pp) {
        println!(
            "{:>12.4} {y:>10.4} {u:>10.4} {f:>10.4}",
            q.unwrap_or(f64::NAN)
        );
    }
    Ok(())
}
