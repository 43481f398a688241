//! Raw moments, shape descriptors, MGF and Shannon entropy.

use shiha::{ShihaParams, Tolerance};

fn main() -> shiha::Result<()> {
    for (w, e) in [(0.5, 0.2), (1.0, 1.0), (2.0, 5.0)] {
        let p = ShihaParams::new(w, e)?;
        let d = p.descriptors();
        let raw: Vec<String> = (1..=4).map(|k| format!("{:.4}", p.raw_moment(k))).collect();
        println!("omega = {w}, eta = {e}");
        println!("  raw moments      {}", raw.join(", "));
        println!(
            "  mean {:.4}  variance {:.4}  skewness {:.4}  kurtosis {:.4}",
            d.mean, d.variance, d.skewness, d.kurtosis
        );
        println!("  M(omega/2)       {:.6}", p.mgf(0.5 * w)?);
        println!("  entropy          {:.6}", p.entropy(Tolerance::default())?);
    }
    Ok(())
}
