//! Quantiles by bracketed inversion of the cdf.

use shiha::{ShihaParams, Tolerance};

fn main() -> shiha::Result<()> {
    let tol = Tolerance::new(1e-12, 1e-12, 200)?;
    let probs = [0.01, 0.05, 0.1, 0.25, 0.5, 0.75, 0.9, 0.95, 0.99];
    let columns = [(0.4, 0.2), (0.4, 3.0), (1.2, 0.2), (1.2, 3.0)];
    print!("{:>6}", "p");
    for (w, e) in columns {
        print!("  ({w:.1}, {e:.1})");
    }
    println!();
    for u in probs {
        print!("{u:>6.2}");
        for (w, e) in columns {
            print!("  {:>10.4}", ShihaParams::new(w, e)?.quantile(u, tol)?);
        }
        println!();
    }
    Ok(())
}
