//! The two seeded samplers: cdf inversion and the three-component mixture.

use shiha::gof::summary_stats;
use shiha::ShihaParams;

fn main() -> shiha::Result<()> {
    let p = ShihaParams::new(1.0, 1.5)?;
    let n = 50_000;
    let inverse = p.sample_inverse(n, 42);
    let mixture = p.sample_mixture(n, 42);
    println!(
        "theoretical mean {:.4}, variance {:.4}",
        p.descriptors().mean,
        p.descriptors().variance
    );
    for (name, xs) in [("inverse", &inverse), ("mixture", &mixture)] {
        let s = summary_stats(xs)?;
        println!(
            "{name:>8}: mean {:.4}, variance {:.4}, median {:.4}",
            s.mean, s.variance, s.median
        );
    }
    println!("first draws (inverse): {:?}", &inverse[..3]);
    Ok(())
}
