//! Summary statistics and the scaled TTT curve of the builtin datasets.

use shiha::data::{builtin_dataset, BUILTIN_NAMES};
use shiha::gof::{summary_stats, ttt_points};

fn main() -> shiha::Result<()> {
    for name in BUILTIN_NAMES {
        let ds = builtin_dataset(name)?;
        let s = summary_stats(&ds.values)?;
        println!(
            "{name}: min {} q1 {:.3} median {:.3} q3 {:.3} max {} mean {:.3} var {:.3} skew {:.3} kurt {:.3}",
            s.min,
            s.q1,
            s.median,
            s.q3,
            s.max,
            s.mean,
            s.variance,
            s.skewness,
            s.table_kurtosis()
        );
        let ttt = ttt_points(&ds.values)?;
        // concave above the diagonal suggests an increasing hazard
        let above = ttt.iter().filter(|(u, t)| t > u).count();
        println!("  TTT points above the diagonal: {above}/{}", ttt.len() - 1);
    }
    Ok(())
}
