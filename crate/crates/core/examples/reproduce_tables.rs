//! Regenerate the reference tables and report how many stored values match.
//!
//! The simulation table (4) is run with a reduced replication count here.

use shiha::cli::reproduce::{reproduce_table, ReproduceOptions, TABLE_COUNT};

fn main() -> shiha::Result<()> {
    let opts = ReproduceOptions {
        replications: 50,
        ..ReproduceOptions::default()
    };
    for t in 1..=TABLE_COUNT {
        let r = reproduce_table(t, &opts)?;
        let binding = r.checks.iter().filter(|c| c.binding).count();
        let failing: Vec<&str> = r.failures().map(|c| c.label.as_str()).collect();
        println!(
            "table {t} ({}): {}/{binding} match",
            r.title,
            binding - failing.len()
        );
        for label in failing.iter().take(5) {
            println!("    differs: {label}");
        }
    }
    Ok(())
}
