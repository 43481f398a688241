//! Closed-form P(strength > stress) checked against paired simulation.

use shiha::shiha::stress_strength;
use shiha::ShihaParams;

fn main() -> shiha::Result<()> {
    let strength = ShihaParams::new(0.5, 2.0)?;
    let stress = ShihaParams::new(1.5, 0.3)?;
    let r = stress_strength(&strength, &stress);

    let n = 200_000;
    let ys = strength.sample_mixture(n, 1);
    let xs = stress.sample_mixture(n, 2);
    let hits = ys.iter().zip(&xs).filter(|(y, x)| y > x).count();
    let phat = hits as f64 / n as f64;
    let se = (r * (1.0 - r) / n as f64).sqrt();

    println!("closed form  R = {r:.6}");
    println!(
        "simulated    R = {phat:.6}  ({:.2} standard errors away)",
        (phat - r) / se
    );
    println!("identical laws R = {}", stress_strength(&stress, &stress));
    Ok(())
}
