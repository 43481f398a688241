//! The numerical building blocks on their own.

use shiha::numerics::{
    anderson_darling_sf, find_root_bracketed, integrate_adaptive, kolmogorov_sf, lambert_w0,
};
use shiha::Tolerance;

fn main() -> shiha::Result<()> {
    let tol = Tolerance::default();
    let w = lambert_w0(1.0)?;
    println!("W0(1)               = {w:.15} (omega constant)");
    let root = find_root_bracketed(|x| x.cos() - x, 0.0, 1.0, tol)?;
    println!("cos x = x           at x = {root:.15}");
    let area = integrate_adaptive(|x| (-x * x).exp(), 0.0, 10.0, tol)?;
    println!(
        "int exp(-x^2), 0..10 = {area:.15} (sqrt(pi)/2 = {:.15})",
        std::f64::consts::PI.sqrt() / 2.0
    );
    println!("P(D_24 >= 0.121)    = {:.4}", kolmogorov_sf(0.121, 24)?);
    println!("P(A2 >= 2.492)      = {:.4}", anderson_darling_sf(2.492)?);
    Ok(())
}
