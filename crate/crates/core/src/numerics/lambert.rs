use crate::error::{Error, Result};

const MAX_HALLEY_STEPS: usize = 64;

/// Principal branch of the Lambert W function for `x >= 0`.
///
/// Halley iteration on `w·e^w − x` started from `ln(1 + x)`, which sits above
/// the root for every nonnegative argument and converges cubically.
pub fn lambert_w0(x: f64) -> Result<f64> {
    if !(x >= 0.0) || !x.is_finite() {
        return Err(Error::Domain(format!(
            "lambert_w0 needs a finite x >= 0, got {x}"
        )));
    }
    if x == 0.0 {
        return Ok(0.0);
    }
    let mut w = x.ln_1p();
    for _ in 0..MAX_HALLEY_STEPS {
        let ew = w.exp();
        let resid = w * ew - x;
        let wp1 = w + 1.0;
        let step = resid / (ew * wp1 - (w + 2.0) * resid / (2.0 * wp1));
        w -= step;
        if step.abs() <= 1e-15 * (1.0 + w.abs()) {
            break;
        }
    }
    let resid = w * w.exp() - x;
    if resid.abs() > 1e-12 * x.max(1.0) {
        return Err(Error::Convergence {
            method: "lambert_w0",
            iterations: MAX_HALLEY_STEPS,
        });
    }
    Ok(w)
}
