//! The Shiha distribution.
//!
//! Density with rate `ω > 0` and weight `η >= 0`:
//!
//! ```text
//! f(y) = ω/(ω+3η) · [ω + (2η + 8ωη·y)·e^{−ωy}] · e^{−ωy},   y >= 0
//! ```
//!
//! equivalently `p1·Exp(ω) + p2·Exp(2ω) + p3·Gamma(2, 2ω)`. At `η = 0` it is
//! `Exp(ω)`.

mod moments;
mod reliability;
mod sampling;

pub use reliability::stress_strength;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numerics::{find_root_bracketed, lambert_w0, Tolerance};

/// Survival level below which the upper tail is treated as negligible when
/// truncating integrals.
pub(crate) const TAIL_SURVIVAL: f64 = 1e-12;

/// Parameter pair `(ω, η)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ShihaParams {
    omega: f64,
    eta: f64,
}

/// Mixing proportions of the `Exp(ω)`, `Exp(2ω)` and `Gamma(2, 2ω)` components.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MixtureWeights {
    pub p1: f64,
    pub p2: f64,
    pub p3: f64,
}

/// Location and height of the hazard maximum.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct HazardPeak {
    pub y_star: f64,
    pub h_max: f64,
}

/// Mean, variance and shape coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Descriptors {
    pub mean: f64,
    pub variance: f64,
    pub skewness: f64,
    pub kurtosis: f64,
    pub excess_kurtosis: f64,
}

fn check_support(y: f64) -> Result<()> {
    if !(y >= 0.0) {
        return Err(Error::Domain(format!("Shiha support is y >= 0, got {y}")));
    }
    Ok(())
}

impl ShihaParams {
    pub fn new(omega: f64, eta: f64) -> Result<Self> {
        if !(omega > 0.0) || !omega.is_finite() || !(eta >= 0.0) || !eta.is_finite() {
            return Err(Error::Domain(format!(
                "Shiha parameters need omega > 0 and eta >= 0, got ({omega}, {eta})"
            )));
        }
        Ok(Self { omega, eta })
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    pub fn eta(&self) -> f64 {
        self.eta
    }

    fn norm(&self) -> f64 {
        self.omega + 3.0 * self.eta
    }

    pub fn mixture_weights(&self) -> MixtureWeights {
        let s = self.norm();
        MixtureWeights {
            p1: self.omega / s,
            p2: self.eta / s,
            p3: 2.0 * self.eta / s,
        }
    }

    pub fn pdf(&self, y: f64) -> Result<f64> {
        check_support(y)?;
        let (w, e) = (self.omega, self.eta);
        let t = w * y;
        if t > 700.0 {
            return Ok(self.log_pdf(y)?.exp());
        }
        let decay = (-t).exp();
        Ok(w / self.norm() * (w + (2.0 * e + 8.0 * w * e * y) * decay) * decay)
    }

    pub fn log_pdf(&self, y: f64) -> Result<f64> {
        check_support(y)?;
        let (w, e) = (self.omega, self.eta);
        let t = w * y;
        Ok(w.ln() - self.norm().ln() + (w + (2.0 * e + 8.0 * w * e * y) * (-t).exp()).ln() - t)
    }

    /// Distribution function, evaluated without the `1 − S` cancellation near 0.
    pub fn cdf(&self, y: f64) -> Result<f64> {
        check_support(y)?;
        let (w, e) = (self.omega, self.eta);
        let t = w * y;
        let head = -w * (-t).exp_m1();
        let body = e * (-3.0 * (-2.0 * t).exp_m1() - 4.0 * t * (-2.0 * t).exp());
        Ok(((head + body) / self.norm()).clamp(0.0, 1.0))
    }

    pub fn survival(&self, y: f64) -> Result<f64> {
        check_support(y)?;
        let (w, e) = (self.omega, self.eta);
        let decay = (-w * y).exp();
        Ok(((w + (3.0 * e + 4.0 * w * e * y) * decay) * decay / self.norm()).clamp(0.0, 1.0))
    }

    pub fn hazard(&self, y: f64) -> Result<f64> {
        check_support(y)?;
        let (w, e) = (self.omega, self.eta);
        let decay = (-w * y).exp();
        Ok(w * (w + (2.0 * e + 8.0 * w * e * y) * decay)
            / (w + (3.0 * e + 4.0 * w * e * y) * decay))
    }

    /// Unique hazard maximum, `y* = [W(4η/ω·e^{−5/4}) + 5/4]/ω` and
    /// `h_max = ω(2W + 1)/(W + 1)`. Undefined for `η = 0` (constant hazard).
    pub fn hazard_peak(&self) -> Result<HazardPeak> {
        if self.eta == 0.0 {
            return Err(Error::Degenerate("hazard is constant when eta = 0".into()));
        }
        let w = lambert_w0(4.0 * self.eta / self.omega * (-1.25f64).exp())?;
        Ok(HazardPeak {
            y_star: (w + 1.25) / self.omega,
            h_max: self.omega * (2.0 * w + 1.0) / (w + 1.0),
        })
    }

    /// Quantile at `prob`, solved on `F(y) − prob` with a doubling bracket.
    pub fn quantile(&self, prob: f64, tol: Tolerance) -> Result<f64> {
        if !(prob > 0.0 && prob < 1.0) {
            return Err(Error::Domain(format!(
                "quantile needs 0 < prob < 1, got {prob}"
            )));
        }
        let hi = self.upper_bracket(|y| self.cdf(y).map(|c| c > prob))?;
        find_root_bracketed(|y| self.cdf(y).unwrap_or(f64::NAN) - prob, 0.0, hi, tol)
    }

    /// Smallest doubling of `1/ω` at which `done` holds.
    fn upper_bracket(&self, done: impl Fn(f64) -> Result<bool>) -> Result<f64> {
        let mut hi = 1.0 / self.omega;
        for _ in 0..1100 {
            if done(hi)? {
                return Ok(hi);
            }
            hi *= 2.0;
        }
        Err(Error::Convergence {
            method: "bracket doubling",
            iterations: 1100,
        })
    }

    /// Truncation point where the survival drops below `1e-12`.
    pub(crate) fn tail_cutoff(&self) -> Result<f64> {
        self.upper_bracket(|y| self.survival(y).map(|s| s < TAIL_SURVIVAL))
    }
}
