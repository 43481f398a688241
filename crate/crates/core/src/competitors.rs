//! Lifetime families compared against the Shiha law, behind one evaluation
//! surface.
//!
//! | family  | params        | density |
//! |---------|---------------|---------|
//! | SHIHA   | (ω, η)        | see [`crate::shiha`] |
//! | APTXGD  | (ω, η)        | `ln η/(η−1) · f₀(y) · η^{1−u₀(y)}`, xgamma `f₀ = ω²/(1+ω)(1 + ωy²/2)e^{−ωy}` |
//! | PLD     | (ω, η)        | `ηω²/(1+ω) (1 + y^η) y^{η−1} e^{−ωy^η}` |
//! | TPGLD   | (ω, η, α)     | `αω² (η + y^α) y^{α−1} e^{−ωy^α} / (1 + ωη)` |
//! | CJD     | (ω)           | `ω²/(ω+2) (1 + ωy²) e^{−ωy}` |
//! | AKD     | (ω)           | `ω³/(ω²+2) (1 + y²) e^{−ωy}` |
//!
//! The competitor cdfs are closed forms obtained by integrating these
//! densities; the test suite checks each one against quadrature.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::numerics::{find_root_bracketed, Tolerance};
use crate::shiha::ShihaParams;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Shiha,
    Aptxgd,
    Pld,
    Tpgld,
    Cjd,
    Akd,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::Shiha,
        Family::Aptxgd,
        Family::Pld,
        Family::Tpgld,
        Family::Cjd,
        Family::Akd,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Shiha => "SHIHA",
            Family::Aptxgd => "APTXGD",
            Family::Pld => "PLD",
            Family::Tpgld => "TPGLD",
            Family::Cjd => "CJD",
            Family::Akd => "AKD",
        }
    }

    pub fn param_names(self) -> &'static [&'static str] {
        match self {
            Family::Shiha | Family::Aptxgd | Family::Pld => &["omega", "eta"],
            Family::Tpgld => &["omega", "eta", "alpha"],
            Family::Cjd | Family::Akd => &["omega"],
        }
    }

    pub fn param_count(self) -> usize {
        self.param_names().len()
    }

    /// Optimizer box per parameter.
    pub fn param_bounds(self) -> Vec<(f64, f64)> {
        let mut bounds = vec![(1e-4, 1e4); self.param_count()];
        if self == Family::Tpgld {
            bounds[2].1 = 1000.0;
        }
        bounds
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl Serialize for Family {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "shiha" => Ok(Family::Shiha),
            "aptxgd" => Ok(Family::Aptxgd),
            "pld" | "pl" => Ok(Family::Pld),
            "tpgld" => Ok(Family::Tpgld),
            "cjd" => Ok(Family::Cjd),
            "akd" => Ok(Family::Akd),
            other => Err(Error::Domain(format!("unknown family `{other}`"))),
        }
    }
}

/// A family together with a concrete parameter vector.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ModelSpec {
    family: Family,
    params: Vec<f64>,
}

/// `ln(η)/(η − 1)`, continuous through `η = 1`.
fn log_ratio(eta: f64) -> f64 {
    let d = eta - 1.0;
    if d == 0.0 {
        1.0
    } else {
        d.ln_1p() / d
    }
}

/// xgamma survival `u₀` and cdf `F₀ = 1 − u₀`.
fn xgamma_tail(w: f64, y: f64) -> (f64, f64) {
    let t = w * y;
    let decay = (-t).exp();
    let u0 = (1.0 + w + t + 0.5 * t * t) / (1.0 + w) * decay;
    let f0 = -(-t).exp_m1() - (t + 0.5 * t * t) / (1.0 + w) * decay;
    (u0, f0)
}

fn pow_pos(y: f64, a: f64) -> f64 {
    (a * y.ln()).exp()
}

/// Log-density without argument validation; callers guarantee `y > 0` and
/// a parameter vector valid for `family`.
pub(crate) fn log_density(family: Family, p: &[f64], y: f64) -> f64 {
    LogDensity::new(family, p).eval(y)
}

/// Log-density with the parameter-only terms computed once.
pub(crate) struct LogDensity<'a> {
    family: Family,
    p: &'a [f64],
    constant: f64,
}

impl<'a> LogDensity<'a> {
    pub(crate) fn new(family: Family, p: &'a [f64]) -> Self {
        let constant = match family {
            Family::Shiha => p[0].ln() - (p[0] + 3.0 * p[1]).ln(),
            Family::Aptxgd => {
                let (w, e) = (p[0], p[1]);
                let base = 2.0 * w.ln() - w.ln_1p();
                if e == 1.0 {
                    base
                } else {
                    base + log_ratio(e).ln() + e.ln()
                }
            }
            Family::Pld => p[1].ln() + 2.0 * p[0].ln() - p[0].ln_1p(),
            Family::Tpgld => p[2].ln() + 2.0 * p[0].ln() - (p[0] * p[1]).ln_1p(),
            Family::Cjd => 2.0 * p[0].ln() - (p[0] + 2.0).ln(),
            Family::Akd => 3.0 * p[0].ln() - (p[0] * p[0] + 2.0).ln(),
        };
        Self {
            family,
            p,
            constant,
        }
    }

    pub(crate) fn eval(&self, y: f64) -> f64 {
        let p = self.p;
        self.constant
            + match self.family {
                Family::Shiha => {
                    let (w, e) = (p[0], p[1]);
                    let t = w * y;
                    (w + (2.0 * e + 8.0 * w * e * y) * (-t).exp()).ln() - t
                }
                Family::Aptxgd => {
                    let (w, e) = (p[0], p[1]);
                    let base = (0.5 * w * y * y).ln_1p() - w * y;
                    if e == 1.0 {
                        base
                    } else {
                        base - xgamma_tail(w, y).0 * e.ln()
                    }
                }
                Family::Pld => {
                    let (w, e) = (p[0], p[1]);
                    let ly = y.ln();
                    let z = (e * ly).exp();
                    z.ln_1p() + (e - 1.0) * ly - w * z
                }
                Family::Tpgld => {
                    let (w, e, a) = (p[0], p[1], p[2]);
                    let ly = y.ln();
                    let z = (a * ly).exp();
                    (e + z).ln() + (a - 1.0) * ly - w * z
                }
                Family::Cjd => (p[0] * y * y).ln_1p() - p[0] * y,
                Family::Akd => (y * y).ln_1p() - p[0] * y,
            }
    }
}

impl ModelSpec {
    pub fn new(family: Family, params: Vec<f64>) -> Result<Self> {
        if params.len() != family.param_count() {
            return Err(Error::Domain(format!(
                "{family} takes {} parameters, got {}",
                family.param_count(),
                params.len()
            )));
        }
        let ok = match family {
            Family::Shiha => params[0] > 0.0 && params[1] >= 0.0,
            _ => params.iter().all(|&p| p > 0.0),
        };
        if !ok || params.iter().any(|p| !p.is_finite()) {
            return Err(Error::Domain(format!(
                "invalid {family} parameters {params:?}"
            )));
        }
        Ok(Self { family, params })
    }

    pub fn shiha(p: ShihaParams) -> Self {
        Self {
            family: Family::Shiha,
            params: vec![p.omega(), p.eta()],
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn params(&self) -> &[f64] {
        &self.params
    }

    fn as_shiha(&self) -> ShihaParams {
        ShihaParams::new(self.params[0], self.params[1]).expect("validated at construction")
    }

    fn check_y(&self, y: f64) -> Result<()> {
        let ok = if self.family == Family::Shiha {
            y >= 0.0
        } else {
            y > 0.0
        };
        if !ok || y.is_nan() {
            return Err(Error::Domain(format!(
                "{} density needs y > 0, got {y}",
                self.family
            )));
        }
        Ok(())
    }

    pub fn log_pdf(&self, y: f64) -> Result<f64> {
        self.check_y(y)?;
        Ok(log_density(self.family, &self.params, y))
    }

    pub fn pdf(&self, y: f64) -> Result<f64> {
        if self.family == Family::Shiha {
            return self.as_shiha().pdf(y);
        }
        Ok(self.log_pdf(y)?.exp())
    }

    pub fn cdf(&self, y: f64) -> Result<f64> {
        if !(y >= 0.0) {
            return Err(Error::Domain(format!("cdf needs y >= 0, got {y}")));
        }
        if y == 0.0 {
            return Ok(0.0);
        }
        let p = &self.params;
        let v = match self.family {
            Family::Shiha => return self.as_shiha().cdf(y),
            Family::Aptxgd => {
                let (w, e) = (p[0], p[1]);
                let (_, f0) = xgamma_tail(w, y);
                if e == 1.0 {
                    f0
                } else {
                    let l = e.ln();
                    (f0 * l).exp_m1() / l.exp_m1()
                }
            }
            Family::Pld => {
                let (w, e) = (p[0], p[1]);
                let t = w * pow_pos(y, e);
                -(-t).exp_m1() - t / (1.0 + w) * (-t).exp()
            }
            Family::Tpgld => {
                let (w, e, a) = (p[0], p[1], p[2]);
                let t = w * pow_pos(y, a);
                -(-t).exp_m1() - t / (1.0 + w * e) * (-t).exp()
            }
            Family::Cjd => {
                let w = p[0];
                let t = w * y;
                -(-t).exp_m1() - t * (t + 2.0) / (w + 2.0) * (-t).exp()
            }
            Family::Akd => {
                let w = p[0];
                let t = w * y;
                -(-t).exp_m1() - t * (t + 2.0) / (w * w + 2.0) * (-t).exp()
            }
        };
        Ok(v.clamp(0.0, 1.0))
    }

    /// Quantile by bracketed inversion of the cdf.
    pub fn quantile(&self, prob: f64, tol: Tolerance) -> Result<f64> {
        if !(prob > 0.0 && prob < 1.0) {
            return Err(Error::Domain(format!(
                "quantile needs 0 < prob < 1, got {prob}"
            )));
        }
        if self.family == Family::Shiha {
            return self.as_shiha().quantile(prob, tol);
        }
        let mut hi = 1.0;
        let mut steps = 0;
        while self.cdf(hi)? <= prob {
            hi *= 2.0;
            steps += 1;
            if steps > 1100 {
                return Err(Error::Convergence {
                    method: "quantile bracket",
                    iterations: steps,
                });
            }
        }
        find_root_bracketed(|y| self.cdf(y).unwrap_or(f64::NAN) - prob, 0.0, hi, tol)
    }
}
