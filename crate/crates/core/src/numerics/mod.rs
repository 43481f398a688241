//! Self-contained numerical kernel.
//!
//! Everything here is a pure function of its arguments.

mod lambert;
mod quadrature;
mod roots;
mod tails;

pub use lambert::lambert_w0;
pub use quadrature::integrate_adaptive;
pub use roots::find_root_bracketed;
pub use tails::{
    anderson_darling_sf, anderson_darling_sf_n, kolmogorov_asymptotic_sf, kolmogorov_exact_sf,
    kolmogorov_sf,
};

use crate::error::{Error, Result};

/// Stopping rule shared by the iterative routines.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_iter: usize,
}

impl Tolerance {
    pub fn new(abs_tol: f64, rel_tol: f64, max_iter: usize) -> Result<Self> {
        if !(abs_tol > 0.0) || !(rel_tol >= 0.0) || max_iter == 0 {
            return Err(Error::Domain(format!(
                "tolerance requires abs_tol > 0, rel_tol >= 0, max_iter >= 1 \
                 (got {abs_tol}, {rel_tol}, {max_iter})"
            )));
        }
        Ok(Self {
            abs_tol,
            rel_tol,
            max_iter,
        })
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Self {
            abs_tol: 1e-10,
            rel_tol: 1e-10,
            max_iter: 200,
        }
    }
}
