use rand::Rng;

use super::ShihaParams;
use crate::numerics::Tolerance;
use crate::rng::{exponential, open_unit, seeded};

impl ShihaParams {
    /// `n` variates by inverting the cdf at uniform draws.
    pub fn sample_inverse(&self, n: usize, seed: u64) -> Vec<f64> {
        let mut rng = seeded(seed);
        self.sample_inverse_with(n, &mut rng)
    }

    pub fn sample_inverse_with<R: Rng + ?Sized>(&self, n: usize, rng: &mut R) -> Vec<f64> {
        let tol = Tolerance::default();
        (0..n)
            .map(|_| {
                let u = open_unit(rng);
                self.quantile(u, tol).expect("u lies in (0, 1)")
            })
            .collect()
    }

    /// `n` variates from the three-component mixture representation.
    pub fn sample_mixture(&self, n: usize, seed: u64) -> Vec<f64> {
        let mut rng = seeded(seed);
        self.sample_mixture_with(n, &mut rng)
    }

    pub fn sample_mixture_with<R: Rng + ?Sized>(&self, n: usize, rng: &mut R) -> Vec<f64> {
        (0..n).map(|_| self.draw_mixture(rng).0).collect()
    }

    /// One mixture draw together with the selected component (0, 1 or 2).
    pub(crate) fn draw_mixture<R: Rng + ?Sized>(&self, rng: &mut R) -> (f64, usize) {
        let weights = self.mixture_weights();
        let u: f64 = rng.random();
        let w = self.omega;
        if u < weights.p1 || self.eta == 0.0 {
            (exponential(rng, w), 0)
        } else if u < weights.p1 + weights.p2 {
            (exponential(rng, 2.0 * w), 1)
        } else {
            (exponential(rng, 2.0 * w) + exponential(rng, 2.0 * w), 2)
        }
    }
}
