use super::{Descriptors, ShihaParams};
use crate::error::{Error, Result};
use crate::numerics::{integrate_adaptive, Tolerance};

impl ShihaParams {
    /// Moment generating function `E[e^{tY}]`, finite for `t < ω`.
    pub fn mgf(&self, t: f64) -> Result<f64> {
        let (w, e) = (self.omega, self.eta);
        if !(t < w) {
            return Err(Error::Domain(format!(
                "mgf diverges for t >= omega ({t} >= {w})"
            )));
        }
        let num =
            4.0 * w.powi(4) + 12.0 * w.powi(3) * e - 4.0 * w.powi(3) * t - 14.0 * w * w * e * t
                + w * w * t * t
                + 2.0 * w * e * t * t;
        let den = (w + 3.0 * e) * (w - t) * (2.0 * w - t).powi(2);
        Ok(num / den)
    }

    /// `E[Y^k] = (2^k ω + 2ηk + 3η) k! / (2^k ω^k (ω+3η))`.
    pub fn raw_moment(&self, k: u32) -> f64 {
        let (w, e) = (self.omega, self.eta);
        let kf = f64::from(k);
        // k!/(2ω)^k accumulated as a product to stay finite for large k
        let scaled_factorial: f64 = (1..=k).map(|i| f64::from(i) / (2.0 * w)).product();
        (2f64.powi(k as i32) * w + 2.0 * e * kf + 3.0 * e) * scaled_factorial / (w + 3.0 * e)
    }

    pub fn descriptors(&self) -> Descriptors {
        let (w, e) = (self.omega, self.eta);
        let s = w + 3.0 * e;
        let q = 17.0 * e * e + 18.0 * e * w + 4.0 * w * w;
        let skew_num = 106.0 * e.powi(3) + 234.0 * e * e * w + 114.0 * e * w * w + 16.0 * w.powi(3);
        let kurt_num = 611.0 * e.powi(4)
            + 2076.0 * e.powi(3) * w
            + 1608.0 * e * e * w * w
            + 472.0 * e * w.powi(3)
            + 48.0 * w.powi(4);
        let kurtosis = 3.0 * kurt_num / (q * q);
        Descriptors {
            mean: (2.0 * w + 5.0 * e) / (2.0 * w * s),
            variance: q / (4.0 * w * w * s * s),
            skewness: skew_num / q.powf(1.5),
            kurtosis,
            excess_kurtosis: kurtosis - 3.0,
        }
    }

    /// Shannon entropy. The term `E[ln(ω + (2η + 8ωηY)e^{−ωY})]` has no
    /// closed form and is integrated against the density up to the point where
    /// the survival falls below `1e-12`.
    pub fn entropy(&self, tol: Tolerance) -> Result<f64> {
        let (w, e) = (self.omega, self.eta);
        let s = w + 3.0 * e;
        let hi = self.tail_cutoff()?;
        let inner = |y: f64| (w + (2.0 * e + 8.0 * w * e * y) * (-w * y).exp()).ln();
        let expectation =
            integrate_adaptive(|y| inner(y) * self.pdf(y).unwrap_or(0.0), 0.0, hi, tol)?;
        Ok((s / w).ln() + (2.0 * w + 5.0 * e) / (2.0 * s) - expectation)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(w: f64, e: f64) -> ShihaParams {
        ShihaParams::new(w, e).unwrap()
    }

    #[test]
    fn mgf_examples() {
        assert!((p(0.3, 4.0).mgf(0.0).unwrap() - 1.0).abs() < 1e-14);
        let (w, e, t) = (1.0, 0.5, 0.3);
        let m = p(w, e).mixture_weights();
        let oracle = m.p1 * w / (w - t)
            + m.p2 * 2.0 * w / (2.0 * w - t)
            + m.p3 * (2.0 * w / (2.0 * w - t)).powi(2);
        assert!((p(w, e).mgf(t).unwrap() - oracle).abs() < 1e-14);
        assert!(p(1.0, 1.0).mgf(1.0).is_err());

        let q = p(1.0, 0.2);
        let h = 1e-5;
        let d1 = (q.mgf(h).unwrap() - q.mgf(-h).unwrap()) / (2.0 * h);
        assert!((d1 - 0.938).abs() < 1e-3);
    }

    #[test]
    fn mgf_derivatives_match_moments() {
        for (w, e) in [(1.0, 0.2), (0.4, 1.0), (2.5, 3.0)] {
            let q = p(w, e);
            let h = 1e-4 * w;
            let (mp, m0, mm) = (q.mgf(h).unwrap(), q.mgf(0.0).unwrap(), q.mgf(-h).unwrap());
            let d1 = (mp - mm) / (2.0 * h);
            let d2 = (mp - 2.0 * m0 + mm) / (h * h);
            assert!((d1 / q.raw_moment(1) - 1.0).abs() < 1e-4);
            assert!((d2 / q.raw_moment(2) - 1.0).abs() < 1e-4);
        }
    }

    #[test]
    fn raw_moment_examples() {
        assert!((p(3.0, 0.7).raw_moment(0) - 1.0).abs() < 1e-15);
        let q = p(1.0, 0.2);
        for (k, v) in [(1, 0.938), (2, 1.688), (3, 4.594), (4, 17.062)] {
            assert!((q.raw_moment(k) - v).abs() < 5e-3, "k={k}");
        }
        assert!((p(0.2, 1.0).raw_moment(4) - 4160.156).abs() < 0.01);
    }

    #[test]
    fn raw_moments_against_quadrature() {
        let tol = Tolerance::default();
        for (w, e) in [(0.5, 0.5), (1.0, 2.0), (3.0, 0.1)] {
            let q = p(w, e);
            let hi = q.tail_cutoff().unwrap() * 2.0;
            for k in 1..=4 {
                let num =
                    integrate_adaptive(|y| y.powi(k) * q.pdf(y).unwrap(), 0.0, hi, tol).unwrap();
                assert!((num / q.raw_moment(k as u32) - 1.0).abs() < 1e-6);
            }
        }
    }

    #[test]
    fn descriptor_examples() {
        let d = p(1.0, 0.2).descriptors();
        assert!((d.variance - 0.809).abs() < 5e-3);
        assert!((d.skewness - 2.057).abs() < 5e-3);
        assert!((d.kurtosis - 9.815).abs() < 5e-3);
        let d = p(0.2, 1.5).descriptors();
        assert!((d.variance - 12.395).abs() < 5e-3);
        assert!((d.skewness - 1.621).abs() < 5e-3);
        assert!((d.kurtosis - 7.26).abs() < 5e-3);
        let d = p(1e6, 1.0).descriptors();
        assert!((d.skewness - 2.0).abs() < 1e-3);
        assert!((d.kurtosis - 9.0).abs() < 1e-2);
    }

    #[test]
    fn descriptors_agree_with_raw_moments() {
        let q = p(0.7, 1.9);
        let (m1, m2, m3, m4) = (
            q.raw_moment(1),
            q.raw_moment(2),
            q.raw_moment(3),
            q.raw_moment(4),
        );
        let var = m2 - m1 * m1;
        let d = q.descriptors();
        assert!((d.mean - m1).abs() < 1e-12);
        assert!((d.variance - var).abs() < 1e-12 * var);
        let sk = (m3 - 3.0 * m2 * m1 + 2.0 * m1.powi(3)) / var.powf(1.5);
        let ku = (m4 - 4.0 * m3 * m1 + 6.0 * m2 * m1 * m1 - 3.0 * m1.powi(4)) / (var * var);
        assert!((d.skewness - sk).abs() < 1e-10);
        assert!((d.kurtosis - ku).abs() < 1e-10);
        assert_eq!(d.excess_kurtosis, d.kurtosis - 3.0);
    }

    #[test]
    fn entropy_exponential_reduction() {
        let tol = Tolerance::default();
        assert!((p(1.0, 0.0).entropy(tol).unwrap() - 1.0).abs() < 1e-9);
        assert!((p(2.0, 0.0).entropy(tol).unwrap() - (1.0 - 2f64.ln())).abs() < 1e-9);
    }

    #[test]
    fn entropy_matches_direct_quadrature() {
        let tol = Tolerance::default();
        let q = p(0.6, 1.7);
        let hi = q.tail_cutoff().unwrap();
        let direct =
            integrate_adaptive(|y| -q.pdf(y).unwrap() * q.log_pdf(y).unwrap(), 0.0, hi, tol)
                .unwrap();
        assert!((q.entropy(tol).unwrap() - direct).abs() < 1e-8);
    }

    #[test]
    fn entropy_decreases_in_omega() {
        let tol = Tolerance::default();
        for e in [0.5, 1.0, 2.0] {
            let hs: Vec<f64> = [0.5, 1.0, 2.0, 4.0]
                .iter()
                .map(|&w| p(w, e).entropy(tol).unwrap())
                .collect();
            assert!(hs.windows(2).all(|h| h[1] < h[0]), "eta={e}: {hs:?}");
        }
    }

    proptest! {
        #[test]
        fn variance_positive(w in 0.01f64..100.0, e in 0.0f64..100.0) {
            let d = p(w, e).descriptors();
            prop_assert!(d.variance > 0.0);
            prop_assert!(d.skewness > 0.0);
        }
    }
}
