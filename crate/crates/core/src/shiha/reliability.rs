use super::ShihaParams;

/// Stress–strength reliability `R = P(Y₁ > Y₂)` for independent
/// `Y₁ ~ strength` and `Y₂ ~ stress`, in closed form.
pub fn stress_strength(strength: &ShihaParams, stress: &ShihaParams) -> f64 {
    let (w1, e1) = (strength.omega, strength.eta);
    let (w2, e2) = (stress.omega, stress.eta);
    if strength == stress {
        // exchangeability; the closed form only reaches 1/2 up to rounding
        return 0.5;
    }
    let s12 = w1 + w2;
    let a = 2.0 * w1 + w2;
    let b = w1 + 2.0 * w2;

    let from_w2 = w2 * (w1 / s12 + 2.0 * e1 / a + 8.0 * w1 * e1 / (a * a));
    let from_3e2 = 3.0 * e2 * (w1 / b + e1 / s12 + 2.0 * w1 * e1 / (s12 * s12));
    let from_4w2e2 =
        4.0 * w2 * e2 * (w1 / (b * b) + e1 / (2.0 * s12 * s12) + 2.0 * w1 * e1 / s12.powi(3));
    let r = 1.0 - w1 / ((w1 + 3.0 * e1) * (w2 + 3.0 * e2)) * (from_w2 + from_3e2 + from_4w2e2);
    r.clamp(0.0, 1.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::{integrate_adaptive, Tolerance};
    use proptest::prelude::*;

    fn p(w: f64, e: f64) -> ShihaParams {
        ShihaParams::new(w, e).unwrap()
    }

    #[test]
    fn special_cases() {
        assert_eq!(stress_strength(&p(1.3, 0.4), &p(1.3, 0.4)), 0.5);
        assert!((stress_strength(&p(1.0, 0.0), &p(3.0, 0.0)) - 0.75).abs() < 1e-15);
        let r = stress_strength(&p(1.0, 1.0), &p(1.0, 0.0));
        assert!((r - 35.0 / 72.0).abs() < 1e-15);
        for (w, e) in [(0.3, 2.0), (5.0, 0.1)] {
            let r = stress_strength(&p(w, e), &p(w, 0.0));
            assert!((r - (9.0 * w + 26.0 * e) / (18.0 * (w + 3.0 * e))).abs() < 1e-14);
        }
        // strength concentrated at zero
        assert!(stress_strength(&p(1e9, 1.0), &p(1.0, 1.0)) < 1e-8);
    }

    #[test]
    fn matches_quadrature_of_definition() {
        let tol = Tolerance::default();
        for ((w1, e1), (w2, e2)) in [((0.5, 2.0), (1.5, 0.3)), ((2.0, 0.1), (0.3, 4.0))] {
            let (s, t) = (p(w1, e1), p(w2, e2));
            let hi = s.tail_cutoff().unwrap();
            let quad = integrate_adaptive(|y| s.pdf(y).unwrap() * t.cdf(y).unwrap(), 0.0, hi, tol)
                .unwrap();
            assert!((stress_strength(&s, &t) - quad).abs() < 1e-9);
        }
    }

    proptest! {
        #[test]
        fn symmetric_complement(w1 in 0.05f64..5.0, e1 in 0.0f64..5.0, w2 in 0.05f64..5.0, e2 in 0.0f64..5.0) {
            let (a, b) = (p(w1, e1), p(w2, e2));
            let r = stress_strength(&a, &b) + stress_strength(&b, &a);
            prop_assert!((r - 1.0).abs() < 1e-12);
        }
    }
}
