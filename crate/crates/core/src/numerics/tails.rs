//! Null distributions for the Kolmogorov–Smirnov and Anderson–Darling
//! statistics with a fully specified continuous null.

use std::f64::consts::PI;

use crate::error::{Error, Result};

/// Sample size below which [`kolmogorov_sf`] uses the exact distribution.
pub const KOLMOGOROV_EXACT_LIMIT: usize = 100;

fn check_ks_args(d: f64, n: usize) -> Result<()> {
    if !(0.0..=1.0).contains(&d) || n == 0 {
        return Err(Error::Domain(format!(
            "K-S tail needs d in [0,1] and n >= 1, got d={d}, n={n}"
        )));
    }
    Ok(())
}

/// `P(D_n >= d)` for the two-sided one-sample statistic.
///
/// Exact (Marsaglia–Tsang–Wang) for `n < 100`, asymptotic Kolmogorov law at
/// `√n·d` otherwise.
pub fn kolmogorov_sf(d: f64, n: usize) -> Result<f64> {
    if n < KOLMOGOROV_EXACT_LIMIT {
        kolmogorov_exact_sf(d, n)
    } else {
        kolmogorov_asymptotic_sf(d, n)
    }
}

/// Asymptotic tail `Q(λ) = 2 Σ (−1)^{j−1} exp(−2 j² λ²)` at `λ = √n·d`.
pub fn kolmogorov_asymptotic_sf(d: f64, n: usize) -> Result<f64> {
    check_ks_args(d, n)?;
    let lambda = (n as f64).sqrt() * d;
    if lambda <= 0.0 {
        return Ok(1.0);
    }
    // The alternating series converges slowly for small λ; use the Jacobi
    // theta form of the cdf there instead.
    if lambda < 1.0 {
        let c = -PI * PI / (8.0 * lambda * lambda);
        let mut cdf = 0.0;
        for k in (1..=40).step_by(2) {
            let term = (c * (k * k) as f64).exp();
            cdf += term;
            if term < 1e-16 {
                break;
            }
        }
        cdf *= (2.0 * PI).sqrt() / lambda;
        return Ok((1.0 - cdf).clamp(0.0, 1.0));
    }
    let mut sum = 0.0;
    for j in 1..=100 {
        let jf = j as f64;
        let term = (-2.0 * jf * jf * lambda * lambda).exp();
        sum += if j % 2 == 1 { term } else { -term };
        if term < 1e-12 {
            break;
        }
    }
    Ok((2.0 * sum).clamp(0.0, 1.0))
}

/// Exact `P(D_n >= d)` by the Marsaglia–Tsang–Wang matrix-power algorithm.
pub fn kolmogorov_exact_sf(d: f64, n: usize) -> Result<f64> {
    check_ks_args(d, n)?;
    Ok((1.0 - kolmogorov_exact_cdf(d, n)).clamp(0.0, 1.0))
}

fn kolmogorov_exact_cdf(d: f64, n: usize) -> f64 {
    let nd = n as f64 * d;
    if nd <= 0.5 {
        // D_n >= 1/(2n) always.
        return 0.0;
    }
    if d >= 1.0 {
        return 1.0;
    }
    let k = nd as usize + 1;
    let m = 2 * k - 1;
    let h = k as f64 - nd;

    let mut hm = vec![0.0; m * m];
    for i in 0..m {
        for j in 0..m {
            if i + 1 >= j {
                hm[i * m + j] = 1.0;
            }
        }
    }
    for i in 0..m {
        hm[i * m] -= h.powi(i as i32 + 1);
        hm[(m - 1) * m + i] -= h.powi((m - i) as i32);
    }
    if 2.0 * h - 1.0 > 0.0 {
        hm[(m - 1) * m] += (2.0 * h - 1.0).powi(m as i32);
    }
    for i in 0..m {
        for j in 0..m {
            if i + 1 > j {
                for g in 1..=(i + 1 - j) {
                    hm[i * m + j] /= g as f64;
                }
            }
        }
    }

    let (q, mut exp10) = matrix_power(&hm, m, n);
    let mut s = q[(k - 1) * m + k - 1];
    for i in 1..=n {
        s = s * i as f64 / n as f64;
        if s < 1e-140 {
            s *= 1e140;
            exp10 -= 140;
        }
    }
    s * 10f64.powi(exp10)
}

fn matrix_multiply(a: &[f64], b: &[f64], m: usize) -> Vec<f64> {
    let mut c = vec![0.0; m * m];
    for i in 0..m {
        for l in 0..m {
            let ail = a[i * m + l];
            if ail == 0.0 {
                continue;
            }
            for j in 0..m {
                c[i * m + j] += ail * b[l * m + j];
            }
        }
    }
    c
}

/// `A^n` with a decimal exponent carried separately to avoid overflow.
fn matrix_power(a: &[f64], m: usize, n: usize) -> (Vec<f64>, i32) {
    if n == 1 {
        return (a.to_vec(), 0);
    }
    let (half, e_half) = matrix_power(a, m, n / 2);
    let sq = matrix_multiply(&half, &half, m);
    let (mut v, mut e) = if n.is_multiple_of(2) {
        (sq, 2 * e_half)
    } else {
        (matrix_multiply(a, &sq, m), 2 * e_half)
    };
    if v[(m / 2) * m + m / 2] > 1e140 {
        v.iter_mut().for_each(|x| *x *= 1e-140);
        e += 140;
    }
    (v, e)
}

/// Asymptotic cdf of A² (Marsaglia & Marsaglia, 2004).
fn ad_inf_cdf(z: f64) -> f64 {
    if z <= 0.0 {
        return 0.0;
    }
    if z < 2.0 {
        (-1.2337141 / z).exp() / z.sqrt()
            * (2.00012
                + (0.247105 - (0.0649821 - (0.0347962 - (0.011672 - 0.00168691 * z) * z) * z) * z)
                    * z)
    } else {
        (-(1.0776
            - (2.30695 - (0.43424 - (0.082433 - (0.008056 - 0.0003146 * z) * z) * z) * z) * z)
            .exp())
        .exp()
    }
}

/// Finite-sample correction to the asymptotic A² cdf value `x`.
fn ad_errfix(n: usize, x: f64) -> f64 {
    let n = n as f64;
    if x > 0.8 {
        return (-130.2137
            + (745.2337 - (1705.091 - (1950.646 - (1116.360 - 255.7844 * x) * x) * x) * x) * x)
            / n;
    }
    let c = 0.01265 + 0.1757 / n;
    if x < c {
        let t = x / c;
        let t = t.sqrt() * (1.0 - t) * (49.0 * t - 102.0);
        return t * (0.0037 / (n * n) + 0.00078 / n + 0.00006) / n;
    }
    let t = (x - c) / (0.8 - c);
    let t = -0.00022633 + (6.54034 - (14.6538 - (14.458 - (8.259 - 1.91864 * t) * t) * t) * t) * t;
    t * (0.04213 + 0.01365 / n) / n
}

fn check_a2(a2: f64) -> Result<()> {
    if !(a2 >= 0.0) {
        return Err(Error::Domain(format!("A² must be >= 0, got {a2}")));
    }
    Ok(())
}

/// Asymptotic `P(A² >= a2)` for a fully specified continuous null.
pub fn anderson_darling_sf(a2: f64) -> Result<f64> {
    check_a2(a2)?;
    Ok((1.0 - ad_inf_cdf(a2)).clamp(0.0, 1.0))
}

/// `P(A² >= a2)` at sample size `n`: the asymptotic law plus Marsaglia's
/// finite-`n` correction.
pub fn anderson_darling_sf_n(a2: f64, n: usize) -> Result<f64> {
    check_a2(a2)?;
    if n == 0 {
        return Err(Error::Domain("A² tail needs n >= 1".into()));
    }
    let x = ad_inf_cdf(a2);
    Ok((1.0 - x - ad_errfix(n, x)).clamp(0.0, 1.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    // n = 1 closed form: P(D_1 < d) = 2d − 1 on [1/2, 1].
    #[test]
    fn exact_single_observation() {
        for d in [0.55, 0.7, 0.9] {
            let sf = kolmogorov_exact_sf(d, 1).unwrap();
            assert!((sf - (1.0 - (2.0 * d - 1.0))).abs() < 1e-12, "d={d}: {sf}");
        }
    }

    #[test]
    fn exact_two_observations() {
        // Midpoint-grid integration of P(D_2 < d) over the unit square.
        let d = 0.6;
        let steps = 2000;
        let mut inside = 0.0;
        for i in 0..steps {
            for j in 0..steps {
                let u = (i as f64 + 0.5) / steps as f64;
                let v = (j as f64 + 0.5) / steps as f64;
                let (a, b) = if u < v { (u, v) } else { (v, u) };
                let dn = (0.5 - a).max(a).max(1.0 - b).max(b - 0.5);
                if dn < d {
                    inside += 1.0;
                }
            }
        }
        let grid_cdf = inside / (steps * steps) as f64;
        let sf = kolmogorov_exact_sf(d, 2).unwrap();
        assert!((1.0 - sf - grid_cdf).abs() < 2e-3);
    }

    #[test]
    fn reference_table_pairs() {
        // Exact law, no ties.
        assert!((kolmogorov_sf(0.1210, 24).unwrap() - 0.8326).abs() < 0.01);
        // Asymptotic law, used by the tests when the sample carries ties.
        assert!((kolmogorov_asymptotic_sf(0.0890, 34).unwrap() - 0.9506).abs() < 1e-3);
    }

    #[test]
    fn ks_limits() {
        assert_eq!(kolmogorov_sf(0.0, 10).unwrap(), 1.0);
        assert_eq!(kolmogorov_asymptotic_sf(0.0, 10).unwrap(), 1.0);
        assert!(kolmogorov_sf(1.0, 100).unwrap() < 1e-10);
        assert!(kolmogorov_exact_sf(1.0, 5).unwrap() < 1e-10);
        assert!(kolmogorov_sf(1.5, 5).is_err());
        assert!(kolmogorov_sf(0.5, 0).is_err());
    }

    #[test]
    fn exact_approaches_asymptotic() {
        let d = 1.0 / 30.0;
        let exact = kolmogorov_exact_sf(d, 900).unwrap();
        let asym = kolmogorov_asymptotic_sf(d, 900).unwrap();
        assert!((exact - asym).abs() < 0.02);
    }

    #[test]
    fn ad_reference_values() {
        assert!((anderson_darling_sf(0.2988).unwrap() - 0.9385).abs() < 0.03);
        assert!(anderson_darling_sf(10.0).unwrap() < 1e-3);
        assert!((anderson_darling_sf(1.2426).unwrap() - 0.2517).abs() < 0.03);
        assert!((anderson_darling_sf_n(0.2988, 24).unwrap() - 0.9385).abs() < 2e-4);
        assert!((anderson_darling_sf_n(5.2981, 59).unwrap() - 0.0021).abs() < 2e-4);
        assert_eq!(anderson_darling_sf(0.0).unwrap(), 1.0);
        assert!(anderson_darling_sf(-1.0).is_err());
    }

    proptest! {
        #[test]
        fn ks_monotone(d1 in 0.0f64..1.0, d2 in 0.0f64..1.0, n in 1usize..150) {
            let (lo, hi) = if d1 < d2 { (d1, d2) } else { (d2, d1) };
            prop_assert!(kolmogorov_sf(lo, n).unwrap() + 1e-12 >= kolmogorov_sf(hi, n).unwrap());
            prop_assert!(kolmogorov_asymptotic_sf(lo, n).unwrap() + 1e-12
                >= kolmogorov_asymptotic_sf(hi, n).unwrap());
        }

        #[test]
        fn ad_monotone(a in 0.0f64..20.0, b in 0.0f64..20.0) {
            let (lo, hi) = if a < b { (a, b) } else { (b, a) };
            prop_assert!(anderson_darling_sf(lo).unwrap() + 1e-12 >= anderson_darling_sf(hi).unwrap());
        }
    }
}
