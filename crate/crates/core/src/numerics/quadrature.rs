#![allow(clippy::excessive_precision)]

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use super::Tolerance;
use crate::error::{Error, Result};

// 15-point Kronrod abscissae with the embedded 7-point Gauss rule (QUADPACK qk15).
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.000_000_000_000_000_000_000_000_000_000_000,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

struct Segment {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

impl PartialEq for Segment {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}
impl Eq for Segment {}
impl PartialOrd for Segment {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Segment {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

fn kronrod15<F: FnMut(f64) -> f64>(f: &mut F, a: f64, b: f64) -> Segment {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    let mut kronrod = fc * WGK[7];
    let mut gauss = fc * WG[3];
    for j in 0..7 {
        let dx = half * XGK[j];
        let pair = f(center - dx) + f(center + dx);
        kronrod += WGK[j] * pair;
        if j % 2 == 1 {
            gauss += WG[j / 2] * pair;
        }
    }
    Segment {
        a,
        b,
        value: kronrod * half,
        error: ((kronrod - gauss) * half).abs(),
    }
}

/// Globally adaptive Gauss–Kronrod (G7/K15) integration of `f` over `[a, b]`.
///
/// The interval with the largest error estimate is bisected until the summed
/// estimate drops below `max(abs_tol, rel_tol·|result|)`. `max_iter` bounds
/// the number of bisections.
pub fn integrate_adaptive<F>(mut f: F, a: f64, b: f64, tol: Tolerance) -> Result<f64>
where
    F: FnMut(f64) -> f64,
{
    if !(a < b) || !a.is_finite() || !b.is_finite() {
        return Err(Error::Domain(format!(
            "integration needs finite a < b, got [{a}, {b}]"
        )));
    }
    let first = kronrod15(&mut f, a, b);
    if !first.value.is_finite() {
        return Err(Error::Domain(format!(
            "integrand is not finite on [{a}, {b}]"
        )));
    }
    let mut total = first.value;
    let mut total_err = first.error;
    let mut heap = BinaryHeap::new();
    heap.push(first);

    for _ in 0..tol.max_iter {
        if total_err <= tol.abs_tol.max(tol.rel_tol * total.abs()) {
            return Ok(heap.iter().map(|s| s.value).sum());
        }
        let worst = heap.pop().expect("heap never empties");
        let mid = 0.5 * (worst.a + worst.b);
        let left = kronrod15(&mut f, worst.a, mid);
        let right = kronrod15(&mut f, mid, worst.b);
        total += left.value + right.value - worst.value;
        total_err += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
    }
    if total_err <= tol.abs_tol.max(tol.rel_tol * total.abs()) {
        return Ok(heap.iter().map(|s| s.value).sum());
    }
    Err(Error::Convergence {
        method: "integrate_adaptive",
        iterations: tol.max_iter,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn elementary_integrals() {
        let tol = Tolerance::default();
        assert!((integrate_adaptive(|x| x, 0.0, 1.0, tol).unwrap() - 0.5).abs() < 1e-14);
        let v = integrate_adaptive(|x| (-x).exp(), 0.0, 40.0, tol).unwrap();
        assert!((v - (1.0 - (-40.0f64).exp())).abs() < 1e-10);
    }

    #[test]
    fn rejects_empty_interval() {
        assert!(integrate_adaptive(|x| x, 1.0, 1.0, Tolerance::default()).is_err());
    }

    #[test]
    fn subdivision_budget_exhausted() {
        let tol = Tolerance::new(1e-14, 0.0, 3).unwrap();
        let err = integrate_adaptive(|x: f64| x.sqrt().recip(), 1e-12, 1.0, tol);
        assert!(matches!(err, Err(Error::Convergence { .. })));
    }

    proptest! {
        #[test]
        fn cubics_are_exact(c0 in -5.0f64..5.0, c1 in -5.0f64..5.0, c2 in -5.0f64..5.0,
                            c3 in -5.0f64..5.0, a in -3.0f64..0.0, w in 0.1f64..3.0) {
            let b = a + w;
            let p = |x: f64| c0 + x * (c1 + x * (c2 + x * c3));
            let anti = |x: f64| x * (c0 + x * (c1 / 2.0 + x * (c2 / 3.0 + x * c3 / 4.0)));
            let v = integrate_adaptive(p, a, b, Tolerance::default()).unwrap();
            prop_assert!((v - (anti(b) - anti(a))).abs() < 1e-12 * (1.0 + anti(b).abs() + anti(a).abs()));
        }
    }
}
