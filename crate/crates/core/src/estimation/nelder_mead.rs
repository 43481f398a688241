//! Derivative-free simplex minimization (dimension ≤ 3 in practice).

#[derive(Debug, Clone)]
pub struct Minimum {
    pub x: Vec<f64>,
    pub fx: f64,
    pub evals: usize,
    pub converged: bool,
}

#[derive(Debug, Clone, Copy)]
pub struct SimplexOptions {
    /// Initial edge length along each axis.
    pub step: f64,
    /// Stop once every vertex is within `xtol·(1 + |x_best|)` of the best one.
    pub xtol: f64,
    pub max_evals: usize,
}

const REFLECT: f64 = 1.0;
const EXPAND: f64 = 2.0;
const CONTRACT: f64 = 0.5;
const SHRINK: f64 = 0.5;

fn eval<F: FnMut(&[f64]) -> f64>(f: &mut F, x: &[f64], evals: &mut usize) -> f64 {
    *evals += 1;
    let v = f(x);
    if v.is_nan() {
        f64::INFINITY
    } else {
        v
    }
}

fn combine(a: &[f64], b: &[f64], t: f64) -> Vec<f64> {
    // a + t·(b − a)
    a.iter().zip(b).map(|(ai, bi)| ai + t * (bi - ai)).collect()
}

/// Minimize `f` from `x0`.
pub fn minimize<F>(mut f: F, x0: &[f64], opts: SimplexOptions) -> Minimum
where
    F: FnMut(&[f64]) -> f64,
{
    let dim = x0.len();
    let mut evals = 0;
    let mut simplex: Vec<(Vec<f64>, f64)> = Vec::with_capacity(dim + 1);
    simplex.push((x0.to_vec(), eval(&mut f, x0, &mut evals)));
    for i in 0..dim {
        let mut v = x0.to_vec();
        v[i] += opts.step;
        let fv = eval(&mut f, &v, &mut evals);
        simplex.push((v, fv));
    }

    let mut converged = false;
    while evals < opts.max_evals {
        simplex.sort_by(|a, b| a.1.total_cmp(&b.1));
        let best = &simplex[0].0;
        let scale = 1.0 + best.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        let diameter = simplex[1..]
            .iter()
            .map(|(v, _)| {
                v.iter()
                    .zip(best)
                    .fold(0.0f64, |m, (a, b)| m.max((a - b).abs()))
            })
            .fold(0.0, f64::max);
        if diameter <= opts.xtol * scale {
            converged = true;
            break;
        }

        let mut centroid = vec![0.0; dim];
        for (v, _) in &simplex[..dim] {
            for (c, vi) in centroid.iter_mut().zip(v) {
                *c += vi / dim as f64;
            }
        }
        let (worst, f_worst) = simplex[dim].clone();
        let f_best = simplex[0].1;
        let f_second = simplex[dim - 1].1;

        let reflected = combine(&centroid, &worst, -REFLECT);
        let f_ref = eval(&mut f, &reflected, &mut evals);
        if f_ref < f_best {
            let expanded = combine(&centroid, &worst, -EXPAND);
            let f_exp = eval(&mut f, &expanded, &mut evals);
            simplex[dim] = if f_exp < f_ref {
                (expanded, f_exp)
            } else {
                (reflected, f_ref)
            };
            continue;
        }
        if f_ref < f_second {
            simplex[dim] = (reflected, f_ref);
            continue;
        }
        let (contracted, f_con) = if f_ref < f_worst {
            let c = combine(&centroid, &reflected, CONTRACT);
            let fc = eval(&mut f, &c, &mut evals);
            (c, fc)
        } else {
            let c = combine(&centroid, &worst, CONTRACT);
            let fc = eval(&mut f, &c, &mut evals);
            (c, fc)
        };
        if f_con < f_worst.min(f_ref) {
            simplex[dim] = (contracted, f_con);
            continue;
        }
        let anchor = simplex[0].0.clone();
        for vertex in simplex.iter_mut().skip(1) {
            let v = combine(&anchor, &vertex.0, SHRINK);
            let fv = eval(&mut f, &v, &mut evals);
            *vertex = (v, fv);
        }
    }
    simplex.sort_by(|a, b| a.1.total_cmp(&b.1));
    let (x, fx) = simplex.swap_remove(0);
    Minimum {
        x,
        fx,
        evals,
        converged,
    }
}
