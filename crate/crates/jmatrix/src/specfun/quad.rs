//! Gauss quadrature rules (Golub–Welsch) and an adaptive Gauss–Kronrod
//! integrator used by oracles and by the analytic-continuation paths.

use nalgebra::DMatrix;
use num_complex::Complex64;

use super::gamma::ln_gamma;
use super::SpecFunError;

/// Nodes and weights for ∫_0^∞ y^α e^{-y} f(y) dy ≈ Σ w_k f(y_k).
#[derive(Debug, Clone)]
pub struct QuadratureRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
    pub weight_exponent: f64,
}

/// N-point generalized Gauss–Laguerre rule for the weight y^α e^{-y},
/// built from the symmetric Jacobi matrix of the Laguerre recurrence:
/// eigenvalues are the nodes, squared first eigenvector components times
/// Γ(α+1) are the weights.
pub fn gauss_rule(n: usize, weight_exponent: f64) -> Result<QuadratureRule, SpecFunError> {
    if n == 0 {
        return Err(SpecFunError::Domain("quadrature order must be >= 1".into()));
    }
    if weight_exponent <= -1.0 {
        return Err(SpecFunError::Domain(format!(
            "weight exponent must be > -1, got {weight_exponent}"
        )));
    }
    let alpha = weight_exponent;
    let jac = DMatrix::from_fn(n, n, |i, j| {
        if i == j {
            2.0 * i as f64 + alpha + 1.0
        } else if j == i + 1 || i == j + 1 {
            let k = i.max(j) as f64;
            (k * (k + alpha)).sqrt()
        } else {
            0.0
        }
    });
    let eig = jac.symmetric_eigen();
    for v in eig.eigenvalues.iter() {
        if !v.is_finite() {
            return Err(SpecFunError::EigenFailure);
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
    let mu0 = ln_gamma(alpha + 1.0).exp();
    let nodes: Vec<f64> = order.iter().map(|&k| eig.eigenvalues[k]).collect();
    let weights: Vec<f64> = order
        .iter()
        .map(|&k| {
            let v0 = eig.eigenvectors[(0, k)];
            mu0 * v0 * v0
        })
        .collect();
    Ok(QuadratureRule {
        nodes,
        weights,
        weight_exponent,
    })
}

// 15-point Kronrod extension of 7-point Gauss (positive abscissae).
const XK: [f64; 8] = [
    0.991_455_371_120_813,
    0.949_107_912_342_759,
    0.864_864_423_359_769,
    0.741_531_185_599_394,
    0.586_087_235_467_691,
    0.405_845_151_377_397,
    0.207_784_955_007_898,
    0.0,
];
const WK: [f64; 8] = [
    0.022_935_322_010_529,
    0.063_092_092_629_979,
    0.104_790_010_322_250,
    0.140_653_259_715_525,
    0.169_004_726_639_267,
    0.190_350_578_064_785,
    0.204_432_940_075_298,
    0.209_482_141_084_728,
];
// Gauss-7 weights for abscissae XK[1], XK[3], XK[5], XK[7].
const WG: [f64; 4] = [
    0.129_484_966_168_870,
    0.279_705_391_489_277,
    0.381_830_050_505_119,
    0.417_959_183_673_469,
];

fn gk15<F: FnMut(f64) -> Complex64>(f: &mut F, a: f64, b: f64) -> (Complex64, f64) {
    let mid = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let mut kron = Complex64::new(0.0, 0.0);
    let mut gauss = Complex64::new(0.0, 0.0);
    for i in 0..8 {
        let (fp, fm) = if XK[i] == 0.0 {
            let v = f(mid);
            (v, Complex64::new(0.0, 0.0))
        } else {
            (f(mid + half * XK[i]), f(mid - half * XK[i]))
        };
        kron += WK[i] * (fp + fm);
        if i % 2 == 1 || XK[i] == 0.0 {
            gauss += WG[i / 2] * (fp + fm);
        }
    }
    kron *= half;
    gauss *= half;
    let err = (kron - gauss).norm();
    (kron, err)
}

struct Segment {
    a: f64,
    b: f64,
    val: Complex64,
    err: f64,
}

/// Adaptive Gauss–Kronrod on [a, b] for a complex-valued integrand of a
/// real variable. `tol` is relative to the accumulated value with a small
/// absolute floor.
pub fn integrate_complex<F: FnMut(f64) -> Complex64>(
    mut f: F,
    a: f64,
    b: f64,
    tol: f64,
) -> Result<Complex64, SpecFunError> {
    const MAX_SEGMENTS: usize = 4096;
    let (val, err) = gk15(&mut f, a, b);
    let mut segs = vec![Segment { a, b, val, err }];
    loop {
        let total: Complex64 = segs.iter().map(|s| s.val).sum();
        let total_err: f64 = segs.iter().map(|s| s.err).sum();
        if total_err <= tol * total.norm().max(1e-280) || total_err <= 1e-305 {
            return Ok(total);
        }
        if segs.len() >= MAX_SEGMENTS {
            return Err(SpecFunError::NonConvergence(format!(
                "adaptive quadrature stalled: err {total_err:.3e} on {} segments",
                segs.len()
            )));
        }
        let worst = segs
            .iter()
            .enumerate()
            .max_by(|x, y| x.1.err.total_cmp(&y.1.err))
            .map(|(i, _)| i)
            .unwrap();
        let Segment { a, b, .. } = segs.swap_remove(worst);
        let mid = 0.5 * (a + b);
        if mid <= a || mid >= b {
            return Err(SpecFunError::NonConvergence(
                "adaptive quadrature hit an interval of zero width".into(),
            ));
        }
        let (v1, e1) = gk15(&mut f, a, mid);
        let (v2, e2) = gk15(&mut f, mid, b);
        segs.push(Segment {
            a,
            b: mid,
            val: v1,
            err: e1,
        });
        segs.push(Segment {
            a: mid,
            b,
            val: v2,
            err: e2,
        });
    }
}

/// Adaptive Gauss–Kronrod for real integrands.
pub fn integrate<F: FnMut(f64) -> f64>(mut f: F, a: f64, b: f64, tol: f64) -> Result<f64, SpecFunError> {
    integrate_complex(|t| Complex64::new(f(t), 0.0), a, b, tol).map(|v| v.re)
}

/// ∫ f(z) dz along the polyline through `waypoints` (straight segments,
/// each parametrized linearly).
pub fn integrate_path<F: Fn(Complex64) -> Complex64>(
    f: F,
    waypoints: &[Complex64],
    tol: f64,
) -> Result<Complex64, SpecFunError> {
    let mut total = Complex64::new(0.0, 0.0);
    for w in waypoints.windows(2) {
        let (za, zb) = (w[0], w[1]);
        if (zb - za).norm() < 1e-15 {
            continue;
        }
        total += integrate_complex(|t| f(za + (zb - za) * t) * (zb - za), 0.0, 1.0, tol)?;
    }
    Ok(total)
}
