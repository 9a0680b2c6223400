//! Numerical matching of the oscillator-basis τ constants.
//!
//! The cosine-like solution is the unique solution of
//! (H₀ - E) χ = γ φ₀ that vanishes at the origin and tends to the
//! irregular solution √(2kr) Y_ν(kr) at infinity. Variation of parameters
//! gives it in closed form through the two reference solutions, so the
//! projection c₀ = ⟨φ₀|χ_cos⟩ is a convergent double integral and
//! τ(x) = c₀/s₀ follows without any large-r fitting. Two energies then fix
//! the slope constant R_ν and the integration constant τ₀ of
//! dτ/dx = R_ν x^(-ν-1/2) e^x; a third energy cross-checks the pair.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_complex::Complex64;

use super::bessel::bessel_jy;
use super::gamma::ln_gamma;
use super::hyp::tau_antiderivative;
use super::SpecFunError;

// 16-point Gauss-Legendre on [-1, 1] (positive abscissae).
const GLX: [f64; 8] = [
    0.095_012_509_837_637_44,
    0.281_603_550_779_258_9,
    0.458_016_777_657_227_4,
    0.617_876_244_402_643_8,
    0.755_404_408_355_003_0,
    0.865_631_202_387_831_8,
    0.944_575_023_073_232_6,
    0.989_400_934_991_649_9,
];
const GLW: [f64; 8] = [
    0.189_450_610_455_068_5,
    0.182_603_415_044_923_6,
    0.169_156_519_395_002_5,
    0.149_595_988_816_576_7,
    0.124_628_971_255_533_9,
    0.095_158_511_682_492_8,
    0.062_253_523_938_647_9,
    0.027_152_459_411_754_1,
];

fn gl16<F: FnMut(f64) -> f64>(mut f: F, a: f64, b: f64) -> f64 {
    let mid = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let mut acc = 0.0;
    for i in 0..8 {
        acc += GLW[i] * (f(mid + half * GLX[i]) + f(mid - half * GLX[i]));
    }
    acc * half
}

/// ∬_{a ≤ t ≤ r ≤ b} g(r) h(t) dt dr over one panel, mapped to the unit
/// square (smooth there).
fn gl16_triangle<G: Fn(f64) -> f64, H: Fn(f64) -> f64>(g: &G, h: &H, a: f64, b: f64) -> f64 {
    let w = b - a;
    let mut acc = 0.0;
    for i in 0..16 {
        let (xu, wu) = node(i);
        let r = a + w * xu;
        let jac = w * (r - a);
        let gr = g(r);
        let mut inner = 0.0;
        for j in 0..16 {
            let (xv, wv) = node(j);
            inner += wv * h(a + (r - a) * xv);
        }
        acc += wu * gr * inner * jac;
    }
    acc
}

fn node(i: usize) -> (f64, f64) {
    // map the +-symmetric table to [0, 1]
    if i < 8 {
        (0.5 * (1.0 + GLX[i]), 0.5 * GLW[i])
    } else {
        (0.5 * (1.0 - GLX[i - 8]), 0.5 * GLW[i - 8])
    }
}

/// τ(x) at one real scattering energy by projecting the variation-of-
/// parameters form of χ_cos on φ₀. λ drops out of the result.
fn tau_matched(nu: f64, lambda: f64, mu: f64) -> Result<f64, SpecFunError> {
    let k = mu * lambda;
    let a0 = (2.0 * lambda / ln_gamma(nu + 1.0).exp()).sqrt();
    let phi0 = move |r: f64| {
        let y = (lambda * r) * (lambda * r);
        a0 * y.powf(0.5 * (nu + 0.5)) * (-0.5 * y).exp()
    };
    let r_max = (70.0f64).sqrt() / lambda;
    let panels = 96usize;
    let dr = r_max / panels as f64;
    // g = phi0 * chi_irr, h = phi0 * chi_sin (chi = sqrt(2kr) J/Y)
    let chi = |r: f64| -> Result<(f64, f64), SpecFunError> {
        let b = bessel_jy(nu, k * r)?;
        let amp = (2.0 * k * r).sqrt();
        Ok((amp * b.j, amp * b.y))
    };
    let g = |r: f64| {
        let (_, irr) = chi(r).unwrap_or((0.0, 0.0));
        phi0(r) * irr
    };
    let h = |r: f64| {
        let (sin_like, _) = chi(r).unwrap_or((0.0, 0.0));
        phi0(r) * sin_like
    };
    // probe one point so Bessel failures surface as errors, not zeros
    chi(0.5 * r_max)?;

    let mut g_int = vec![0.0; panels];
    let mut h_int = vec![0.0; panels];
    for p in 0..panels {
        let (a, b) = (p as f64 * dr, (p + 1) as f64 * dr);
        g_int[p] = gl16(g, a, b);
        h_int[p] = gl16(h, a, b);
    }
    let mut double_int = 0.0;
    let mut h_cum = 0.0;
    for p in 0..panels {
        let (a, b) = (p as f64 * dr, (p + 1) as f64 * dr);
        double_int += g_int[p] * h_cum;
        double_int += gl16_triangle(&g, &h, a, b);
        h_cum += h_int[p];
    }
    double_int *= 2.0; // kernel chi_irr(r_>) chi_sin(r_<) is symmetric
    let s0 = 2.0 * (1.0 / (lambda * ln_gamma(nu + 1.0).exp())).sqrt()
        * mu.powf(nu + 0.5)
        * (-0.5 * mu * mu).exp();
    Ok(double_int / (s0 * s0))
}

fn solve_constants(nu: f64) -> Result<(f64, f64), SpecFunError> {
    let lambda = 1.0;
    let mus = [0.9, 1.4, 1.15];
    let mut tau = [0.0; 3];
    let mut f = [0.0; 3];
    for (i, &m) in mus.iter().enumerate() {
        tau[i] = tau_matched(nu, lambda, m)?;
        let x = Complex64::new(m * m, 0.0);
        let fv = tau_antiderivative(nu, x)?;
        if fv.im.abs() > 1e-9 * fv.re.abs().max(1.0) {
            return Err(SpecFunError::NonConvergence(format!(
                "oscillator tau antiderivative not real at x={x}: {fv}"
            )));
        }
        f[i] = fv.re;
    }
    let r = (tau[0] - tau[1]) / (f[0] - f[1]);
    let tau0 = tau[0] - r * f[0];
    let check = r * f[2] + tau0;
    let scale = tau[2].abs().max(1.0);
    if ((check - tau[2]) / scale).abs() > 1e-7 {
        return Err(SpecFunError::NonConvergence(format!(
            "oscillator tau calibration inconsistent at nu={nu}: fit residual {:.3e}",
            (check - tau[2]).abs()
        )));
    }
    Ok((r, tau0))
}

/// (R_ν, τ₀) for the oscillator τ, computed on first use and cached.
pub(crate) fn oscillator_tau_constants(nu: f64) -> Result<(f64, f64), SpecFunError> {
    static CACHE: OnceLock<Mutex<HashMap<u64, (f64, f64)>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(&v) = cache.lock().unwrap().get(&nu.to_bits()) {
        return Ok(v);
    }
    let v = solve_constants(nu)?;
    cache.lock().unwrap().insert(nu.to_bits(), v);
    Ok(v)
}
