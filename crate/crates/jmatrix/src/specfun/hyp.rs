//! The energy-dependent τ(x) factors multiplying the sine-like coefficients
//! inside the cosine-like ones, for both bases.
//!
//! Laguerre basis: τ(x) = x R_ν ₂F₁(1/2, ν+1; 3/2; x²) with
//! R_ν = 2Γ(ν+1)/(√π Γ(ν+1/2)), equivalently R_ν ∫_0^x (1-t²)^(-ν-1) dt.
//! The power series is used for |x| ≤ 0.8; beyond that the defining
//! integral is continued along a contour that clears the branch points
//! t = ±1 on the side selected by sign(Im x), which is the continuation
//! reached from Im E > 0.
//!
//! Oscillator basis: dτ/dx = R_ν x^(-ν-1/2) e^x with x = μ². The constant
//! R_ν (and the additive constant of integration) are not known in closed
//! form here; they are fixed once per ν by matching the reconstructed
//! cosine-like solution to the irregular solution (see `calibrate`).

use num_complex::Complex64;

use super::gamma::ln_gamma;
use super::quad::integrate_path;
use super::SpecFunError;
use crate::channel::upper_limit;

/// R_ν = 2Γ(ν+1)/(√π Γ(ν+1/2)).
pub(crate) fn tau_slope_constant(nu: f64) -> f64 {
    2.0 * (ln_gamma(nu + 1.0) - ln_gamma(nu + 0.5)).exp() / std::f64::consts::PI.sqrt()
}

fn contour_to(x: Complex64) -> [Complex64; 4] {
    // up, across, down; the detour height sits on the same side as Im x so
    // the path never crosses the cuts {t real, |t| > 1}.
    let side = if x.im >= 0.0 { 1.0 } else { -1.0 };
    let h = Complex64::new(0.0, 0.75 * side);
    [
        Complex64::new(0.0, 0.0),
        h,
        Complex64::new(x.re, 0.75 * side),
        x,
    ]
}

/// τ(x) for the Laguerre basis, principal-branch continuation off the
/// real interval (-1, 1).
pub fn tau_laguerre(nu: f64, x: Complex64) -> Result<Complex64, SpecFunError> {
    let x = upper_limit(x);
    let r_nu = tau_slope_constant(nu);
    if x.norm() <= 0.8 {
        // x R 2F1(1/2, nu+1; 3/2; x^2) as a power series
        let z = x * x;
        let mut term = Complex64::new(1.0, 0.0);
        let mut sum = term;
        for j in 0..600 {
            let jf = j as f64;
            term *= z * (nu + 1.0 + jf) * (2.0 * jf + 1.0) / ((jf + 1.0) * (2.0 * jf + 3.0));
            sum += term;
            if term.norm() <= 1e-17 * sum.norm() {
                return Ok(x * r_nu * sum);
            }
        }
        return Err(SpecFunError::NonConvergence(format!(
            "tau series stalled at nu={nu}, x={x}"
        )));
    }
    let val = integrate_path(
        |t| (upper_limit((1.0 - t) * (1.0 + t))).powc(Complex64::new(-nu - 1.0, 0.0)),
        &contour_to(x),
        1e-13,
    )?;
    Ok(r_nu * val)
}

/// Is ν within `tol` of the family 1/2, 3/2, 5/2, ... where the Kummer
/// parameters of the oscillator τ degenerate?
pub(crate) fn half_integer_index(nu: f64, tol: f64) -> Option<i64> {
    let m = (nu - 0.5).round();
    if m >= 0.0 && (nu - 0.5 - m).abs() < tol {
        Some(m as i64)
    } else {
        None
    }
}

/// The ν-dependent antiderivative F(x) with F'(x) = x^(-ν-1/2) e^x, as a
/// fixed single-valued function: for generic ν the Kummer form
/// F = x^(1/2-ν) ₁F₁(1/2-ν; 3/2-ν; x)/(ν-1/2) (principal branch of the
/// power, continued from Im x > 0 on the negative axis); for ν in the
/// degenerate family 1/2 + m the contour integral ∫_1^x t^(-m-1) e^t dt,
/// carried around the pole at t = 0 on the Im-x side.
pub(crate) fn tau_antiderivative(nu: f64, x: Complex64) -> Result<Complex64, SpecFunError> {
    let x = upper_limit(x);
    if let Some(m) = half_integer_index(nu, 1e-9) {
        let side = if x.im >= 0.0 { 1.0 } else { -1.0 };
        let h = Complex64::new(0.0, 0.75 * side);
        let path = [
            Complex64::new(1.0, 0.0),
            Complex64::new(1.0, 0.0) + h,
            Complex64::new(x.re, 0.75 * side),
            x,
        ];
        let p = -(m as f64) - 1.0;
        return integrate_path(|t| t.powc(Complex64::new(p, 0.0)) * t.exp(), &path, 1e-13);
    }
    let a = 0.5 - nu;
    let f1 = if x.re >= 0.0 {
        // sum_j [a/(a+j)] x^j / j!
        let mut term = Complex64::new(1.0, 0.0);
        let mut sum = Complex64::new(a / a, 0.0); // j = 0 contributes 1
        let mut converged = false;
        for j in 1..900 {
            let jf = j as f64;
            term *= x / jf;
            let denom = a + jf;
            sum += term * (a / denom);
            if term.norm() * (a / denom).abs() <= 1e-17 * sum.norm().max(1e-250) && jf > x.norm() {
                converged = true;
                break;
            }
        }
        if !converged {
            return Err(SpecFunError::NonConvergence(format!(
                "kummer series stalled at nu={nu}, x={x}"
            )));
        }
        sum
    } else {
        // Kummer transformation M(a;a+1;x) = e^x M(1;a+1;-x): positive-term
        // series for Re x < 0, avoids the e^{|x|} cancellation.
        let w = -x;
        let mut term = Complex64::new(1.0, 0.0);
        let mut sum = term;
        let mut converged = false;
        for j in 1..900 {
            let jf = j as f64;
            term *= w / (a + jf);
            sum += term;
            if term.norm() <= 1e-17 * sum.norm().max(1e-250) {
                converged = true;
                break;
            }
        }
        if !converged {
            return Err(SpecFunError::NonConvergence(format!(
                "kummer series stalled at nu={nu}, x={x}"
            )));
        }
        x.exp() * sum
    };
    Ok(x.powc(Complex64::new(0.5 - nu, 0.0)) * f1 / (nu - 0.5))
}

/// τ(μ) for the oscillator basis: R_ν F(μ²) + τ₀ with (R_ν, τ₀) fixed by
/// asymptotic matching (cached per ν).
pub fn tau_oscillator(nu: f64, mu: Complex64) -> Result<Complex64, SpecFunError> {
    if mu.norm() == 0.0 {
        return Err(SpecFunError::Domain("tau_oscillator needs mu != 0".into()));
    }
    let (r_nu, tau0) = super::calibrate::oscillator_tau_constants(nu)?;
    let x = upper_limit(mu * mu);
    Ok(r_nu * tau_antiderivative(nu, x)? + tau0)
}
