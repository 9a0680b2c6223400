//! Log-gamma and reciprocal-gamma kernels.

use std::f64::consts::PI;

/// Lanczos coefficients, g = 7, n = 9 (GSL / Numerical Recipes set).
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// ln Γ(x) for x > 0 by the Lanczos approximation (relative error ~1e-15).
pub fn ln_gamma(x: f64) -> f64 {
    assert!(x > 0.0, "ln_gamma requires x > 0, got {x}");
    if x < 0.5 {
        // reflection keeps the argument of the core sum away from 0
        return (PI / (PI * x).sin()).ln() - ln_gamma(1.0 - x);
    }
    let z = x - 1.0;
    let mut acc = LANCZOS[0];
    for (i, &c) in LANCZOS.iter().enumerate().skip(1) {
        acc += c / (z + i as f64);
    }
    let t = z + 7.5;
    0.5 * (2.0 * PI).ln() + (z + 0.5) * t.ln() - t + acc.ln()
}

/// Γ(x) for any non-pole real x, via reflection for x ≤ 0.
pub fn gamma(x: f64) -> f64 {
    if x > 0.0 {
        ln_gamma(x).exp()
    } else {
        let s = (PI * x).sin();
        if s == 0.0 {
            f64::NAN
        } else {
            PI / (s * (ln_gamma(1.0 - x)).exp())
        }
    }
}

/// Taylor coefficients of 1/Γ(1+z) = Σ c_k z^(k-1) (k ≥ 1); Abramowitz &
/// Stegun 6.1.34.
const RECIP_GAMMA: [f64; 18] = [
    1.000_000_000_000_000_0,
    0.577_215_664_901_532_9,
    -0.655_878_071_520_253_8,
    -0.042_002_635_034_095_2,
    0.166_538_611_382_291_5,
    -0.042_197_734_555_544_3,
    -0.009_621_971_527_877_0,
    0.007_218_943_246_663_0,
    -0.001_165_167_591_859_1,
    -0.000_215_241_674_114_9,
    0.000_128_050_282_388_2,
    -0.000_020_134_854_780_7,
    -0.000_001_250_493_482_1,
    0.000_001_133_027_232_0,
    -0.000_000_205_633_841_7,
    0.000_000_006_116_095_0,
    0.000_000_005_002_007_5,
    -0.000_000_001_181_274_6,
];

/// The pair (gam1, gam2) with
///   gam1 = (1/Γ(1-μ) - 1/Γ(1+μ)) / (2μ),
///   gam2 = (1/Γ(1-μ) + 1/Γ(1+μ)) / 2,
/// evaluated by the Taylor series so that μ → 0 is regular. Valid |μ| ≤ 1/2.
pub fn gamma_pair(mu: f64) -> (f64, f64) {
    debug_assert!(mu.abs() <= 0.5 + 1e-12);
    let m2 = mu * mu;
    let mut gam1 = 0.0;
    let mut gam2 = 0.0;
    let mut pw = 1.0;
    let mut idx = 0;
    while idx < RECIP_GAMMA.len() {
        gam2 += RECIP_GAMMA[idx] * pw;
        if idx + 1 < RECIP_GAMMA.len() {
            gam1 -= RECIP_GAMMA[idx + 1] * pw;
        }
        pw *= m2;
        idx += 2;
    }
    (gam1, gam2)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ln_gamma_known_values() {
        assert!((ln_gamma(1.0)).abs() < 1e-15);
        assert!((ln_gamma(2.0)).abs() < 1e-15);
        assert!((ln_gamma(0.5) - (PI.sqrt()).ln()).abs() < 1e-14);
        // Gamma(11) = 10!
        assert!(((ln_gamma(11.0) - (3628800.0f64).ln()) / (3628800.0f64).ln()).abs() < 1e-15);
    }

    #[test]
    fn ln_gamma_against_statrs() {
        for i in 1..400 {
            let x = 0.03 * i as f64;
            let rel = (ln_gamma(x) - statrs::function::gamma::ln_gamma(x)).abs()
                / statrs::function::gamma::ln_gamma(x).abs().max(1.0);
            assert!(rel < 5e-15, "x={x} rel={rel}");
        }
    }

    #[test]
    fn gamma_reflection() {
        // Gamma(-0.5) = -2 sqrt(pi)
        assert!((gamma(-0.5) + 2.0 * PI.sqrt()).abs() < 1e-13);
        assert!(gamma(-1.0).is_nan());
    }

    #[test]
    fn gamma_pair_consistency() {
        for &mu in &[0.5, 0.3, 0.11, 1e-3, 1e-8, 0.0, -0.25, -0.5] {
            let (g1, g2) = gamma_pair(mu);
            let gp = 1.0 / gamma(1.0 + mu); // 1/GAMMA(1+mu)
            let gm = 1.0 / gamma(1.0 - mu);
            assert!(((g2 - 0.5 * (gm + gp)) / g2).abs() < 1e-13, "mu={mu}");
            if mu.abs() > 1e-4 {
                let direct = (gm - gp) / (2.0 * mu);
                assert!((g1 - direct).abs() < 1e-10, "mu={mu} {g1} {direct}");
            } else {
                // limit value -psi(1) = Euler gamma
                assert!((g1 + 0.577_215_664_901_532_9).abs() < 1e-6);
            }
        }
    }
}
