//! Orthogonal-polynomial sequences by forward three-term recursion.
//!
//! All four families are entire in the argument, so complex arguments go
//! through the same recursions. Forward recursion is stable on the ranges
//! used here (|x| near the orthogonality support); closed forms are
//! cross-checked against integral oracles in the tests.

use num_complex::Complex64;

/// Gegenbauer (ultraspherical) C_0^a(x) .. C_nmax^a(x).
///
/// (n+1) C_{n+1} = 2(n+a) x C_n - (n+2a-1) C_{n-1}, C_0 = 1, C_1 = 2ax.
pub fn gegenbauer_seq(n_max: usize, a: f64, x: Complex64) -> Vec<Complex64> {
    let mut out = Vec::with_capacity(n_max + 1);
    out.push(Complex64::new(1.0, 0.0));
    if n_max == 0 {
        return out;
    }
    out.push(2.0 * a * x);
    for n in 1..n_max {
        let nf = n as f64;
        let next = (2.0 * (nf + a) * x * out[n] - (nf + 2.0 * a - 1.0) * out[n - 1]) / (nf + 1.0);
        out.push(next);
    }
    out
}

/// Associated Gegenbauer (Wimp) C_0^a(x,1) .. C_nmax^a(x,1): the same
/// recursion with coefficients shifted by one unit,
///   2(n+a+1) x C_n = (2a+n) C_{n-1} + (n+2) C_{n+1},
/// seeded C_{-1} = 0, C_0 = 1 (so C_1 = (a+1) x).
pub fn assoc_gegenbauer_seq(n_max: usize, a: f64, x: Complex64) -> Vec<Complex64> {
    let mut out = Vec::with_capacity(n_max + 1);
    out.push(Complex64::new(1.0, 0.0));
    if n_max == 0 {
        return out;
    }
    out.push((a + 1.0) * x);
    for n in 1..n_max {
        let nf = n as f64;
        let next = (2.0 * (nf + a + 1.0) * x * out[n] - (2.0 * a + nf) * out[n - 1]) / (nf + 2.0);
        out.push(next);
    }
    out
}

/// Generalized Laguerre L_0^β(y) .. L_nmax^β(y).
///
/// (n+1) L_{n+1} = (2n+β+1-y) L_n - (n+β) L_{n-1}, L_0 = 1, L_1 = β+1-y.
pub fn laguerre_seq(n_max: usize, beta: f64, y: Complex64) -> Vec<Complex64> {
    debug_assert!(beta > -1.0);
    let mut out = Vec::with_capacity(n_max + 1);
    out.push(Complex64::new(1.0, 0.0));
    if n_max == 0 {
        return out;
    }
    out.push(beta + 1.0 - y);
    for n in 1..n_max {
        let nf = n as f64;
        let next =
            ((2.0 * nf + beta + 1.0 - y) * out[n] - (nf + beta) * out[n - 1]) / (nf + 1.0);
        out.push(next);
    }
    out
}

/// Laguerre polynomials of the second kind (Wimp) L_0^ν(x,1) .. L_nmax^ν(x,1):
/// Laguerre recursion with coefficients shifted by one unit,
///   (2n+ν+3-x) L_n = (n+ν+1) L_{n-1} + (n+2) L_{n+1},
/// seeded L_{-1} = 0, L_0 = 1 (so L_1 = (ν+3-x)/2).
pub fn assoc_laguerre_seq(n_max: usize, nu: f64, x: Complex64) -> Vec<Complex64> {
    let mut out = Vec::with_capacity(n_max + 1);
    out.push(Complex64::new(1.0, 0.0));
    if n_max == 0 {
        return out;
    }
    out.push((nu + 3.0 - x) / 2.0);
    for n in 1..n_max {
        let nf = n as f64;
        let next =
            ((2.0 * nf + nu + 3.0 - x) * out[n] - (nf + nu + 1.0) * out[n - 1]) / (nf + 2.0);
        out.push(next);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    #[test]
    fn gegenbauer_low_orders() {
        let seq = gegenbauer_seq(2, 1.0, c(0.8));
        assert_eq!(seq[0], c(1.0));
        assert!((seq[1] - c(1.6)).norm() < 1e-15); // 2 a x
        // Chebyshev-U oracle: U_2(0.8) = 4x^2 - 1 = 1.56
        assert!((seq[2] - c(1.56)).norm() < 1e-14);
    }

    #[test]
    fn gegenbauer_chebyshev_u_oracle() {
        // C_n^1(cos t) = sin((n+1)t)/sin(t)
        let t: f64 = 0.9273;
        let seq = gegenbauer_seq(40, 1.0, c(t.cos()));
        for (n, v) in seq.iter().enumerate() {
            let oracle = ((n as f64 + 1.0) * t).sin() / t.sin();
            assert!((v.re - oracle).abs() < 1e-12 * oracle.abs().max(1.0), "n={n}");
        }
    }

    #[test]
    fn assoc_gegenbauer_low_orders() {
        let a = 1.0;
        let seq = assoc_gegenbauer_seq(2, a, c(0.8));
        assert_eq!(seq[0], c(1.0));
        assert!((seq[1] - c((a + 1.0) * 0.8)).norm() < 1e-15);
        // two hand iterations with a = 1: C_2 = 4 x^2 - 1
        assert!((seq[2] - c(4.0 * 0.64 - 1.0)).norm() < 1e-14);
    }

    #[test]
    fn laguerre_low_orders() {
        let seq = laguerre_seq(2, 0.0, c(1.0));
        assert_eq!(seq[0], c(1.0));
        assert!((seq[1] - c(0.0)).norm() < 1e-15); // beta+1-y = 0
        // closed-form sum: L_2(1) = 1 - 2 + 1/2 = -0.5
        assert!((seq[2] - c(-0.5)).norm() < 1e-15);
        let s2 = laguerre_seq(1, 1.5, c(0.3));
        assert!((s2[1] - c(1.5 + 1.0 - 0.3)).norm() < 1e-15);
    }

    #[test]
    fn assoc_laguerre_low_orders() {
        let nu = 1.5;
        let seq = assoc_laguerre_seq(2, nu, c(2.0));
        assert_eq!(seq[0], c(1.0));
        assert!((seq[1] - c((nu + 3.0 - 2.0) / 2.0)).norm() < 1e-15);
        // hand-iterated: (2+nu+3-x) L_1 = (nu+2) L_0 + 3 L_2
        let l2 = ((2.0 + nu + 3.0 - 2.0) * 1.25 - (nu + 2.0)) / 3.0;
        assert!((seq[2] - c(l2)).norm() < 1e-14);
    }

    #[test]
    fn complex_arguments_entire() {
        let x = Complex64::new(0.9, -0.4);
        let g = gegenbauer_seq(50, 2.25, x);
        assert!(g.iter().all(|v| v.is_finite()));
        let l = assoc_laguerre_seq(50, 0.75, x);
        assert!(l.iter().all(|v| v.is_finite()));
    }
}
