//! The reference three-term recursions shared by both bases, plus stable
//! evaluation of the decaying solution by backward (Miller) recursion.
//!
//! At complex energies one of the two combinations c ± i s grows and the
//! other decays in n. Closed forms evaluate the growing one to full
//! relative accuracy, but lose the decaying one to cancellation; backward
//! recursion normalized through the inhomogeneous first row recovers it.

use num_complex::Complex64;

#[derive(Debug, Clone, Copy)]
pub(crate) enum Recurrence {
    /// (2n+2ν+1) x a_n = √(n(n+2ν)) a_{n-1} + √((n+1)(n+2ν+1)) a_{n+1}
    Laguerre { nu: f64, x: Complex64 },
    /// (2n+ν+1-x) a_n + √(n(n+ν)) a_{n-1} + √((n+1)(n+ν+1)) a_{n+1} = 0
    Oscillator { nu: f64, x: Complex64 },
}

impl Recurrence {
    /// a_{n+1} from (a_{n-1}, a_n), row n ≥ 1.
    pub fn step_up(&self, n: usize, prev: Complex64, cur: Complex64) -> Complex64 {
        let nf = n as f64;
        match *self {
            Recurrence::Laguerre { nu, x } => {
                ((2.0 * nf + 2.0 * nu + 1.0) * x * cur - (nf * (nf + 2.0 * nu)).sqrt() * prev)
                    / ((nf + 1.0) * (nf + 2.0 * nu + 1.0)).sqrt()
            }
            Recurrence::Oscillator { nu, x } => {
                (-(2.0 * nf + nu + 1.0 - x) * cur - (nf * (nf + nu)).sqrt() * prev)
                    / ((nf + 1.0) * (nf + nu + 1.0)).sqrt()
            }
        }
    }

    /// a_{n-1} from (a_n, a_{n+1}), row n ≥ 1.
    pub fn step_down(&self, n: usize, cur: Complex64, next: Complex64) -> Complex64 {
        let nf = n as f64;
        match *self {
            Recurrence::Laguerre { nu, x } => {
                ((2.0 * nf + 2.0 * nu + 1.0) * x * cur
                    - ((nf + 1.0) * (nf + 2.0 * nu + 1.0)).sqrt() * next)
                    / (nf * (nf + 2.0 * nu)).sqrt()
            }
            Recurrence::Oscillator { nu, x } => {
                (-(2.0 * nf + nu + 1.0 - x) * cur
                    - ((nf + 1.0) * (nf + nu + 1.0)).sqrt() * next)
                    / (nf * (nf + nu)).sqrt()
            }
        }
    }

    /// Residual of row n against the stored triple, scaled by the largest
    /// term. Row 0 is the (inhomogeneous) initial row and is excluded.
    pub fn row_residual(&self, n: usize, prev: Complex64, cur: Complex64, next: Complex64) -> f64 {
        let nf = n as f64;
        let (lhs, r1, r2) = match *self {
            Recurrence::Laguerre { nu, x } => (
                (2.0 * nf + 2.0 * nu + 1.0) * x * cur,
                (nf * (nf + 2.0 * nu)).sqrt() * prev,
                ((nf + 1.0) * (nf + 2.0 * nu + 1.0)).sqrt() * next,
            ),
            Recurrence::Oscillator { nu, x } => (
                -(2.0 * nf + nu + 1.0 - x) * cur,
                (nf * (nf + nu)).sqrt() * prev,
                ((nf + 1.0) * (nf + nu + 1.0)).sqrt() * next,
            ),
        };
        let scale = lhs.norm().max(r1.norm()).max(r2.norm()).max(1e-300);
        (lhs - r1 - r2).norm() / scale
    }
}

/// Forward recursion from (a_0, a_1) up to a_{n_max}; stable for the
/// dominant solution.
pub(crate) fn forward(
    rec: &Recurrence,
    a0: Complex64,
    a1: Complex64,
    n_max: usize,
) -> Vec<Complex64> {
    let mut out = Vec::with_capacity(n_max + 1);
    out.push(a0);
    if n_max == 0 {
        return out;
    }
    out.push(a1);
    for n in 1..n_max {
        let next = rec.step_up(n, out[n - 1], out[n]);
        out.push(next);
    }
    out
}

/// The decaying solution at indices (n_max - 1, n_max), normalized so that
/// j00·a_0 + j01·a_1 = gamma (the inhomogeneous first row both cosine-like
/// combinations satisfy). Backward recursion from a trial seed converges
/// onto the minimal solution; the buffer is grown until the result is
/// stationary.
pub(crate) fn miller_decaying(
    rec: &Recurrence,
    j00: Complex64,
    j01: Complex64,
    gamma: Complex64,
    n_max: usize,
) -> Option<(Complex64, Complex64)> {
    let mut buffer = 48usize;
    let mut previous: Option<(Complex64, Complex64)> = None;
    loop {
        let start = n_max + buffer;
        let mut next = Complex64::new(0.0, 0.0); // a_{start+1} trial seed
        let mut cur = Complex64::new(1.0, 0.0); // a_{start}
        let mut at_nmax = if n_max == start { cur } else { Complex64::new(0.0, 0.0) };
        let mut at_nmax_m1 = Complex64::new(0.0, 0.0);
        let mut b0 = Complex64::new(0.0, 0.0);
        let mut b1 = Complex64::new(0.0, 0.0);
        for n in (1..=start).rev() {
            let prev = rec.step_down(n, cur, next);
            next = cur;
            cur = prev;
            let idx = n - 1; // index of `cur`
            if idx == n_max {
                at_nmax = cur;
            }
            if idx == n_max - 1 {
                at_nmax_m1 = cur;
            }
            if idx == 1 {
                b1 = cur;
            }
            if idx == 0 {
                b0 = cur;
            }
            let m = cur.norm().max(next.norm());
            if m > 1e260 {
                let s = 1e-260;
                cur *= s;
                next *= s;
                at_nmax *= s;
                at_nmax_m1 *= s;
                b0 *= s;
                b1 *= s;
            }
        }
        let denom = j00 * b0 + j01 * b1;
        if denom.norm() < 1e-290 {
            return None;
        }
        let rho = gamma / denom;
        let cand = (rho * at_nmax_m1, rho * at_nmax);
        if let Some(prev) = previous {
            let d0 = (cand.0 - prev.0).norm();
            let d1 = (cand.1 - prev.1).norm();
            if d0 <= 1e-13 * cand.0.norm().max(1e-290) && d1 <= 1e-13 * cand.1.norm().max(1e-290)
            {
                return Some(cand);
            }
        }
        previous = Some(cand);
        buffer *= 2;
        if buffer > 16384 {
            return previous;
        }
    }
}
