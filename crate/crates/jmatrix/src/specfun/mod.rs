//! Special-function and orthogonal-polynomial kernels: Gegenbauer and
//! associated Gegenbauer (Wimp), Laguerre and second-kind Laguerre, the
//! τ(x) hypergeometric factors, Bessel functions of real order, log-gamma,
//! and Gauss quadrature rule generation.

mod bessel;
mod calibrate;
mod gamma;
mod hyp;
mod poly;
mod quad;

use thiserror::Error;

pub use bessel::{bessel_jy, BesselJY};
pub use gamma::{gamma, ln_gamma};
pub use hyp::{tau_laguerre, tau_oscillator};
pub use poly::{assoc_gegenbauer_seq, assoc_laguerre_seq, gegenbauer_seq, laguerre_seq};
pub use quad::{gauss_rule, integrate, integrate_complex, integrate_path, QuadratureRule};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SpecFunError {
    #[error("series or continued fraction did not converge: {0}")]
    NonConvergence(String),
    /// ν - 1/2 hit the integer family where the Kummer parameters of the
    /// oscillator τ degenerate and the generic form is invalid.
    #[error("degenerate confluent parameters at nu = {0}")]
    DegenerateOrder(f64),
    #[error("symmetric tridiagonal eigen-solve failed")]
    EigenFailure,
    #[error("domain error: {0}")]
    Domain(String),
}
