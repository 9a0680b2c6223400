//! Scattering observables for radial potentials with an inverse-square
//! singularity, V(r) = A/2r² + U(r), computed with the J-matrix method.
//!
//! The singular A/2r² term is absorbed into the reference Hamiltonian
//! together with the orbital term, so the reference problem is solved
//! analytically (Bessel solutions of effective order ν = √((ℓ+1/2)²+A))
//! while the regular short-range part U(r) is treated numerically in a
//! finite basis. Both a Laguerre basis and an oscillator basis are
//! supported; they give the same observables and serve as mutual checks.
//!
//! The crate computes:
//! - sine-like / cosine-like reference solutions and their expansion
//!   coefficients ([`laguerre`], [`oscillator`]),
//! - finite-basis Hamiltonians, spectra and the finite Green's function
//!   ([`hamiltonian`]),
//! - the S-matrix, phase shifts, bound states and resonance poles in the
//!   complex energy plane ([`smatrix`]).
//!
//! Only the real representation is implemented: (ℓ+1/2)² + A must be
//! strictly positive so that ν is real.

pub mod channel;
pub mod hamiltonian;
pub mod laguerre;
pub mod oscillator;
mod recursion;
pub mod smatrix;
pub mod specfun;

pub use channel::{BasisConfig, BasisKind, ChannelError, ChannelSpec, EnergyPoint};
pub use hamiltonian::{FiniteSpectra, HamiltonianError, PotentialModel};
pub use laguerre::{CoefficientTable, Convention, TridiagonalOperator};
pub use smatrix::{ResonanceResult, SMatrixError, SMatrixResult, Scattering};
pub use specfun::{QuadratureRule, SpecFunError};

/// Complex double used throughout.
pub type C64 = num_complex::Complex64;
