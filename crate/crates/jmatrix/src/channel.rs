//! Channel parameters and energy kinematics.
//!
//! A channel is the pair (ℓ, A): angular momentum plus the strength of the
//! inverse-square term A/2r². Everything downstream depends on them only
//! through the effective Bessel order ν = √((ℓ+1/2)² + A), which must be
//! real and positive here (the real representation).

use num_complex::Complex64;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ChannelError {
    /// (ℓ+1/2)² + A ≤ 0: ν would be zero or imaginary. The imaginary-ν
    /// regime needs Bessel functions of imaginary order and is not
    /// implemented; ν = 0 is excluded because J_ν and J_{-ν} degenerate.
    #[error("real representation violated: (l+1/2)^2 + A = {discriminant} <= 0 for l={ell}, A={strength}")]
    RealRepresentationViolation {
        ell: u32,
        strength: f64,
        discriminant: f64,
    },
    /// The kinematic map degenerates: E = 0 (x = ±1) or, in the Laguerre
    /// basis, 4μ² + 1 = 0. Callers must perturb or reject such energies.
    #[error("singular kinematics at E = {re}{im:+}i")]
    SingularKinematics { re: f64, im: f64 },
    #[error("invalid basis: {0}")]
    InvalidBasis(String),
}

/// Scattering channel: angular momentum ℓ and inverse-square strength A
/// (atomic units, V_sing = A/2r²).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChannelSpec {
    ell: u32,
    strength: f64,
}

impl ChannelSpec {
    /// A = 0 is accepted as a degenerate convenience (reduces to the
    /// ordinary problem with ν = ℓ + 1/2).
    pub fn new(ell: u32, strength: f64) -> Result<Self, ChannelError> {
        let half = ell as f64 + 0.5;
        let disc = half * half + strength;
        if disc <= 0.0 {
            return Err(ChannelError::RealRepresentationViolation {
                ell,
                strength,
                discriminant: disc,
            });
        }
        Ok(Self { ell, strength })
    }

    pub fn ell(&self) -> u32 {
        self.ell
    }

    pub fn strength(&self) -> f64 {
        self.strength
    }

    /// Effective Bessel order ν = √((ℓ+1/2)² + A). Recomputed from the
    /// stored (ℓ, A) so repeated calls are bit-identical.
    pub fn nu(&self) -> f64 {
        let half = self.ell as f64 + 0.5;
        (half * half + self.strength).sqrt()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BasisKind {
    /// φ_n(y) = A_n y^(ν+1/2) e^(-y/2) L_n^(2ν)(y), y = λr. Not orthogonal;
    /// the overlap matrix is tridiagonal.
    Laguerre,
    /// φ_n(y) = A_n y^((ν+1/2)/2) e^(-y/2) L_n^ν(y), y = (λr)². Orthonormal.
    Oscillator,
}

/// Basis selection: kind, scale λ > 0 and inner-region dimension N ≥ 2.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BasisConfig {
    pub kind: BasisKind,
    pub lambda: f64,
    pub n_basis: usize,
}

impl BasisConfig {
    pub fn new(kind: BasisKind, lambda: f64, n_basis: usize) -> Result<Self, ChannelError> {
        if !(lambda > 0.0) || !lambda.is_finite() {
            return Err(ChannelError::InvalidBasis(format!(
                "scale lambda must be positive and finite, got {lambda}"
            )));
        }
        if n_basis < 2 {
            return Err(ChannelError::InvalidBasis(format!(
                "basis dimension must be >= 2, got {n_basis}"
            )));
        }
        Ok(Self {
            kind,
            lambda,
            n_basis,
        })
    }

    /// Laguerre exponents are fully derived from the channel: α = ν + 1/2,
    /// β = 2ν (tridiagonality constraints 2α = β + 1, β = 2ν). Oscillator:
    /// β = ν, 2α = β + 1/2.
    pub fn exponents(&self, channel: &ChannelSpec) -> (f64, f64) {
        let nu = channel.nu();
        match self.kind {
            BasisKind::Laguerre => (nu + 0.5, 2.0 * nu),
            BasisKind::Oscillator => (0.5 * (nu + 0.5), nu),
        }
    }
}

/// One energy with all derived kinematic quantities.
///
/// k = √(2E) on the principal branch (arg ∈ (−π, π]), μ = k/λ. The basis
/// argument is x = cos θ = (4μ²−1)/(4μ²+1) for the Laguerre basis and
/// x = μ² for the oscillator basis. The principal branch continues
/// analytically from the positive real axis into the lower half plane
/// (resonances) and maps E < 0 onto k = +i|k| (bound states).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnergyPoint {
    pub e: Complex64,
    pub k: Complex64,
    pub mu: Complex64,
    pub x: Complex64,
    /// sin θ = √(1−x²), principal branch. Laguerre only.
    pub sin_theta: Option<Complex64>,
    pub kind: BasisKind,
}

/// Replace a signed-zero imaginary part by +0.0 so that principal-branch
/// functions on the negative real axis take their upper-side limit, the
/// one continuous with Im E > 0.
pub(crate) fn upper_limit(z: Complex64) -> Complex64 {
    if z.im == 0.0 {
        Complex64::new(z.re, 0.0)
    } else {
        z
    }
}

impl EnergyPoint {
    pub fn new(e: Complex64, basis: &BasisConfig) -> Result<Self, ChannelError> {
        let e = upper_limit(e);
        let singular = || ChannelError::SingularKinematics { re: e.re, im: e.im };
        if e == Complex64::new(0.0, 0.0) {
            return Err(singular());
        }
        let k = upper_limit((2.0 * e).sqrt());
        let mu = k / basis.lambda;
        let mu2 = upper_limit(mu * mu);
        match basis.kind {
            BasisKind::Laguerre => {
                let den = 4.0 * mu2 + 1.0;
                if den.norm() < 1e-300 {
                    return Err(singular());
                }
                let x = upper_limit((4.0 * mu2 - 1.0) / den);
                if x == Complex64::new(1.0, 0.0) || x == Complex64::new(-1.0, 0.0) {
                    return Err(singular());
                }
                // (1-x)(1+x) keeps the side information carried by x itself.
                let sin_theta = upper_limit((1.0 - x) * (1.0 + x)).sqrt();
                Ok(Self {
                    e,
                    k,
                    mu,
                    x,
                    sin_theta: Some(sin_theta),
                    kind: BasisKind::Laguerre,
                })
            }
            BasisKind::Oscillator => Ok(Self {
                e,
                k,
                mu,
                x: mu2,
                sin_theta: None,
                kind: BasisKind::Oscillator,
            }),
        }
    }

    /// Wronskian of the regular and irregular reference solutions, W = 4k/π.
    pub fn wronskian(&self) -> Complex64 {
        4.0 * self.k / std::f64::consts::PI
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nu_values() {
        assert_eq!(ChannelSpec::new(1, -2.0).unwrap().nu(), 0.5);
        assert_eq!(ChannelSpec::new(2, -4.0).unwrap().nu(), 1.5);
        assert_eq!(ChannelSpec::new(1, 4.0).unwrap().nu(), 2.5);
        // l(l+1) + A = L(L+1) with integer L gives nu = L + 1/2
        let ch = ChannelSpec::new(3, -6.0).unwrap(); // 12 - 6 = 6 = 2*3
        assert!((ch.nu() - 2.5).abs() < 1e-15);
    }

    #[test]
    fn real_representation_guard() {
        assert!(matches!(
            ChannelSpec::new(0, -0.25),
            Err(ChannelError::RealRepresentationViolation { .. })
        ));
        assert!(matches!(
            ChannelSpec::new(0, -1.0),
            Err(ChannelError::RealRepresentationViolation { .. })
        ));
        // A = 0 is allowed
        assert_eq!(ChannelSpec::new(0, 0.0).unwrap().nu(), 0.5);
    }

    #[test]
    fn laguerre_kinematics_real_energy() {
        let basis = BasisConfig::new(BasisKind::Laguerre, 1.0, 10).unwrap();
        // mu = 1.5 -> x = 0.8, sin = 0.6
        let e = Complex64::new(1.125, 0.0);
        let p = EnergyPoint::new(e, &basis).unwrap();
        assert!((p.x.re - 0.8).abs() < 1e-15 && p.x.im == 0.0);
        assert!((p.sin_theta.unwrap().re - 0.6).abs() < 1e-15);
        // E = lambda^2/8 -> mu^2 = 1/4, x = 0
        let p0 = EnergyPoint::new(Complex64::new(0.125, 0.0), &basis).unwrap();
        assert!(p0.x.norm() < 1e-16);
        assert!((p0.sin_theta.unwrap().re - 1.0).abs() < 1e-15);
    }

    #[test]
    fn oscillator_kinematics() {
        let basis = BasisConfig::new(BasisKind::Oscillator, 2.0, 10).unwrap();
        let p = EnergyPoint::new(Complex64::new(3.0, 0.0), &basis).unwrap();
        assert!((p.x.re - 1.5).abs() < 1e-15); // x = 2E/lambda^2
        assert!(p.sin_theta.is_none());
    }

    #[test]
    fn wronskian_identity() {
        // (2 lambda / pi) sqrt((1+x)/(1-x)) = 4k/pi for real E > 0
        for &(e, lam) in &[(0.3, 0.7), (1.125, 1.0), (7.9, 3.2), (19.0, 5.5)] {
            let basis = BasisConfig::new(BasisKind::Laguerre, lam, 10).unwrap();
            let p = EnergyPoint::new(Complex64::new(e, 0.0), &basis).unwrap();
            let x = p.x.re;
            assert!(x > -1.0 && x < 1.0);
            let lhs = (2.0 * lam / std::f64::consts::PI) * ((1.0 + x) / (1.0 - x)).sqrt();
            let w = p.wronskian().re;
            assert!(((lhs - w) / w).abs() < 1e-14, "E={e} lam={lam}");
            // equivalent identity sqrt((1+x)/(1-x)) = 2 mu
            let rel = (((1.0 + x) / (1.0 - x)).sqrt() - 2.0 * p.mu.re) / (2.0 * p.mu.re);
            assert!(rel.abs() < 1e-14);
        }
    }

    #[test]
    fn singular_kinematics_rejected() {
        let basis = BasisConfig::new(BasisKind::Laguerre, 2.0, 10).unwrap();
        assert!(matches!(
            EnergyPoint::new(Complex64::new(0.0, 0.0), &basis),
            Err(ChannelError::SingularKinematics { .. })
        ));
        // mu^2 = -1/4  <=>  E = -lambda^2/8
        assert!(matches!(
            EnergyPoint::new(Complex64::new(-0.5, 0.0), &basis),
            Err(ChannelError::SingularKinematics { .. })
        ));
    }

    #[test]
    fn negative_energy_on_upper_side() {
        let basis = BasisConfig::new(BasisKind::Laguerre, 2.0, 10).unwrap();
        let p = EnergyPoint::new(Complex64::new(-1.0, 0.0), &basis).unwrap();
        // principal branch: k on the positive imaginary axis
        assert!(p.k.re.abs() < 1e-15 && p.k.im > 0.0);
        // here 4 mu^2 = -2 < -1, so x > 1
        assert!(p.x.re > 1.0 && p.x.im == 0.0);
    }

    #[test]
    fn purity() {
        let basis = BasisConfig::new(BasisKind::Laguerre, 3.7, 10).unwrap();
        let e = Complex64::new(2.34, -5.1);
        let a = EnergyPoint::new(e, &basis).unwrap();
        let b = EnergyPoint::new(e, &basis).unwrap();
        assert_eq!(a, b);
    }
}
