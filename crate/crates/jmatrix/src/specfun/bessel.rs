//! Bessel functions J_ν, Y_ν of real order ν ≥ 0 at real argument z > 0.
//!
//! Steed's method: the CF1 continued fraction for J'/J, combined for z ≥ 2
//! with the complex CF2 for (J'+iY')/(J+iY), and for z < 2 with Temme's
//! series for Y_μ at small order. Downward/upward recurrences move between
//! the target order and the fractional order |μ| ≤ 1/2. Used as a
//! validation oracle, not on the per-energy hot path.

use super::gamma::gamma_pair;
use super::SpecFunError;
use std::f64::consts::{FRAC_2_PI, PI};

const EPS: f64 = 1e-16;
const FPMIN: f64 = 1e-290;
const MAX_ITER: usize = 20_000;
const XMIN: f64 = 2.0;

/// Values and derivatives of both kinds at one point.
#[derive(Debug, Clone, Copy)]
pub struct BesselJY {
    pub j: f64,
    pub y: f64,
    pub jp: f64,
    pub yp: f64,
}

/// J_ν(z) and Y_ν(z) with derivatives, ν ≥ 0 real, z > 0.
pub fn bessel_jy(nu: f64, z: f64) -> Result<BesselJY, SpecFunError> {
    if !(z > 0.0) || !(nu >= 0.0) {
        return Err(SpecFunError::Domain(format!(
            "bessel_jy needs nu >= 0, z > 0 (got nu={nu}, z={z})"
        )));
    }
    let nl = if z < XMIN {
        (nu + 0.5) as i32
    } else {
        ((nu - z + 1.5) as i32).max(0)
    };
    let xmu = nu - nl as f64;
    let xmu2 = xmu * xmu;
    let xi = 1.0 / z;
    let xi2 = 2.0 * xi;
    let w = xi2 / PI;

    // CF1 for f = J'_nu / J_nu
    let mut isign = 1.0f64;
    let mut h = (nu * xi).max(FPMIN);
    let mut b = xi2 * nu;
    let mut d = 0.0;
    let mut c = h;
    let mut converged = false;
    for _ in 0..MAX_ITER {
        b += xi2;
        d = b - d;
        if d.abs() < FPMIN {
            d = FPMIN;
        }
        c = b - 1.0 / c;
        if c.abs() < FPMIN {
            c = FPMIN;
        }
        d = 1.0 / d;
        let del = c * d;
        h *= del;
        if d < 0.0 {
            isign = -isign;
        }
        if (del - 1.0).abs() < EPS {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(SpecFunError::NonConvergence(format!(
            "bessel CF1 failed at nu={nu}, z={z}"
        )));
    }

    // downward recurrence from nu to xmu
    let mut rjl = isign * FPMIN;
    let mut rjpl = h * rjl;
    let rjl1 = rjl;
    let rjp1 = rjpl;
    let mut fact = nu * xi;
    for _ in 0..nl {
        let rjtemp = fact * rjl + rjpl;
        fact -= xi;
        rjpl = fact * rjtemp - rjl;
        rjl = rjtemp;
    }
    if rjl == 0.0 {
        rjl = EPS;
    }
    let f = rjpl / rjl;

    let (rjmu, mut rymu, mut ry1, rymup);
    if z < XMIN {
        // Temme's series
        let x2 = 0.5 * z;
        let pimu = PI * xmu;
        let fct = if pimu.abs() < EPS {
            1.0
        } else {
            pimu / pimu.sin()
        };
        let dln = -x2.ln();
        let e = xmu * dln;
        let fct2 = if e.abs() < EPS { 1.0 } else { e.sinh() / e };
        let (gam1, gam2) = gamma_pair(xmu);
        let gampl = gam2 - xmu * gam1;
        let gammi = gam2 + xmu * gam1;
        let mut ff = FRAC_2_PI * fct * (gam1 * e.cosh() + gam2 * fct2 * dln);
        let ee = e.exp();
        let mut p = ee / (gampl * PI);
        let mut q = 1.0 / (ee * PI * gammi);
        let pimu2 = 0.5 * pimu;
        let fct3 = if pimu2.abs() < EPS {
            1.0
        } else {
            pimu2.sin() / pimu2
        };
        let r = PI * pimu2 * fct3 * fct3;
        let mut cc = 1.0;
        let dd = -x2 * x2;
        let mut sum = ff + r * q;
        let mut sum1 = p;
        let mut ok = false;
        for i in 1..=MAX_ITER {
            let fi = i as f64;
            ff = (fi * ff + p + q) / (fi * fi - xmu2);
            cc *= dd / fi;
            p /= fi - xmu;
            q /= fi + xmu;
            let del = cc * (ff + r * q);
            sum += del;
            let del1 = cc * p - fi * del;
            sum1 += del1;
            if del.abs() < (1.0 + sum.abs()) * EPS {
                ok = true;
                break;
            }
        }
        if !ok {
            return Err(SpecFunError::NonConvergence(format!(
                "bessel Temme series failed at nu={nu}, z={z}"
            )));
        }
        rymu = -sum;
        ry1 = -sum1 * xi2;
        rymup = xmu * xi * rymu - ry1;
        rjmu = w / (rymup - f * rymu);
    } else {
        // CF2 for p + iq = (J' + iY')/(J + iY) at order xmu
        let mut a = 0.25 - xmu2;
        let mut p = -0.5 * xi;
        let mut q = 1.0;
        let br = 2.0 * z;
        let mut bi = 2.0;
        let mut fct = a * xi / (p * p + q * q);
        let mut cr = br + q * fct;
        let mut ci = bi + p * fct;
        let mut den = br * br + bi * bi;
        let mut dr = br / den;
        let mut di = -bi / den;
        let mut dlr = cr * dr - ci * di;
        let mut dli = cr * di + ci * dr;
        let temp = p * dlr - q * dli;
        q = p * dli + q * dlr;
        p = temp;
        let mut ok = false;
        for i in 2..=MAX_ITER {
            a += 2.0 * (i as f64 - 1.0);
            bi += 2.0;
            dr = a * dr + br;
            di = a * di + bi;
            if dr.abs() + di.abs() < FPMIN {
                dr = FPMIN;
            }
            fct = a / (cr * cr + ci * ci);
            cr = br + cr * fct;
            ci = bi - ci * fct;
            if cr.abs() + ci.abs() < FPMIN {
                cr = FPMIN;
            }
            den = dr * dr + di * di;
            dr /= den;
            di = -di / den;
            dlr = cr * dr - ci * di;
            dli = cr * di + ci * dr;
            let temp = p * dlr - q * dli;
            q = p * dli + q * dlr;
            p = temp;
            if (dlr - 1.0).abs() + dli.abs() < EPS {
                ok = true;
                break;
            }
        }
        if !ok {
            return Err(SpecFunError::NonConvergence(format!(
                "bessel CF2 failed at nu={nu}, z={z}"
            )));
        }
        let gam = (p - f) / q;
        let mut rj = (w / ((p - f) * gam + q)).sqrt();
        rj = rj.copysign(rjl);
        rjmu = rj;
        rymu = rjmu * gam;
        rymup = rymu * (p + q / gam);
        ry1 = xmu * xi * rymu - rymup;
    }
    let _ = rymup;

    // normalize J by CF1-recurred value, recur Y upward to nu
    let fct = rjmu / rjl;
    let j = rjl1 * fct;
    let jp = rjp1 * fct;
    for i in 1..=nl {
        let rytemp = (xmu + i as f64) * xi2 * ry1 - rymu;
        rymu = ry1;
        ry1 = rytemp;
    }
    let y = rymu;
    let yp = nu * xi * rymu - ry1;
    Ok(BesselJY { j, y, jp, yp })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn half_order_j(z: f64) -> f64 {
        (2.0 / (PI * z)).sqrt() * z.sin()
    }
    fn half_order_y(z: f64) -> f64 {
        -(2.0 / (PI * z)).sqrt() * z.cos()
    }

    #[test]
    fn half_integer_closed_forms() {
        for &z in &[0.3, 0.9, 1.7, 2.5, 7.0, 23.0, 48.0] {
            let b = bessel_jy(0.5, z).unwrap();
            assert!(
                (b.j - half_order_j(z)).abs() < 2e-14 * half_order_j(z).abs().max(1.0),
                "J_1/2({z})"
            );
            assert!(
                (b.y - half_order_y(z)).abs() < 2e-14 * half_order_y(z).abs().max(1.0),
                "Y_1/2({z})"
            );
        }
        // J_{3/2}(z) = sqrt(2/(pi z)) (sin z / z - cos z)
        for &z in &[0.7, 3.0, 15.0] {
            let b = bessel_jy(1.5, z).unwrap();
            let jref = (2.0 / (PI * z)).sqrt() * (z.sin() / z - z.cos());
            assert!((b.j - jref).abs() < 1e-13 * jref.abs().max(1.0), "J_3/2({z})");
        }
    }

    #[test]
    fn small_argument_leading_series() {
        use crate::specfun::gamma::gamma;
        let z = 1e-6;
        for &nu in &[0.5, 1.2, 2.5, 4.25f64.sqrt()] {
            let b = bessel_jy(nu, z).unwrap();
            let lead = (z / 2.0).powf(nu) / gamma(nu + 1.0);
            assert!(((b.j - lead) / lead).abs() < 1e-9, "nu={nu}");
        }
    }

    #[test]
    fn wronskian_cross_product() {
        // J_nu(z) Y'_nu(z) - J'_nu(z) Y_nu(z) = 2/(pi z)
        for &nu in &[0.5, 1.5, 2.5, 4.25f64.sqrt(), 3.0, 0.0] {
            for &z in &[0.5, 1.0, 1.99, 2.01, 5.0, 17.0, 50.0] {
                let b = bessel_jy(nu, z).unwrap();
                let wr = b.j * b.yp - b.jp * b.y;
                let exact = 2.0 / (PI * z);
                assert!(
                    ((wr - exact) / exact).abs() < 1e-12,
                    "nu={nu} z={z}: {wr} vs {exact}"
                );
            }
        }
    }

    #[test]
    fn integer_order_against_known() {
        // J_0(1) and Y_0(1), 15-digit references
        let b = bessel_jy(0.0, 1.0).unwrap();
        assert!((b.j - 0.765_197_686_557_966_6).abs() < 1e-14);
        assert!((b.y - 0.088_256_964_215_676_96).abs() < 1e-13);
        let b2 = bessel_jy(1.0, 2.0).unwrap();
        assert!((b2.j - 0.576_724_807_756_873_4).abs() < 1e-14);
        assert!((b2.y + 0.107_032_431_540_937_9).abs() < 1e-13);
    }

    #[test]
    fn domain_errors() {
        assert!(bessel_jy(0.5, 0.0).is_err());
        assert!(bessel_jy(-0.5, 1.0).is_err());
    }
}
