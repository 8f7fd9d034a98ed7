use num_complex::Complex64;

use super::{denominator_d, denominator_phi, phi_scale, Wavenumber, I};
use crate::error::{GpiError, Result};
use crate::params::{greek_to_halfline, GreekParams, HalflineParams};
use crate::scheme::{CouplingScheme, HalflineBc, SeparatedHalflineBC};

const POLE_TOL: f64 = 1e-12;

// The point x = 0 is read as 0+.
fn right(x: f64) -> bool {
    x >= 0.0
}

fn checked_k(k: Wavenumber) -> Result<Complex64> {
    let k = k.value();
    if k.im <= 0.0 {
        Err(GpiError::InvalidSheet)
    } else {
        Ok(k)
    }
}

/// Kernel of the two decoupled Dirichlet half-lines, the common part of
/// every form below, and its `x`-derivative.
fn dirichlet_part(x: f64, xp: f64, k: Complex64) -> (Complex64, Complex64) {
    let zero = Complex64::new(0.0, 0.0);
    let e = |y: f64| (I * k * y).exp();
    let s = |y: f64| (k * y).sin();
    let c = |y: f64| (k * y).cos();
    match (right(x), right(xp)) {
        (true, true) => {
            if x >= xp {
                (e(x) * s(xp) / k, I * e(x) * s(xp))
            } else {
                (e(xp) * s(x) / k, e(xp) * c(x))
            }
        }
        (false, false) => {
            if x < xp {
                (-e(-x) * s(xp) / k, I * e(-x) * s(xp))
            } else {
                (-e(-xp) * s(x) / k, -e(-xp) * c(x))
            }
        }
        _ => (zero, zero),
    }
}

/// Coefficients of the four plane-wave corrections `e^{ik(x+x')}`
/// (right-right), `e^{−ik(x+x')}` (left-left), `e^{ik(x−x')}` (x right,
/// x' left) and `e^{−ik(x−x')}` (x left, x' right).
#[derive(Clone, Copy)]
struct Corrections {
    rr: Complex64,
    ll: Complex64,
    rl: Complex64,
    lr: Complex64,
}

fn assemble(corr: &Corrections, x: f64, xp: f64, k: Complex64) -> (Complex64, Complex64) {
    let (g0, d0) = dirichlet_part(x, xp, k);
    let (coef, phase, sign) = match (right(x), right(xp)) {
        (true, true) => (corr.rr, x + xp, 1.0),
        (false, false) => (corr.ll, -(x + xp), -1.0),
        (true, false) => (corr.rl, x - xp, 1.0),
        (false, true) => (corr.lr, -(x - xp), -1.0),
    };
    let w = coef * (I * k * phase).exp();
    (g0 + w, d0 + w * I * k * sign)
}

fn halfline_corrections(h: &HalflineParams, k: Complex64) -> Result<Corrections> {
    let d = denominator_d(h, k);
    let scale = (h.a - I * k).norm() * (h.b - I * k).norm() + h.c.norm_sqr();
    if d.norm() <= POLE_TOL * scale {
        return Err(GpiError::PoleEvaluation);
    }
    Ok(Corrections {
        rr: (h.b - I * k) / d,
        ll: (h.a - I * k) / d,
        rl: -h.c / d,
        lr: -h.c.conj() / d,
    })
}

fn greek_corrections(g: &GreekParams, k: Complex64) -> Result<Corrections> {
    let phi = denominator_phi(g, k);
    if phi.norm() <= POLE_TOL * phi_scale(g, k) {
        return Err(GpiError::PoleEvaluation);
    }
    let det = g.det_a();
    let ikb = I * k * g.beta * 4.0;
    let two_phi = phi * 2.0;
    Ok(Corrections {
        rr: (4.0 + det - 4.0 * g.gamma.re - ikb) / two_phi,
        ll: (4.0 + det + 4.0 * g.gamma.re - ikb) / two_phi,
        rl: Complex64::new(4.0 - det, 4.0 * g.gamma.im) / two_phi,
        lr: Complex64::new(4.0 - det, -4.0 * g.gamma.im) / two_phi,
    })
}

fn robin_coefficient(bc: HalflineBc, k: Complex64) -> Result<Complex64> {
    match bc.slope() {
        None => Ok(Complex64::new(0.0, 0.0)),
        Some(s) => {
            let d = s - I * k;
            if d.norm() <= POLE_TOL * (s.abs() + k.norm()) {
                Err(GpiError::PoleEvaluation)
            } else {
                Ok(d.inv())
            }
        }
    }
}

fn separated_corrections(s: &SeparatedHalflineBC, k: Complex64) -> Result<Corrections> {
    let zero = Complex64::new(0.0, 0.0);
    Ok(Corrections {
        rr: robin_coefficient(s.right, k)?,
        ll: robin_coefficient(s.left, k)?,
        rl: zero,
        lr: zero,
    })
}

/// Resolvent kernel in the half-line form.
pub fn green_kernel_halfline(h: &HalflineParams, x: f64, xp: f64, k: Wavenumber) -> Result<Complex64> {
    let k = checked_k(k)?;
    Ok(assemble(&halfline_corrections(h, k)?, x, xp, k).0)
}

/// Resolvent kernel in the Greek form; valid for every coupled scheme.
pub fn green_kernel_greek(g: &GreekParams, x: f64, xp: f64, k: Wavenumber) -> Result<Complex64> {
    let k = checked_k(k)?;
    Ok(assemble(&greek_corrections(g, k)?, x, xp, k).0)
}

/// Resolvent kernel of two decoupled half-lines.
pub fn green_kernel_separated(
    s: &SeparatedHalflineBC,
    x: f64,
    xp: f64,
    k: Wavenumber,
) -> Result<Complex64> {
    let k = checked_k(k)?;
    Ok(assemble(&separated_corrections(s, k)?, x, xp, k).0)
}

fn corrections(s: &CouplingScheme, k: Complex64) -> Result<Corrections> {
    match s {
        CouplingScheme::Coupled(g) => match greek_to_halfline(g) {
            Ok(h) => halfline_corrections(&h, k),
            Err(_) => greek_corrections(g, k),
        },
        CouplingScheme::Separated(sep) => separated_corrections(sep, k),
    }
}

/// `(H − k²)⁻¹(x, x')`. Uses the half-line form when it exists and the
/// Greek form otherwise. `x = 0` is read as `0+`.
pub fn green_kernel(s: &CouplingScheme, x: f64, xp: f64, k: Wavenumber) -> Result<Complex64> {
    let k = checked_k(k)?;
    Ok(assemble(&corrections(s, k)?, x, xp, k).0)
}

/// `∂ₓ` of [`green_kernel`], one-sided from the right at `x = x'`.
pub fn green_kernel_dx(s: &CouplingScheme, x: f64, xp: f64, k: Wavenumber) -> Result<Complex64> {
    let k = checked_k(k)?;
    Ok(assemble(&corrections(s, k)?, x, xp, k).1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(re: f64, im: f64) -> Wavenumber {
        Wavenumber::new(Complex64::new(re, im)).unwrap()
    }

    #[test]
    fn delta_textbook_form() {
        let alpha = -2.0;
        let s = CouplingScheme::from_greek(GreekParams::delta(alpha)).unwrap();
        let kk = k(0.7, 0.4);
        let kv = kk.value();
        for (x, xp) in [(0.3, 1.2), (-0.5, 0.8), (-1.0, -0.2), (0.9, -0.4)] {
            let g = green_kernel(&s, x, xp, kk).unwrap();
            let half = I / (kv * 2.0);
            let expected = half * (I * kv * (x - xp as f64).abs()).exp()
                - (kv * 2.0 * alpha) / (kv * 2.0 + I * alpha)
                    * half
                    * half
                    * (I * kv * (x.abs() + xp.abs())).exp();
            assert!((g - expected).norm() < 1e-13, "{x} {xp}");
        }
    }

    #[test]
    fn delta_prime_textbook_form() {
        let beta = -2.0;
        let s = CouplingScheme::from_greek(GreekParams::delta_prime(beta)).unwrap();
        let kk = k(0.5, 0.6);
        let kv = kk.value();
        let gt = |y: f64| I / (kv * 2.0) * (I * kv * y.abs()).exp() * y.signum();
        for (x, xp) in [(0.3, 1.2), (-0.5, 0.8), (-1.0, -0.2), (0.9, -0.4)] {
            let g = green_kernel(&s, x, xp, kk).unwrap();
            let free = I / (kv * 2.0) * (I * kv * (x - xp as f64).abs()).exp();
            let expected = free - (kv * kv * 2.0 * beta) / (2.0 - I * kv * beta) * gt(x) * gt(xp);
            assert!((g - expected).norm() < 1e-13, "{x} {xp} {g} {expected}");
        }
    }

    #[test]
    fn decoupled_has_no_cross_terms() {
        let s = CouplingScheme::separated(HalflineBc::Robin(1.0), HalflineBc::Dirichlet);
        let kk = k(1.0, 0.5);
        assert_eq!(green_kernel(&s, 0.4, -0.3, kk).unwrap(), Complex64::new(0.0, 0.0));
        assert_eq!(green_kernel(&s, -0.4, 0.3, kk).unwrap(), Complex64::new(0.0, 0.0));
        // Dirichlet side vanishes at the origin.
        assert!(green_kernel(&s, -1e-300, -0.3, kk).unwrap().norm() < 1e-15);
    }

    #[test]
    fn rejects_lower_sheet_and_poles() {
        let s = CouplingScheme::from_greek(GreekParams::delta(-2.0)).unwrap();
        assert_eq!(
            green_kernel(&s, 0.1, 0.2, k(1.0, 0.0)),
            Err(GpiError::InvalidSheet)
        );
        assert_eq!(
            green_kernel(&s, 0.1, 0.2, k(0.0, 1.0)),
            Err(GpiError::PoleEvaluation)
        );
    }

    #[test]
    fn unit_jump() {
        let s = CouplingScheme::from_greek(GreekParams::new(0.3, 1.1, Complex64::new(-0.4, 0.2)))
            .unwrap();
        let kk = k(0.9, 0.3);
        for xp in [0.7, -0.6] {
            let up = green_kernel_dx(&s, xp, xp, kk).unwrap();
            let below = xp - 1e-300_f64.max(f64::EPSILON * xp.abs());
            let dn = green_kernel_dx(&s, below, xp, kk).unwrap();
            assert!((up - dn + 1.0).norm() < 1e-12);
        }
    }
}
