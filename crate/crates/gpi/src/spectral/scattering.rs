use num_complex::Complex64;

use super::{denominator_d, denominator_phi, I};
use crate::error::{GpiError, Result};
use crate::params::{GreekParams, HalflineParams};
use crate::scheme::{CouplingScheme, SeparatedHalflineBC};

/// On-shell amplitudes for a wave `e^{ikx}` incident from the left:
/// `e^{ikx} + r e^{−ikx}` for `x < 0` and `t e^{ikx}` for `x > 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScatteringAmplitudes {
    pub k: f64,
    pub r: Complex64,
    pub t: Complex64,
}

impl ScatteringAmplitudes {
    /// `|r|² + |t|²`.
    pub fn unitarity(&self) -> f64 {
        self.r.norm_sqr() + self.t.norm_sqr()
    }
}

fn check_k(k: f64) -> Result<()> {
    if k > 0.0 && k.is_finite() {
        Ok(())
    } else {
        Err(GpiError::InvalidWavenumber)
    }
}

pub fn s_matrix_halfline(h: &HalflineParams, k: f64) -> Result<ScatteringAmplitudes> {
    check_k(k)?;
    let kc = Complex64::new(k, 0.0);
    let d = denominator_d(h, kc);
    let ik = I * k;
    Ok(ScatteringAmplitudes {
        k,
        r: -((h.a - ik) * (h.b + ik) - h.c.norm_sqr()) / d,
        t: ik * 2.0 * h.c / d,
    })
}

/// Greek form; covers the `β = 0` couplings the half-line form misses.
pub fn s_matrix_greek(g: &GreekParams, k: f64) -> Result<ScatteringAmplitudes> {
    check_k(k)?;
    let phi = denominator_phi(g, Complex64::new(k, 0.0));
    let num_r = Complex64::new(g.alpha + k * k * g.beta, 2.0 * k * g.gamma.re);
    Ok(ScatteringAmplitudes {
        k,
        r: -2.0 * num_r / phi,
        t: -I * k * g.coupling_weight() / phi,
    })
}

/// Reflection from the left half-line end; nothing is transmitted.
pub fn s_matrix_separated(s: &SeparatedHalflineBC, k: f64) -> Result<ScatteringAmplitudes> {
    check_k(k)?;
    let r = match s.left.slope() {
        None => Complex64::new(-1.0, 0.0),
        Some(b) => -(b + I * k) / (b - I * k),
    };
    Ok(ScatteringAmplitudes {
        k,
        r,
        t: Complex64::new(0.0, 0.0),
    })
}

pub fn s_matrix(s: &CouplingScheme, k: f64) -> Result<ScatteringAmplitudes> {
    match s {
        CouplingScheme::Coupled(g) => s_matrix_greek(g, k),
        CouplingScheme::Separated(sep) => s_matrix_separated(sep, k),
    }
}
