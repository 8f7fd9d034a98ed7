//! Resolvent kernel, point spectrum and on-shell scattering.

mod asymptotics;
mod kernel;
mod scattering;
mod spectrum;

pub use asymptotics::{
    richardson_asymptotics, scattering_asymptotics, Expansion, HighEnergyRegime, LowEnergyRegime,
    ScatteringAsymptotics,
};
pub use kernel::{
    green_kernel, green_kernel_dx, green_kernel_greek, green_kernel_halfline,
    green_kernel_separated,
};
pub use scattering::{
    s_matrix, s_matrix_greek, s_matrix_halfline, s_matrix_separated, ScatteringAmplitudes,
};
pub use spectrum::{
    binding_regime, point_spectrum, BindingRegime, BindingReport, EigenCoefficients, SpectralKind,
    SpectralPoint,
};

use num_complex::Complex64;

use crate::error::{GpiError, Result};
use crate::params::{GreekParams, HalflineParams};

const I: Complex64 = Complex64::new(0.0, 1.0);

/// Wavenumber `k = √z` on the physical sheet (cut along the positive real
/// energy axis), so `Im k ≥ 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Wavenumber(Complex64);

impl Wavenumber {
    pub fn new(k: Complex64) -> Result<Self> {
        if !k.is_finite() || k.im < 0.0 {
            return Err(GpiError::InvalidSheet);
        }
        Ok(Self(k))
    }

    /// Physical-sheet root of the energy `z`.
    pub fn from_energy(z: Complex64) -> Result<Self> {
        Self::new(I * (-z).sqrt())
    }

    /// `k = iκ`; on the physical sheet for `κ ≥ 0`.
    pub fn imaginary(kappa: f64) -> Result<Self> {
        Self::new(Complex64::new(0.0, kappa))
    }

    pub fn real(k: f64) -> Result<Self> {
        Self::new(Complex64::new(k, 0.0))
    }

    pub fn value(self) -> Complex64 {
        self.0
    }

    pub fn energy(self) -> Complex64 {
        self.0 * self.0
    }
}

/// `D(k) = (a − ik)(b − ik) − |c|²`.
pub fn denominator_d(h: &HalflineParams, k: Complex64) -> Complex64 {
    (h.a - I * k) * (h.b - I * k) - h.c.norm_sqr()
}

/// `F(k) = (det 𝒜 − 2ikβ)(2 − ikβ) − 2|γ|²`, which equals `β Φ(k)`.
pub fn denominator_f(g: &GreekParams, k: Complex64) -> Complex64 {
    let ikb = I * k * g.beta;
    (g.det_a() - 2.0 * ikb) * (2.0 - ikb) - 2.0 * g.gamma.norm_sqr()
}

/// Reduced Greek denominator `Φ(k) = 2α − ik(4 + det 𝒜) − 2βk²`.
///
/// Unlike [`denominator_f`] it does not vanish identically at `β = 0`; for
/// `β ≠ 0` it equals `2β D(k)` of the corresponding half-line parameters.
pub fn denominator_phi(g: &GreekParams, k: Complex64) -> Complex64 {
    2.0 * g.alpha - I * k * (4.0 + g.det_a()) - 2.0 * g.beta * k * k
}

fn phi_scale(g: &GreekParams, k: Complex64) -> f64 {
    let m = k.norm();
    2.0 * g.alpha.abs() + m * (4.0 + g.det_a().abs()) + 2.0 * g.beta.abs() * m * m
}
