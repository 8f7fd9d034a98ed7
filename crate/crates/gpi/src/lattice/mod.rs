//! Periodic array of identical couplings with spacing `ℓ`.
//!
//! With `w = 4 − det 𝒜 + 4i Im γ` the Bloch condition reads
//! `Re(w e^{iθ}) = RHS(E)`, where
//! `RHS(E) = (4 + det 𝒜) c(E) + 2(α − βE) s(E)` and `c`, `s` are the
//! entries `cos kℓ`, `sin(kℓ)/k` of the free propagator over one cell
//! (continued to `cosh κℓ`, `sinh(κℓ)/κ` below zero energy). An energy is
//! in the spectrum iff `|RHS(E)| ≤ |w|`.

mod bands;
mod regime;

pub use bands::{band_structure, band_structure_with, dispersion, BandInterval, BandOptions, GapInterval};
pub use regime::{asymptotic_regime, Regime, RegimeReport, RegimeValues};

use num_complex::Complex64;

use crate::error::{GpiError, Result};
use crate::math;
use crate::numeric::determinant;
use crate::params::{greek_to_transfer, GreekParams};
use crate::scheme::{is_decoupled, CouplingScheme};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LatticeSpec {
    greek: GreekParams,
    ell: f64,
}

impl LatticeSpec {
    /// Rejects separating couplings, which cut the array into independent
    /// cells.
    pub fn new(scheme: CouplingScheme, ell: f64) -> Result<Self> {
        if !(ell > 0.0 && ell.is_finite()) {
            return Err(GpiError::InvalidParameters("lattice spacing must be positive"));
        }
        match scheme {
            CouplingScheme::Coupled(g) if !is_decoupled(&scheme) => Ok(Self { greek: g, ell }),
            _ => Err(GpiError::SeparatingLattice),
        }
    }

    pub fn greek(&self) -> &GreekParams {
        &self.greek
    }

    pub fn scheme(&self) -> CouplingScheme {
        CouplingScheme::Coupled(self.greek)
    }

    pub fn ell(&self) -> f64 {
        self.ell
    }
}

/// Free propagator entries `c(E)`, `s(E)` over one cell and their
/// `E`-derivatives.
pub(crate) fn free_cell(e: f64, ell: f64) -> (f64, f64, f64, f64) {
    let x = e * ell * ell;
    let (c, s) = if e > 0.0 {
        let k = math::sqrt(e);
        (math::cos(k * ell), math::sin(k * ell) / k)
    } else if e < 0.0 {
        let kappa = math::sqrt(-e);
        (math::cosh(kappa * ell), math::sinh(kappa * ell) / kappa)
    } else {
        (1.0, ell)
    };
    let dc = -0.5 * ell * s;
    let ds = if x.abs() < 1e-4 {
        // (ℓc − s)/(2E) loses digits near E = 0.
        ell * ell * ell * (-1.0 / 6.0 + x / 60.0 - x * x / 2520.0)
    } else {
        (ell * c - s) / (2.0 * e)
    };
    (c, s, dc, ds)
}

pub(crate) fn rhs_energy(g: &GreekParams, ell: f64, e: f64) -> (f64, f64) {
    let (c, s, dc, ds) = free_cell(e, ell);
    let p = 4.0 + g.det_a();
    let q = 2.0 * (g.alpha - g.beta * e);
    (p * c + q * s, p * dc - 2.0 * g.beta * s + q * ds)
}

/// `(4 + det 𝒜) cos kℓ + (2/k)(α − βk²) sin kℓ`.
pub fn band_condition_rhs(spec: &LatticeSpec, k: f64) -> f64 {
    let g = &spec.greek;
    let kl = k * spec.ell;
    (4.0 + g.det_a()) * math::cos(kl) + 2.0 * (g.alpha - g.beta * k * k) * math::sin(kl) / k
}

/// `|4 − det 𝒜 + 4i Im γ|`: the left side `Re(w e^{iθ})` sweeps
/// `[−|w|, |w|]`.
pub fn band_condition_lhs_bound(spec: &LatticeSpec) -> f64 {
    spec.greek.coupling_weight().norm()
}

/// `tr(M T(k, ℓ))` for the real unimodular factor `M` of the one-centre
/// transfer matrix and the free propagator `T`. The Floquet multipliers
/// lie on the unit circle iff its modulus is at most 2.
pub fn monodromy_trace(spec: &LatticeSpec, k: f64) -> Result<f64> {
    let t = greek_to_transfer(&spec.greek)?;
    let kl = k * spec.ell;
    let (c, s) = (math::cos(kl), math::sin(kl) / k);
    let m = t.real_matrix();
    // tr([[ã, b̃], [c̃, d̃]] [[c, s], [−k² s, c]])
    Ok(m[0][0] * c - m[0][1] * k * k * s + m[1][0] * s + m[1][1] * c)
}

/// Determinant of the Bloch problem on one cell: plane waves
/// `A e^{ikx} + B e^{−ikx}` on `(0, ℓ/2)` and `C e^{ikx} + D e^{−ikx}` on
/// `(−ℓ/2, 0)`, the two coupling conditions at the origin and
/// `f(−ℓ/2) = e^{iθ} f(ℓ/2)`, `f'(−ℓ/2) = e^{iθ} f'(ℓ/2)`.
///
/// Vanishes iff `k²` is an eigenvalue of the fibre at quasimomentum `θ`.
/// Rows are scaled to unit length so the value is comparable across
/// parameters.
pub fn bloch_determinant(spec: &LatticeSpec, k: Complex64, theta: f64) -> Complex64 {
    let g = &spec.greek;
    let i = Complex64::new(0.0, 1.0);
    let one = Complex64::new(1.0, 0.0);
    let ik = i * k;
    let half = spec.ell / 2.0;
    let ep = (ik * half).exp();
    let em = (-ik * half).exp();
    let bloch = Complex64::from_polar(1.0, theta);
    let gam = g.gamma * 0.5;
    let gamb = g.gamma.conj() * 0.5;
    let a2 = g.alpha / 2.0;
    let b2 = g.beta / 2.0;
    // f(0±), f'(0±) in terms of (A, B, C, D):
    // f+ = A + B, f'+ = ik(A − B), f− = C + D, f'− = ik(C − D).
    // f'+ − f'− − α/2 (f+ + f−) − γ/2 (f'+ + f'−) = 0
    let r1 = [
        ik - a2 - gam * ik,
        -ik - a2 + gam * ik,
        -ik - a2 - gam * ik,
        ik - a2 + gam * ik,
    ];
    // f+ − f− + γ̄/2 (f+ + f−) − β/2 (f'+ + f'−) = 0
    let r2 = [
        one + gamb - ik * b2,
        one + gamb + ik * b2,
        -one + gamb - ik * b2,
        -one + gamb + ik * b2,
    ];
    let r3 = [-bloch * ep, -bloch * em, em, ep];
    let r4 = [-bloch * ep, bloch * em, em, -ep];
    let mut m = [r1, r2, r3, r4];
    for row in m.iter_mut() {
        let n = math::sqrt(row.iter().map(|z| z.norm_sqr()).sum::<f64>());
        if n > 0.0 {
            for z in row.iter_mut() {
                *z /= n;
            }
        }
    }
    determinant(m)
}

/// `cos φ = RHS(E)/|w|` for energies in the spectrum; the quasimomenta are
/// then `θ = ±φ − arg w`. Returns `None` in a gap.
pub fn floquet_angle(spec: &LatticeSpec, e: f64) -> Option<f64> {
    let h = rhs_energy(&spec.greek, spec.ell, e).0 / band_condition_lhs_bound(spec);
    if h.abs() <= 1.0 {
        Some(math::acos(h))
    } else {
        None
    }
}

/// The two quasimomenta `θ ∈ (−π, π]` at energy `e`, or `None` in a gap.
pub fn bloch_angles(spec: &LatticeSpec, e: f64) -> Option<(f64, f64)> {
    let phi = floquet_angle(spec, e)?;
    let psi = spec.greek.coupling_weight().arg();
    let wrap = |x: f64| math::wrap_tau(x + math::PI) - math::PI;
    Some((wrap(phi - psi), wrap(-phi - psi)))
}
