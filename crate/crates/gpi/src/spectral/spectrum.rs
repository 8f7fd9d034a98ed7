use alloc::vec::Vec;

use num_complex::Complex64;

use super::I;
use crate::math;
use crate::params::{GreekParams, HalflineParams};
use crate::scheme::CouplingScheme;

/// Residues below this fraction of the kernel scale count as vanishing.
pub const RESIDUE_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpectralKind {
    Bound,
    ZeroResonance,
    Antibound,
    /// A zero of the denominator at which the kernel has no pole beyond the
    /// free one.
    SpuriousRoot,
}

/// Coefficients of `f(x) = μ Θ(x) e^{−κx} + ν Θ(−x) e^{κx}`, normalized so
/// that `‖f‖ = 1`, i.e. `|μ|² + |ν|² = 2κ`, with the phase fixed by taking
/// the first non-zero coefficient real and positive.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EigenCoefficients {
    pub mu: Complex64,
    pub nu: Complex64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralPoint {
    /// `κ = −ik` at the root.
    pub kappa: f64,
    /// `−κ²`.
    pub energy: f64,
    pub kind: SpectralKind,
    /// Present iff `kind` is [`SpectralKind::Bound`].
    pub coefficients: Option<EigenCoefficients>,
}

impl SpectralPoint {
    /// Value of the normalized eigenfunction; `None` unless bound.
    pub fn eigenfunction(&self, x: f64) -> Option<Complex64> {
        let c = self.coefficients?;
        Some(if x >= 0.0 {
            c.mu * math::exp(-self.kappa * x)
        } else {
            c.nu * math::exp(self.kappa * x)
        })
    }
}

fn normalize(mu: Complex64, nu: Complex64, kappa: f64) -> EigenCoefficients {
    let norm = math::sqrt(mu.norm_sqr() + nu.norm_sqr());
    let lead = if mu.norm() >= 1e-14 * norm { mu } else { nu };
    let phase = lead.conj() / lead.norm();
    let s = math::sqrt(2.0 * kappa) / norm;
    EigenCoefficients {
        mu: mu * phase * s,
        nu: nu * phase * s,
    }
}

fn greek_roots(g: &GreekParams) -> Vec<f64> {
    // 2β κ² + (4 + det 𝒜) κ + 2α = 0
    let det = g.det_a();
    let b = 4.0 + det;
    let c = 2.0 * g.alpha;
    if g.beta == 0.0 {
        return alloc::vec![-c / b + 0.0];
    }
    let a = 2.0 * g.beta;
    let disc = (4.0 - det) * (4.0 - det) + 16.0 * g.gamma.norm_sqr();
    let q = -0.5 * (b + math::sqrt(disc).copysign(b));
    // `+ 0.0` turns a signed zero into +0.
    alloc::vec![q / a + 0.0, c / q + 0.0]
}

/// Residue of the kernel at `k = iκ` beyond the free full-line part,
/// relative to the size of the individual terms.
fn relative_residue(g: &GreekParams, kappa: f64) -> f64 {
    let det = g.det_a();
    let kb = 4.0 * kappa * g.beta;
    let dphi = Complex64::new(0.0, -(4.0 + det + kb)) * 2.0;
    let coeffs = [
        Complex64::new(4.0 + det - 4.0 * g.gamma.re + kb, 0.0),
        Complex64::new(4.0 + det + 4.0 * g.gamma.re + kb, 0.0),
        Complex64::new(4.0 - det, 4.0 * g.gamma.im),
        Complex64::new(4.0 - det, -4.0 * g.gamma.im),
    ];
    let free = if kappa == 0.0 { I * 0.5 } else { Complex64::new(0.0, 0.0) };
    let mut residue: f64 = 0.0;
    let mut scale: f64 = free.norm();
    for c in coeffs {
        let term = c / dphi;
        residue = residue.max((term - free).norm());
        scale = scale.max(term.norm());
    }
    if scale == 0.0 {
        0.0
    } else {
        residue / scale
    }
}

fn greek_bound_coefficients(g: &GreekParams, kappa: f64) -> EigenCoefficients {
    let half = Complex64::new(0.5, 0.0);
    let gk = g.gamma * kappa * half;
    let gb = g.gamma.conj() * half;
    let ak = -kappa - 0.5 * g.alpha;
    let bk = 0.5 * g.beta * kappa;
    let rows = [
        [ak + gk, ak - gk],
        [gb + 1.0 + bk, gb - 1.0 - bk],
    ];
    let n0 = rows[0][0].norm_sqr() + rows[0][1].norm_sqr();
    let n1 = rows[1][0].norm_sqr() + rows[1][1].norm_sqr();
    let r = if n0 >= n1 { rows[0] } else { rows[1] };
    normalize(r[1], -r[0], kappa)
}

fn classify(kappa: f64, spurious: bool) -> SpectralKind {
    if spurious {
        SpectralKind::SpuriousRoot
    } else if kappa > 0.0 {
        SpectralKind::Bound
    } else if kappa == 0.0 {
        SpectralKind::ZeroResonance
    } else {
        SpectralKind::Antibound
    }
}

fn point(kappa: f64, kind: SpectralKind, coefficients: Option<EigenCoefficients>) -> SpectralPoint {
    SpectralPoint {
        kappa,
        energy: -kappa * kappa,
        kind,
        coefficients,
    }
}

/// All zeros `k = iκ` of the kernel denominator, sorted by `κ` descending.
///
/// A coupled scheme has two roots when `β ≠ 0` and one otherwise; each
/// Robin or Neumann side of a separated scheme contributes one.
pub fn point_spectrum(s: &CouplingScheme) -> Vec<SpectralPoint> {
    let mut out = Vec::new();
    match s {
        CouplingScheme::Coupled(g) => {
            for kappa in greek_roots(g) {
                let spurious = relative_residue(g, kappa) < RESIDUE_TOL;
                let kind = classify(kappa, spurious);
                let coeffs = (kind == SpectralKind::Bound).then(|| greek_bound_coefficients(g, kappa));
                out.push(point(kappa, kind, coeffs));
            }
        }
        CouplingScheme::Separated(sep) => {
            let zero = Complex64::new(0.0, 0.0);
            for (bc, right) in [(sep.right, true), (sep.left, false)] {
                if let Some(slope) = bc.slope() {
                    let kappa = if slope == 0.0 { 0.0 } else { -slope };
                    let kind = classify(kappa, false);
                    let coeffs = (kind == SpectralKind::Bound).then(|| {
                        let amp = Complex64::new(math::sqrt(2.0 * kappa), 0.0);
                        if right {
                            EigenCoefficients { mu: amp, nu: zero }
                        } else {
                            EigenCoefficients { mu: zero, nu: amp }
                        }
                    });
                    out.push(point(kappa, kind, coeffs));
                }
            }
        }
    }
    out.sort_by(|x, y| y.kappa.total_cmp(&x.kappa));
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BindingRegime {
    /// `ab < 0`: one bound and one antibound state.
    MixedSign,
    /// `a, b > 0` and `|c|² > ab`: a bound state although both half-line
    /// interactions are repulsive.
    ConspiracyBinding,
    /// `a, b < 0` and `|c|² < ab`.
    TwoBound,
    /// `a = b`, `c = 0`: the two half-line levels coincide.
    Crossing,
    Other,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BindingReport {
    pub regime: BindingRegime,
    /// Number of roots with `κ > 0`.
    pub bound_states: usize,
}

/// Binding regime of a half-line coupling. The roots of
/// `(a + κ)(b + κ) = |c|²` are `κ± = −(a+b)/2 ∓ √((a−b)² + 4|c|²)/2`.
pub fn binding_regime(h: &HalflineParams) -> BindingReport {
    let cc = h.c.norm_sqr();
    let ab = h.a * h.b;
    let regime = if ab < 0.0 {
        BindingRegime::MixedSign
    } else if h.a == h.b && cc == 0.0 {
        BindingRegime::Crossing
    } else if h.a > 0.0 && h.b > 0.0 && cc > ab {
        BindingRegime::ConspiracyBinding
    } else if h.a < 0.0 && h.b < 0.0 && cc < ab {
        BindingRegime::TwoBound
    } else {
        BindingRegime::Other
    };
    let root = math::sqrt((h.a - h.b) * (h.a - h.b) + 4.0 * cc);
    let mean = -0.5 * (h.a + h.b);
    let bound_states = [mean + 0.5 * root, mean - 0.5 * root]
        .iter()
        .filter(|&&k| k > 0.0)
        .count();
    BindingReport {
        regime,
        bound_states,
    }
}
