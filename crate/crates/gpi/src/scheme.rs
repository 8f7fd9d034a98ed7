//! The canonical internal representation of a point interaction.

use num_complex::Complex64;

use crate::error::{GpiError, Result};
use crate::params::{
    self, GreekParams, HalflineParams, InverseParams, TransferParams, DEGENERACY_TOL,
};

/// Boundary condition on one half-line.
///
/// On the right side a Robin slope `a` means `f'(0+) = a f(0+)`; on the left
/// side a slope `b` means `−f'(0−) = b f(0−)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum HalflineBc {
    Robin(f64),
    Dirichlet,
    Neumann,
}

impl HalflineBc {
    /// Robin condition with slope zero collapses to Neumann.
    pub fn robin(slope: f64) -> Self {
        if slope == 0.0 {
            HalflineBc::Neumann
        } else {
            HalflineBc::Robin(slope)
        }
    }

    /// The same condition with `Robin(0)` replaced by `Neumann`.
    pub fn normalized(self) -> Self {
        match self {
            HalflineBc::Robin(s) => Self::robin(s),
            other => other,
        }
    }

    /// Robin slope, with Neumann as slope 0 and Dirichlet as `None`.
    pub fn slope(self) -> Option<f64> {
        match self {
            HalflineBc::Robin(s) => Some(s),
            HalflineBc::Neumann => Some(0.0),
            HalflineBc::Dirichlet => None,
        }
    }
}

/// A pair of independent boundary conditions: the two half-lines do not
/// communicate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeparatedHalflineBC {
    pub right: HalflineBc,
    pub left: HalflineBc,
}

impl SeparatedHalflineBC {
    pub fn new(right: HalflineBc, left: HalflineBc) -> Self {
        Self {
            right: right.normalized(),
            left: left.normalized(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CouplingScheme {
    Coupled(GreekParams),
    Separated(SeparatedHalflineBC),
}

fn greek_separates(g: &GreekParams) -> bool {
    let det = g.det_a();
    let scale = 4.0 + (g.alpha * g.beta).abs() + g.gamma.norm_sqr();
    (det - 4.0).abs() <= DEGENERACY_TOL * scale && g.gamma.im.abs() <= DEGENERACY_TOL * (4.0 + g.gamma.norm())
}

impl CouplingScheme {
    /// Wraps a Greek matrix, moving the separating set `det 𝒜 = 4`,
    /// `Im γ = 0` into explicit half-line conditions.
    pub fn from_greek(g: GreekParams) -> Result<Self> {
        if !g.is_finite() {
            return Err(GpiError::InvalidParameters("non-finite coupling parameter"));
        }
        if !greek_separates(&g) {
            return Ok(CouplingScheme::Coupled(g));
        }
        let re = g.gamma.re;
        let sep = if g.beta != 0.0 {
            SeparatedHalflineBC::new(
                HalflineBc::robin((2.0 + re) / g.beta),
                HalflineBc::robin((2.0 - re) / g.beta),
            )
        } else if re > 0.0 {
            SeparatedHalflineBC::new(HalflineBc::Dirichlet, HalflineBc::robin(g.alpha / 4.0))
        } else {
            SeparatedHalflineBC::new(HalflineBc::robin(g.alpha / 4.0), HalflineBc::Dirichlet)
        };
        Ok(CouplingScheme::Separated(sep))
    }

    /// `c = 0` separates; otherwise needs `a + b ≠ 2 Re c`.
    pub fn from_halfline(h: HalflineParams) -> Result<Self> {
        if !h.is_finite() {
            return Err(GpiError::InvalidParameters("non-finite coupling parameter"));
        }
        if h.c.norm() <= DEGENERACY_TOL * (h.a.abs() + h.b.abs()) {
            return Ok(CouplingScheme::Separated(SeparatedHalflineBC::new(
                HalflineBc::robin(h.a),
                HalflineBc::robin(h.b),
            )));
        }
        Self::from_greek(params::halfline_to_greek(&h)?)
    }

    /// `C = 0` separates (a zero length is a Dirichlet side); otherwise
    /// needs `A + B + 2 Re C ≠ 0`.
    pub fn from_inverse(i: InverseParams) -> Result<Self> {
        if !(i.a.is_finite() && i.b.is_finite() && i.c.is_finite()) {
            return Err(GpiError::InvalidParameters("non-finite coupling parameter"));
        }
        if i.c.norm() <= DEGENERACY_TOL * (i.a.abs() + i.b.abs()) {
            let side = |len: f64| {
                if len == 0.0 {
                    HalflineBc::Dirichlet
                } else {
                    HalflineBc::robin(1.0 / len)
                }
            };
            return Ok(CouplingScheme::Separated(SeparatedHalflineBC::new(
                side(i.a),
                side(i.b),
            )));
        }
        Self::from_greek(params::inverse_to_greek(&i)?)
    }

    pub fn from_transfer(t: TransferParams) -> Result<Self> {
        Self::from_greek(params::transfer_to_greek(&t)?)
    }

    pub fn separated(right: HalflineBc, left: HalflineBc) -> Self {
        CouplingScheme::Separated(SeparatedHalflineBC::new(right, left))
    }

    pub fn greek(&self) -> Option<&GreekParams> {
        match self {
            CouplingScheme::Coupled(g) => Some(g),
            CouplingScheme::Separated(_) => None,
        }
    }
}

pub fn is_decoupled(s: &CouplingScheme) -> bool {
    match s {
        CouplingScheme::Separated(_) => true,
        CouplingScheme::Coupled(g) => greek_separates(g),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Symmetries {
    pub time_reversal: bool,
    pub space_reflection: bool,
    /// Unitarily equivalent to the free Hamiltonian through a phase jump at
    /// the origin.
    pub quasifree: bool,
}

const SYMMETRY_TOL: f64 = 1e-12;

pub fn classify_symmetries(s: &CouplingScheme) -> Symmetries {
    match s {
        CouplingScheme::Coupled(g) => {
            let tol = SYMMETRY_TOL * (1.0 + g.gamma.norm());
            let time_reversal = g.gamma.im.abs() <= tol;
            Symmetries {
                time_reversal,
                space_reflection: time_reversal && g.gamma.re.abs() <= tol,
                quasifree: g.alpha.abs() <= SYMMETRY_TOL
                    && g.beta.abs() <= SYMMETRY_TOL
                    && g.gamma.re.abs() <= tol,
            }
        }
        CouplingScheme::Separated(sep) => Symmetries {
            time_reversal: true,
            space_reflection: sep.right.normalized() == sep.left.normalized(),
            quasifree: false,
        },
    }
}

/// Rotates the phase of `c`. The result is unitarily equivalent to the input.
pub fn gauge_transform(h: &HalflineParams, phi: f64) -> HalflineParams {
    HalflineParams {
        a: h.a,
        b: h.b,
        c: h.c * Complex64::from_polar(1.0, phi),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::math::PI;

    #[test]
    fn decoupled_examples() {
        assert!(is_decoupled(&CouplingScheme::Coupled(GreekParams::real(0.0, 1.0, 2.0))));
        assert!(!is_decoupled(
            &CouplingScheme::from_greek(GreekParams::delta(1.5)).unwrap()
        ));
        let s = CouplingScheme::from_halfline(HalflineParams::real(1.0, -2.0, 0.0)).unwrap();
        assert!(is_decoupled(&s));
        assert_eq!(
            s,
            CouplingScheme::separated(HalflineBc::Robin(1.0), HalflineBc::Robin(-2.0))
        );
    }

    #[test]
    fn canonical_robin_slopes() {
        let s = CouplingScheme::from_greek(GreekParams::real(0.0, 1.0, 2.0)).unwrap();
        assert_eq!(
            s,
            CouplingScheme::separated(HalflineBc::Robin(4.0), HalflineBc::Neumann)
        );
    }

    #[test]
    fn canonical_dirichlet_sides() {
        let s = CouplingScheme::from_greek(GreekParams::real(8.0, 0.0, 2.0)).unwrap();
        assert_eq!(
            s,
            CouplingScheme::separated(HalflineBc::Dirichlet, HalflineBc::Robin(2.0))
        );
        let s = CouplingScheme::from_greek(GreekParams::real(0.0, 0.0, -2.0)).unwrap();
        assert_eq!(
            s,
            CouplingScheme::separated(HalflineBc::Neumann, HalflineBc::Dirichlet)
        );
    }

    #[test]
    fn inverse_separation() {
        let s = CouplingScheme::from_inverse(InverseParams::new(0.0, 0.5, Complex64::new(0.0, 0.0)))
            .unwrap();
        assert_eq!(
            s,
            CouplingScheme::separated(HalflineBc::Dirichlet, HalflineBc::Robin(2.0))
        );
    }

    #[test]
    fn robin_zero_is_neumann() {
        assert_eq!(HalflineBc::robin(0.0), HalflineBc::Neumann);
        let a = SeparatedHalflineBC::new(HalflineBc::Robin(0.0), HalflineBc::Neumann);
        assert_eq!(a.right, HalflineBc::Neumann);
    }

    #[test]
    fn symmetry_examples() {
        let dp = CouplingScheme::from_greek(GreekParams::delta_prime(2.0)).unwrap();
        assert_eq!(
            classify_symmetries(&dp),
            Symmetries {
                time_reversal: true,
                space_reflection: true,
                quasifree: false
            }
        );
        let h = CouplingScheme::from_halfline(HalflineParams::new(1.0, 2.0, Complex64::new(0.0, 1.0)))
            .unwrap();
        assert_eq!(
            classify_symmetries(&h),
            Symmetries {
                time_reversal: false,
                space_reflection: false,
                quasifree: false
            }
        );
        let free = CouplingScheme::from_greek(GreekParams::free()).unwrap();
        assert_eq!(
            classify_symmetries(&free),
            Symmetries {
                time_reversal: true,
                space_reflection: true,
                quasifree: true
            }
        );
        let phase = CouplingScheme::from_greek(GreekParams::new(0.0, 0.0, Complex64::new(0.0, 0.8)))
            .unwrap();
        let sym = classify_symmetries(&phase);
        assert!(sym.quasifree && !sym.time_reversal);
    }

    #[test]
    fn separated_reflection() {
        let s = CouplingScheme::separated(HalflineBc::Robin(1.0), HalflineBc::Robin(1.0));
        assert!(classify_symmetries(&s).space_reflection);
        let s = CouplingScheme::separated(HalflineBc::Robin(1.0), HalflineBc::Dirichlet);
        assert!(!classify_symmetries(&s).space_reflection);
    }

    #[test]
    fn gauge_examples() {
        let h = HalflineParams::real(-3.0, -1.0, 0.5);
        let g = gauge_transform(&h, PI / 2.0);
        assert_eq!((g.a, g.b), (-3.0, -1.0));
        assert!((g.c - Complex64::new(0.0, 0.5)).norm() < 1e-16);
        assert_eq!(gauge_transform(&h, 0.0), h);
    }
}
