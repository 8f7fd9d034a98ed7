//! Parametrizations of the one-centre boundary conditions and the exact
//! maps between them.
//!
//! Writing `f(0±)`, `f'(0±)` for the one-sided boundary values:
//!
//! * [`GreekParams`] `(α, β, γ)`:
//!   `f'(0+) − f'(0−) = α/2 (f(0+) + f(0−)) + γ/2 (f'(0+) + f'(0−))` and
//!   `f(0+) − f(0−) = −γ̄/2 (f(0+) + f(0−)) + β/2 (f'(0+) + f'(0−))`.
//! * [`HalflineParams`] `(a, b, c)`:
//!   `f'(0+) = a f(0+) + c f(0−)`, `−f'(0−) = c̄ f(0+) + b f(0−)`.
//! * [`InverseParams`] `(A, B, C)`:
//!   `f(0+) = A f'(0+) − C f'(0−)`, `f(0−) = C̄ f'(0+) − B f'(0−)`.
//! * [`TransferParams`]: `(f(0+), f'(0+))ᵀ = ω [[ã, b̃], [c̃, d̃]] (f(0−), f'(0−))ᵀ`.
//!
//! The remaining three families are literature parametrizations that embed
//! into the half-line form ([`CarreauParams`], [`SebaParams`]) or into the
//! `β = 0` corner of the Greek form ([`ChernoffHughesParams`]).
//!
//! Every conversion that divides reports the vanishing denominator through
//! [`GpiError::DegenerateParametrization`].

use num_complex::Complex64;

use crate::error::{GpiError, Result};
use crate::math;

/// Relative threshold below which a denominator is treated as zero.
pub const DEGENERACY_TOL: f64 = 1e-12;

/// Tolerance used when validating the algebraic constraints of the
/// transfer and Šeba parametrizations.
pub const CONSTRAINT_TOL: f64 = 1e-12;

fn check_denominator(value: f64, scale: f64, name: &'static str) -> Result<()> {
    if value.abs() <= DEGENERACY_TOL * scale || value == 0.0 || !value.is_finite() {
        Err(GpiError::DegenerateParametrization { denominator: name })
    } else {
        Ok(())
    }
}

fn check_complex_denominator(value: Complex64, scale: f64, name: &'static str) -> Result<()> {
    let m = value.norm();
    if m <= DEGENERACY_TOL * scale || m == 0.0 || !m.is_finite() {
        Err(GpiError::DegenerateParametrization { denominator: name })
    } else {
        Ok(())
    }
}

/// Canonical coupling matrix `𝒜 = [[α, γ], [−γ̄, β]]`.
///
/// `α` has dimension 1/length, `β` length, `γ` is dimensionless.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GreekParams {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: Complex64,
}

impl GreekParams {
    pub const fn new(alpha: f64, beta: f64, gamma: Complex64) -> Self {
        Self { alpha, beta, gamma }
    }

    pub const fn real(alpha: f64, beta: f64, gamma: f64) -> Self {
        Self::new(alpha, beta, Complex64::new(gamma, 0.0))
    }

    /// `δ` interaction of strength `alpha`.
    pub const fn delta(alpha: f64) -> Self {
        Self::real(alpha, 0.0, 0.0)
    }

    /// `δ′` interaction of strength `beta`.
    pub const fn delta_prime(beta: f64) -> Self {
        Self::real(0.0, beta, 0.0)
    }

    pub const fn free() -> Self {
        Self::real(0.0, 0.0, 0.0)
    }

    /// `det 𝒜 = αβ + |γ|²`.
    pub fn det_a(&self) -> f64 {
        self.alpha * self.beta + self.gamma.norm_sqr()
    }

    /// `w = 4 − det 𝒜 + 4i Im γ`. Vanishes exactly on the separating set.
    pub fn coupling_weight(&self) -> Complex64 {
        Complex64::new(4.0 - self.det_a(), 4.0 * self.gamma.im)
    }

    pub fn is_finite(&self) -> bool {
        self.alpha.is_finite() && self.beta.is_finite() && self.gamma.is_finite()
    }
}

/// Half-line coupling `(a, b, c)`, all of dimension 1/length.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HalflineParams {
    pub a: f64,
    pub b: f64,
    pub c: Complex64,
}

impl HalflineParams {
    pub const fn new(a: f64, b: f64, c: Complex64) -> Self {
        Self { a, b, c }
    }

    pub const fn real(a: f64, b: f64, c: f64) -> Self {
        Self::new(a, b, Complex64::new(c, 0.0))
    }

    pub fn is_finite(&self) -> bool {
        self.a.is_finite() && self.b.is_finite() && self.c.is_finite()
    }
}

/// Inverse half-line coupling `(A, B, C)`, all of dimension length.
/// Usable where `β = 0`, e.g. for the `δ` interaction `A = B = C = 1/α`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InverseParams {
    pub a: f64,
    pub b: f64,
    pub c: Complex64,
}

impl InverseParams {
    pub const fn new(a: f64, b: f64, c: Complex64) -> Self {
        Self { a, b, c }
    }
}

/// Transfer-matrix form: unit phase `ω` times a real unimodular matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TransferParams {
    pub omega: Complex64,
    pub ta: f64,
    pub tb: f64,
    pub tc: f64,
    pub td: f64,
}

impl TransferParams {
    pub fn new(omega: Complex64, ta: f64, tb: f64, tc: f64, td: f64) -> Result<Self> {
        let t = Self {
            omega,
            ta,
            tb,
            tc,
            td,
        };
        t.validate()?;
        Ok(t)
    }

    pub fn validate(&self) -> Result<()> {
        if (self.omega.norm() - 1.0).abs() > CONSTRAINT_TOL {
            return Err(GpiError::InvalidParameters("|omega| must be 1"));
        }
        let ad = self.ta * self.td;
        let bc = self.tb * self.tc;
        let scale = 1.0_f64.max(ad.abs() + bc.abs());
        if (ad - bc - 1.0).abs() > CONSTRAINT_TOL * scale {
            return Err(GpiError::InvalidParameters("ta*td - tb*tc must be 1"));
        }
        Ok(())
    }

    /// The real unimodular factor `[[ã, b̃], [c̃, d̃]]`.
    pub fn real_matrix(&self) -> [[f64; 2]; 2] {
        [[self.ta, self.tb], [self.tc, self.td]]
    }
}

/// Carreau's form of the half-line parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CarreauParams {
    pub alpha_c: f64,
    pub beta_c: f64,
    pub rho_c: f64,
    pub theta_c: f64,
}

impl CarreauParams {
    pub fn new(alpha_c: f64, beta_c: f64, rho_c: f64, theta_c: f64) -> Result<Self> {
        let p = Self {
            alpha_c,
            beta_c,
            rho_c,
            theta_c,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.rho_c >= 0.0) {
            return Err(GpiError::InvalidParameters("rho_c must be non-negative"));
        }
        if !(0.0..math::TAU).contains(&self.theta_c) {
            return Err(GpiError::InvalidParameters("theta_c must lie in [0, 2pi)"));
        }
        Ok(())
    }
}

/// Šeba's two-parameter, time-reversal invariant family.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SebaParams {
    pub alpha_s: f64,
    pub beta_s: f64,
    pub gamma_s: f64,
    pub delta_s: f64,
}

impl SebaParams {
    pub fn new(alpha_s: f64, beta_s: f64, gamma_s: f64, delta_s: f64) -> Result<Self> {
        let p = Self {
            alpha_s,
            beta_s,
            gamma_s,
            delta_s,
        };
        p.validate()?;
        Ok(p)
    }

    /// Completes `(γ_s, δ_s)` with the values of `α_s`, `β_s` forced by the
    /// two constraints.
    pub fn from_gamma_delta(gamma_s: f64, delta_s: f64) -> Result<Self> {
        check_denominator(delta_s, delta_s.abs(), "delta_s")?;
        let alpha_s = -2.0 - gamma_s;
        let beta_s = (alpha_s * gamma_s - 1.0) / delta_s;
        Self::new(alpha_s, beta_s, gamma_s, delta_s)
    }

    pub fn validate(&self) -> Result<()> {
        let sum_scale = 2.0_f64.max(self.alpha_s.abs() + self.gamma_s.abs());
        if (self.alpha_s + self.gamma_s + 2.0).abs() > CONSTRAINT_TOL * sum_scale {
            return Err(GpiError::InvalidParameters("alpha_s + gamma_s must be -2"));
        }
        let ag = self.alpha_s * self.gamma_s;
        let bd = self.beta_s * self.delta_s;
        let scale = 1.0_f64.max(ag.abs() + bd.abs());
        if (ag - bd - 1.0).abs() > CONSTRAINT_TOL * scale {
            return Err(GpiError::InvalidParameters(
                "alpha_s*gamma_s - beta_s*delta_s must be 1",
            ));
        }
        Ok(())
    }
}

/// Chernoff–Hughes three-parameter family; always has `β = 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChernoffHughesParams {
    pub r: f64,
    pub z: Complex64,
}

impl ChernoffHughesParams {
    pub const fn new(r: f64, z: Complex64) -> Self {
        Self { r, z }
    }
}

// ---------------------------------------------------------------------------
// Greek <-> half-line <-> inverse

/// Half-line parameters of a Greek coupling; needs `β ≠ 0`.
pub fn greek_to_halfline(g: &GreekParams) -> Result<HalflineParams> {
    check_denominator(g.beta, g.beta.abs(), "beta")?;
    let det = g.det_a();
    let four_beta = 4.0 * g.beta;
    Ok(HalflineParams {
        a: (4.0 + det + 4.0 * g.gamma.re) / four_beta,
        b: (4.0 + det - 4.0 * g.gamma.re) / four_beta,
        c: Complex64::new(det - 4.0, -4.0 * g.gamma.im) / four_beta,
    })
}

/// Greek parameters of a half-line coupling; needs `a + b − 2 Re c ≠ 0`.
pub fn halfline_to_greek(h: &HalflineParams) -> Result<GreekParams> {
    let den = h.a + h.b - 2.0 * h.c.re;
    check_denominator(
        den,
        h.a.abs() + h.b.abs() + 2.0 * h.c.re.abs(),
        "a + b - 2 Re c",
    )?;
    Ok(GreekParams {
        alpha: 4.0 * (h.a * h.b - h.c.norm_sqr()) / den,
        beta: 4.0 / den,
        gamma: Complex64::new(2.0 * (h.a - h.b), -4.0 * h.c.im) / den,
    })
}

/// `(A, B, C) = (b, a, −c) / (ab − |c|²)`.
pub fn halfline_to_inverse(h: &HalflineParams) -> Result<InverseParams> {
    let ab = h.a * h.b;
    let cc = h.c.norm_sqr();
    let den = ab - cc;
    check_denominator(den, ab.abs() + cc, "ab - |c|^2")?;
    Ok(InverseParams {
        a: h.b / den,
        b: h.a / den,
        c: -h.c / den,
    })
}

/// `(a, b, c) = (B, A, −C) / (AB − |C|²)`.
pub fn inverse_to_halfline(i: &InverseParams) -> Result<HalflineParams> {
    let ab = i.a * i.b;
    let cc = i.c.norm_sqr();
    let den = ab - cc;
    check_denominator(den, ab.abs() + cc, "AB - |C|^2")?;
    Ok(HalflineParams {
        a: i.b / den,
        b: i.a / den,
        c: -i.c / den,
    })
}

/// Inverse parameters of a Greek coupling; needs `α ≠ 0`.
pub fn greek_to_inverse(g: &GreekParams) -> Result<InverseParams> {
    check_denominator(g.alpha, g.alpha.abs(), "alpha")?;
    let det = g.det_a();
    let four_alpha = 4.0 * g.alpha;
    Ok(InverseParams {
        a: (4.0 + det - 4.0 * g.gamma.re) / four_alpha,
        b: (4.0 + det + 4.0 * g.gamma.re) / four_alpha,
        c: g.coupling_weight() / four_alpha,
    })
}

/// Greek parameters of an inverse coupling; needs `A + B + 2 Re C ≠ 0`.
pub fn inverse_to_greek(i: &InverseParams) -> Result<GreekParams> {
    let den = i.a + i.b + 2.0 * i.c.re;
    check_denominator(
        den,
        i.a.abs() + i.b.abs() + 2.0 * i.c.re.abs(),
        "A + B + 2 Re C",
    )?;
    Ok(GreekParams {
        alpha: 4.0 / den,
        beta: 4.0 * (i.a * i.b - i.c.norm_sqr()) / den,
        gamma: Complex64::new(2.0 * (i.b - i.a), 4.0 * i.c.im) / den,
    })
}

// ---------------------------------------------------------------------------
// Transfer matrix

pub fn transfer_to_halfline(t: &TransferParams) -> Result<HalflineParams> {
    t.validate()?;
    check_denominator(t.tb, t.tb.abs(), "tb")?;
    Ok(HalflineParams {
        a: t.td / t.tb,
        b: t.ta / t.tb,
        c: -t.omega / t.tb,
    })
}

pub fn transfer_to_greek(t: &TransferParams) -> Result<GreekParams> {
    t.validate()?;
    let den = t.ta + t.td + 2.0 * t.omega.re;
    check_denominator(
        den,
        t.ta.abs() + t.td.abs() + 2.0 * t.omega.re.abs(),
        "ta + td + 2 Re omega",
    )?;
    Ok(GreekParams {
        alpha: 4.0 * t.tc / den,
        beta: 4.0 * t.tb / den,
        gamma: Complex64::new(2.0 * (t.td - t.ta), 4.0 * t.omega.im) / den,
    })
}

/// Transfer form of a coupled Greek scheme.
///
/// With `w = 4 − det 𝒜 + 4i Im γ` the phase is `ω = w/|w|` and the real
/// factor is `[[4 + det 𝒜 − 4 Re γ, 4β], [4α, 4 + det 𝒜 + 4 Re γ]] / |w|`.
/// Exists for every non-separating coupling.
pub fn greek_to_transfer(g: &GreekParams) -> Result<TransferParams> {
    let det = g.det_a();
    let w = g.coupling_weight();
    check_complex_denominator(
        w,
        4.0 + det.abs() + 4.0 * g.gamma.im.abs(),
        "4 - det A + 4i Im gamma",
    )?;
    let m = w.norm();
    Ok(TransferParams {
        omega: w / m,
        ta: (4.0 + det - 4.0 * g.gamma.re) / m,
        tb: 4.0 * g.beta / m,
        tc: 4.0 * g.alpha / m,
        td: (4.0 + det + 4.0 * g.gamma.re) / m,
    })
}

// ---------------------------------------------------------------------------
// Literature families

pub fn carreau_to_halfline(p: &CarreauParams) -> Result<HalflineParams> {
    p.validate()?;
    Ok(HalflineParams {
        a: p.rho_c + p.beta_c,
        b: p.rho_c + p.alpha_c,
        c: -Complex64::from_polar(p.rho_c, -p.theta_c),
    })
}

/// Inverse of [`carreau_to_halfline`]; the angle is arbitrary (set to 0)
/// when `c = 0`.
pub fn halfline_to_carreau(h: &HalflineParams) -> CarreauParams {
    let rho = h.c.norm();
    let theta = if rho == 0.0 {
        0.0
    } else {
        // c = −ρ e^{−iθ}  ⇒  θ = −arg(−c)
        math::wrap_tau(-(-h.c).arg())
    };
    CarreauParams {
        alpha_c: h.b - rho,
        beta_c: h.a - rho,
        rho_c: rho,
        theta_c: if theta >= math::TAU { 0.0 } else { theta },
    }
}

pub fn seba_to_halfline(s: &SebaParams) -> Result<HalflineParams> {
    s.validate()?;
    check_denominator(s.delta_s, s.delta_s.abs(), "delta_s")?;
    Ok(HalflineParams::real(
        -(s.gamma_s + 2.0) / s.delta_s,
        s.gamma_s / s.delta_s,
        1.0 / s.delta_s,
    ))
}

/// Šeba form of a half-line coupling. The family is exactly
/// `c ∈ ℝ∖{0}` with `a + b + 2c = 0`.
pub fn halfline_to_seba(h: &HalflineParams) -> Result<SebaParams> {
    let scale = h.a.abs() + h.b.abs() + 2.0 * h.c.norm();
    if h.c.im.abs() > CONSTRAINT_TOL * scale {
        return Err(GpiError::InvalidParameters("Seba family needs real c"));
    }
    if (h.a + h.b + 2.0 * h.c.re).abs() > CONSTRAINT_TOL * scale {
        return Err(GpiError::InvalidParameters("Seba family needs a + b + 2c = 0"));
    }
    check_denominator(h.c.re, h.c.re.abs(), "c")?;
    let delta_s = 1.0 / h.c.re;
    SebaParams::from_gamma_delta(h.b * delta_s, delta_s)
}

pub fn chernoff_hughes_to_greek(p: &ChernoffHughesParams) -> Result<GreekParams> {
    let ez = p.z.exp();
    let one = Complex64::new(1.0, 0.0);
    let den = (one + ez).norm_sqr();
    check_denominator(den, (1.0 + ez.norm()).powi(2), "|1 + e^z|^2")?;
    let e2 = math::exp(2.0 * p.z.re);
    let ezb = ez.conj();
    Ok(GreekParams {
        alpha: 4.0 * p.r * (e2 - 1.0) / den,
        beta: 0.0,
        gamma: (ezb - one) / (ezb + one) * 2.0,
    })
}

pub fn chernoff_hughes_to_inverse(p: &ChernoffHughesParams) -> Result<InverseParams> {
    let e2 = math::exp(2.0 * p.z.re);
    let den = p.r * (e2 - 1.0);
    check_denominator(den, p.r.abs() * (e2 + 1.0), "r (e^{2 Re z} - 1)")?;
    Ok(InverseParams {
        a: 1.0 / den,
        b: e2 / den,
        c: p.z.conj().exp() / den,
    })
}

/// Chernoff–Hughes form of a Greek coupling. Representable iff `β = 0`,
/// `γ ≠ ±2` and (`Re γ ≠ 0` or `α = 0`); `z` is taken on the principal
/// branch of the logarithm.
pub fn greek_to_chernoff_hughes(g: &GreekParams) -> Result<ChernoffHughesParams> {
    if g.beta != 0.0 {
        return Err(GpiError::InvalidParameters("Chernoff-Hughes family needs beta = 0"));
    }
    let two = Complex64::new(2.0, 0.0);
    check_complex_denominator(two - g.gamma, 2.0 + g.gamma.norm(), "2 - gamma")?;
    let ratio = (two + g.gamma) / (two - g.gamma);
    check_complex_denominator(ratio, 1.0, "2 + gamma")?;
    // e^{z̄} = (2 + γ)/(2 − γ)
    let z = ratio.ln().conj();
    if g.alpha == 0.0 {
        return Ok(ChernoffHughesParams { r: 0.0, z });
    }
    let e2 = math::exp(2.0 * z.re);
    check_denominator(e2 - 1.0, e2 + 1.0, "Re gamma")?;
    let r = g.alpha * (Complex64::new(1.0, 0.0) + z.exp()).norm_sqr() / (4.0 * (e2 - 1.0));
    Ok(ChernoffHughesParams { r, z })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn close(x: f64, y: f64, tol: f64) -> bool {
        (x - y).abs() <= tol * (1.0 + y.abs())
    }

    fn close_c(x: Complex64, y: Complex64, tol: f64) -> bool {
        (x - y).norm() <= tol * (1.0 + y.norm())
    }

    #[test]
    fn greek_to_halfline_example() {
        let h = greek_to_halfline(&GreekParams::real(4.0, 4.0, -2.0)).unwrap();
        assert!(close(h.a, 1.0, 1e-15) && close(h.b, 2.0, 1e-15));
        assert!(close_c(h.c, c(1.0, 0.0), 1e-15));
    }

    #[test]
    fn delta_prime_halfline_form() {
        for beta in [-2.0, 0.5, 3.0] {
            let h = greek_to_halfline(&GreekParams::delta_prime(beta)).unwrap();
            assert!(close(h.a, 1.0 / beta, 1e-15));
            assert!(close(h.b, 1.0 / beta, 1e-15));
            assert!(close_c(h.c, c(-1.0 / beta, 0.0), 1e-15));
            let g = halfline_to_greek(&h).unwrap();
            assert!(close(g.alpha, 0.0, 1e-14) && close(g.beta, beta, 1e-14));
            assert!(g.gamma.norm() < 1e-14);
        }
    }

    #[test]
    fn decoupled_greek_gives_zero_c() {
        let h = greek_to_halfline(&GreekParams::real(0.0, 1.0, 2.0)).unwrap();
        assert_eq!(h.c, c(0.0, 0.0));
    }

    #[test]
    fn beta_zero_is_degenerate_for_halfline() {
        let err = greek_to_halfline(&GreekParams::delta(1.0)).unwrap_err();
        assert_eq!(
            err,
            GpiError::DegenerateParametrization { denominator: "beta" }
        );
    }

    #[test]
    fn halfline_to_greek_example() {
        let g = halfline_to_greek(&HalflineParams::real(1.0, 2.0, 1.0)).unwrap();
        assert!(close(g.alpha, 4.0, 1e-15) && close(g.beta, 4.0, 1e-15));
        assert!(close_c(g.gamma, c(-2.0, 0.0), 1e-15));
    }

    #[test]
    fn decoupled_halfline_gives_det_four() {
        let g = halfline_to_greek(&HalflineParams::real(0.7, -1.3, 0.0)).unwrap();
        assert!(close(g.det_a(), 4.0, 1e-14));
        assert_eq!(g.gamma.im, 0.0);
    }

    #[test]
    fn halfline_to_greek_degenerate() {
        assert!(matches!(
            halfline_to_greek(&HalflineParams::real(1.0, 1.0, 1.0)),
            Err(GpiError::DegenerateParametrization { .. })
        ));
    }

    #[test]
    fn inverse_example() {
        // ab − |c|² = 1 for (1, 2, 1).
        let i = halfline_to_inverse(&HalflineParams::real(1.0, 2.0, 1.0)).unwrap();
        assert!(close(i.a, 2.0, 1e-15) && close(i.b, 1.0, 1e-15));
        assert!(close_c(i.c, c(-1.0, 0.0), 1e-15));
        let h = inverse_to_halfline(&i).unwrap();
        assert!(close(h.a, 1.0, 1e-15) && close(h.b, 2.0, 1e-15));
        assert!(close_c(h.c, c(1.0, 0.0), 1e-15));
    }

    #[test]
    fn delta_inverse_form() {
        for alpha in [-2.0, 0.25, 5.0] {
            let i = greek_to_inverse(&GreekParams::delta(alpha)).unwrap();
            assert!(close(i.a, 1.0 / alpha, 1e-15));
            assert!(close(i.b, 1.0 / alpha, 1e-15));
            assert!(close_c(i.c, c(1.0 / alpha, 0.0), 1e-15));
            let g = inverse_to_greek(&i).unwrap();
            assert!(close(g.alpha, alpha, 1e-14) && g.beta.abs() < 1e-14);
        }
    }

    #[test]
    fn inverse_decouples_with_c() {
        let i = halfline_to_inverse(&HalflineParams::real(2.0, 3.0, 0.0)).unwrap();
        assert_eq!(i.c.norm(), 0.0);
        let h = inverse_to_halfline(&InverseParams::new(0.5, 2.0, c(0.0, 0.0))).unwrap();
        assert_eq!(h.c.norm(), 0.0);
    }

    #[test]
    fn transfer_delta_and_delta_prime() {
        let one = c(1.0, 0.0);
        let delta = TransferParams::new(one, 1.0, 0.0, -3.0, 1.0).unwrap();
        assert!(matches!(
            transfer_to_halfline(&delta),
            Err(GpiError::DegenerateParametrization { denominator: "tb" })
        ));
        let g = transfer_to_greek(&delta).unwrap();
        assert_eq!(g, GreekParams::delta(-3.0));

        let dp = TransferParams::new(one, 1.0, 0.7, 0.0, 1.0).unwrap();
        assert_eq!(transfer_to_greek(&dp).unwrap(), GreekParams::delta_prime(0.7));

        let free = TransferParams::new(one, 1.0, 0.0, 0.0, 1.0).unwrap();
        assert_eq!(transfer_to_greek(&free).unwrap(), GreekParams::free());
    }

    #[test]
    fn transfer_validation() {
        assert!(TransferParams::new(c(1.1, 0.0), 1.0, 0.0, 0.0, 1.0).is_err());
        assert!(TransferParams::new(c(1.0, 0.0), 2.0, 0.0, 0.0, 1.0).is_err());
    }

    #[test]
    fn transfer_routes_agree() {
        let t = TransferParams::new(c(0.6, 0.8), 2.0, 0.5, 1.0, 0.75).unwrap();
        let direct = transfer_to_greek(&t).unwrap();
        let via = halfline_to_greek(&transfer_to_halfline(&t).unwrap()).unwrap();
        assert!(close(direct.alpha, via.alpha, 1e-13));
        assert!(close(direct.beta, via.beta, 1e-13));
        assert!(close_c(direct.gamma, via.gamma, 1e-13));
    }

    #[test]
    fn greek_transfer_round_trip() {
        let g = GreekParams::new(1.3, -0.4, c(0.2, -0.9));
        let t = greek_to_transfer(&g).unwrap();
        t.validate().unwrap();
        let back = transfer_to_greek(&t).unwrap();
        assert!(close(back.alpha, g.alpha, 1e-13));
        assert!(close(back.beta, g.beta, 1e-13));
        assert!(close_c(back.gamma, g.gamma, 1e-13));
    }

    #[test]
    fn greek_transfer_rejects_separating() {
        assert!(greek_to_transfer(&GreekParams::real(0.0, 1.0, 2.0)).is_err());
    }

    #[test]
    fn carreau_examples() {
        let dp = carreau_to_halfline(&CarreauParams::new(0.0, 0.0, 0.5, 0.0).unwrap()).unwrap();
        let g = halfline_to_greek(&dp).unwrap();
        assert!(close(g.beta, 2.0, 1e-15) && g.alpha.abs() < 1e-15 && g.gamma.norm() < 1e-15);

        let dec = carreau_to_halfline(&CarreauParams::new(1.0, 2.0, 0.0, 1.0).unwrap()).unwrap();
        assert_eq!(dec.c.norm(), 0.0);

        let h = carreau_to_halfline(&CarreauParams::new(1.0, 2.0, 1.0, math::PI).unwrap())
            .unwrap();
        assert!(close(h.a, 3.0, 1e-15) && close(h.b, 2.0, 1e-15));
        assert!(close_c(h.c, c(1.0, 0.0), 1e-15));
    }

    #[test]
    fn carreau_round_trip() {
        let p = CarreauParams::new(-0.3, 1.7, 0.8, 4.0).unwrap();
        let q = halfline_to_carreau(&carreau_to_halfline(&p).unwrap());
        assert!(close(q.alpha_c, p.alpha_c, 1e-14));
        assert!(close(q.beta_c, p.beta_c, 1e-14));
        assert!(close(q.rho_c, p.rho_c, 1e-14));
        assert!(close(q.theta_c, p.theta_c, 1e-14));
    }

    #[test]
    fn carreau_validation() {
        assert!(CarreauParams::new(0.0, 0.0, -1.0, 0.0).is_err());
        assert!(CarreauParams::new(0.0, 0.0, 1.0, math::TAU).is_err());
    }

    #[test]
    fn seba_examples() {
        let beta0 = 1.5;
        let s = SebaParams::from_gamma_delta(-1.0, -beta0).unwrap();
        let h = seba_to_halfline(&s).unwrap();
        assert!(close(h.a, 1.0 / beta0, 1e-15) && close(h.b, 1.0 / beta0, 1e-15));
        assert!(close_c(h.c, c(-1.0 / beta0, 0.0), 1e-15));

        let s = SebaParams::from_gamma_delta(-1.0, 1.0).unwrap();
        assert_eq!(seba_to_halfline(&s).unwrap(), HalflineParams::real(-1.0, -1.0, 1.0));
    }

    #[test]
    fn seba_round_trip_and_validation() {
        let s = SebaParams::from_gamma_delta(0.4, -2.5).unwrap();
        let back = halfline_to_seba(&seba_to_halfline(&s).unwrap()).unwrap();
        assert!(close(back.gamma_s, s.gamma_s, 1e-14));
        assert!(close(back.delta_s, s.delta_s, 1e-14));
        assert!(SebaParams::new(0.0, 0.0, 0.0, 1.0).is_err());
        assert!(halfline_to_seba(&HalflineParams::real(1.0, 2.0, 1.0)).is_err());
    }

    #[test]
    fn chernoff_hughes_examples() {
        let off = chernoff_hughes_to_greek(&ChernoffHughesParams::new(0.0, c(0.7, 0.0))).unwrap();
        assert_eq!(off.alpha, 0.0);
        assert_eq!(off.beta, 0.0);
        assert!(off.gamma.im.abs() < 1e-15 && off.gamma.re != 0.0);

        let free = chernoff_hughes_to_greek(&ChernoffHughesParams::new(2.0, c(0.0, 0.0))).unwrap();
        assert_eq!(free, GreekParams::free());

        let g = chernoff_hughes_to_greek(&ChernoffHughesParams::new(1.0, c(core::f64::consts::LN_2, 0.0)))
            .unwrap();
        assert!(close(g.alpha, 4.0 / 3.0, 1e-15));
        assert!(close_c(g.gamma, c(2.0 / 3.0, 0.0), 1e-15));
    }

    #[test]
    fn chernoff_hughes_rejects_minus_one() {
        let p = ChernoffHughesParams::new(1.0, c(0.0, math::PI));
        assert!(chernoff_hughes_to_greek(&p).is_err());
    }

    #[test]
    fn chernoff_hughes_inverse_route() {
        for (r, z) in [(1.0, c(0.3, 0.4)), (0.7, c(-0.5, 1.1)), (-2.0, c(0.2, -2.0))] {
            let p = ChernoffHughesParams::new(r, z);
            let direct = chernoff_hughes_to_greek(&p).unwrap();
            let via = inverse_to_greek(&chernoff_hughes_to_inverse(&p).unwrap()).unwrap();
            assert!(close(direct.alpha, via.alpha, 1e-13));
            assert!(via.beta.abs() < 1e-13);
            assert!(close_c(direct.gamma, via.gamma, 1e-13));
        }
    }

    #[test]
    fn chernoff_hughes_reverse() {
        let p = ChernoffHughesParams::new(0.9, c(0.4, -0.6));
        let g = chernoff_hughes_to_greek(&p).unwrap();
        let q = greek_to_chernoff_hughes(&g).unwrap();
        assert!(close(q.r, p.r, 1e-13));
        assert!(close_c(q.z, p.z, 1e-13));
        // δ with α ≠ 0 is outside the family.
        assert!(greek_to_chernoff_hughes(&GreekParams::delta(1.0)).is_err());
    }
}
