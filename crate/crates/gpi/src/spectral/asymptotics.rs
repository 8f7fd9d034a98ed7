use alloc::vec::Vec;

use num_complex::Complex64;

use super::{s_matrix, I};
use crate::error::Result;
use crate::numeric::richardson;
use crate::scheme::CouplingScheme;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LowEnergyRegime {
    /// `α ≠ 0`: full decoupling, `r → −1`, `t → 0`.
    AlphaNonzero,
    /// `α = 0`: finite limits in closed form.
    AlphaZero,
    /// Robin side of a separated scheme.
    Robin,
    /// Dirichlet or Neumann side; `r` is constant.
    Constant,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HighEnergyRegime {
    /// `β ≠ 0`: full decoupling, `r → +1`, `t → 0`.
    BetaNonzero,
    /// `β = 0`: finite limits in closed form.
    BetaZero,
    Robin,
    Constant,
}

/// First two terms `r ≈ r0 + r1 s`, `t ≈ t0 + t1 s` with `s = k` at low
/// energy and `s = 1/k` at high energy.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Expansion {
    pub r0: Complex64,
    pub r1: Complex64,
    pub t0: Complex64,
    pub t1: Complex64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScatteringAsymptotics {
    pub low_regime: LowEnergyRegime,
    pub low: Expansion,
    pub high_regime: HighEnergyRegime,
    pub high: Expansion,
}

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// Leading behaviour of `r` and `t` as `k → 0⁺` and `k → ∞`.
pub fn scattering_asymptotics(s: &CouplingScheme) -> ScatteringAsymptotics {
    match s {
        CouplingScheme::Coupled(g) => {
            let det = g.det_a();
            let re = g.gamma.re;
            let w = g.coupling_weight();
            let (low_regime, low) = if g.alpha != 0.0 {
                let f = -I / (2.0 * g.alpha);
                (
                    LowEnergyRegime::AlphaNonzero,
                    Expansion {
                        r0: c(-1.0),
                        r1: f * (4.0 + det + 4.0 * re),
                        t0: ZERO,
                        t1: f * w,
                    },
                )
            } else {
                let s = 4.0 + det;
                let t0 = w / s;
                (
                    LowEnergyRegime::AlphaZero,
                    Expansion {
                        r0: c(4.0 * re / s),
                        r1: -I * 2.0 * g.beta * (s - 4.0 * re) / (s * s),
                        t0,
                        t1: t0 * I * 2.0 * g.beta / s,
                    },
                )
            };
            let (high_regime, high) = if g.beta != 0.0 {
                let f = I / (2.0 * g.beta);
                (
                    HighEnergyRegime::BetaNonzero,
                    Expansion {
                        r0: c(1.0),
                        r1: -f * (4.0 + det - 4.0 * re),
                        t0: ZERO,
                        t1: f * w,
                    },
                )
            } else {
                let s = 4.0 + det;
                (
                    HighEnergyRegime::BetaZero,
                    Expansion {
                        r0: c(4.0 * re / s),
                        r1: -I * 2.0 * g.alpha * (s + 4.0 * re) / (s * s),
                        t0: w / s,
                        t1: -I * 2.0 * g.alpha * w / (s * s),
                    },
                )
            };
            ScatteringAsymptotics {
                low_regime,
                low,
                high_regime,
                high,
            }
        }
        CouplingScheme::Separated(sep) => {
            let constant = |r: f64| Expansion {
                r0: c(r),
                r1: ZERO,
                t0: ZERO,
                t1: ZERO,
            };
            match sep.left.slope() {
                None => ScatteringAsymptotics {
                    low_regime: LowEnergyRegime::Constant,
                    low: constant(-1.0),
                    high_regime: HighEnergyRegime::Constant,
                    high: constant(-1.0),
                },
                Some(b) if b == 0.0 => ScatteringAsymptotics {
                    low_regime: LowEnergyRegime::Constant,
                    low: constant(1.0),
                    high_regime: HighEnergyRegime::Constant,
                    high: constant(1.0),
                },
                Some(b) => ScatteringAsymptotics {
                    low_regime: LowEnergyRegime::Robin,
                    low: Expansion {
                        r1: -I * 2.0 / b,
                        ..constant(-1.0)
                    },
                    high_regime: HighEnergyRegime::Robin,
                    high: Expansion {
                        r1: -I * 2.0 * b,
                        ..constant(1.0)
                    },
                },
            }
        }
    }
}

fn extrapolate(s: &CouplingScheme, ks: &[f64], var: impl Fn(f64) -> f64) -> Result<Expansion> {
    let mut rs = Vec::with_capacity(ks.len());
    let mut ts = Vec::with_capacity(ks.len());
    for &k in ks {
        let a = s_matrix(s, k)?;
        rs.push(a.r);
        ts.push(a.t);
    }
    // Difference quotients between neighbouring samples have an error
    // series in integer powers of the step, like the values themselves.
    let slope = |vals: &[Complex64]| -> Complex64 {
        let d: Vec<Complex64> = vals
            .windows(2)
            .zip(ks.windows(2))
            .map(|(v, k)| (v[0] - v[1]) / (var(k[0]) - var(k[1])))
            .collect();
        richardson(&d, 2.0)
    };
    Ok(Expansion {
        r0: richardson(&rs, 2.0),
        r1: slope(&rs),
        t0: richardson(&ts, 2.0),
        t1: slope(&ts),
    })
}

/// Numerical estimate of the two expansions from `s_matrix` alone.
///
/// Low energy samples `k = h/2^j`, high energy `k = 2^j H`, `j = 0..4`.
/// Limits come from a four-level Richardson tableau on the samples, slopes
/// from a three-level tableau on the difference quotients of neighbours.
pub fn richardson_asymptotics(s: &CouplingScheme, h: f64, big_h: f64) -> Result<(Expansion, Expansion)> {
    let low_ks = [h, h / 2.0, h / 4.0, h / 8.0];
    let high_ks = [big_h, 2.0 * big_h, 4.0 * big_h, 8.0 * big_h];
    let low = extrapolate(s, &low_ks, |k| k)?;
    let high = extrapolate(s, &high_ks, |k| 1.0 / k)?;
    Ok((low, high))
}
