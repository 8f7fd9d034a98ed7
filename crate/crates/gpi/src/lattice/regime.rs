use alloc::vec::Vec;

use super::{band_condition_lhs_bound, band_structure, LatticeSpec};
use crate::error::{GpiError, Result};
use crate::math::{self, PI};
use crate::numeric::{linear_fit, LinearFit};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    /// `β ≠ 0`: bands of constant width in energy.
    DeltaPrimeLike,
    /// `β = 0`, `Re γ ≠ 0`: bands and gaps both widen.
    Intermediate,
    /// `β = 0`, `Re γ = 0`: gaps of constant width, each touching `(πm/ℓ)²`.
    DeltaLike,
}

impl Regime {
    pub fn of(spec: &LatticeSpec) -> Self {
        let g = spec.greek();
        if g.beta != 0.0 {
            Regime::DeltaPrimeLike
        } else if g.gamma.re != 0.0 {
            Regime::Intermediate
        } else {
            Regime::DeltaLike
        }
    }
}

/// Asymptotic widths.
///
/// `DeltaPrimeLike` fills `band_width` and `centre_shift` (energy, the
/// shift is `centre − (πm/ℓ)²`); `Intermediate` fills `band_width` and
/// `gap_width` measured in `kℓ` over one period; `DeltaLike` fills
/// `gap_width` in energy.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct RegimeValues {
    pub band_width: Option<f64>,
    pub gap_width: Option<f64>,
    pub centre_shift: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RegimeReport {
    pub regime: Regime,
    pub m_lo: usize,
    pub m_hi: usize,
    pub predicted: RegimeValues,
    /// Intercepts of straight-line fits against `1/m`.
    pub measured: RegimeValues,
    /// Largest relative deviation over the filled fields.
    pub relative_error: f64,
    /// Band widths in energy against `m`.
    pub band_width_fit: LinearFit,
    /// Gap widths in energy against `m`.
    pub gap_width_fit: LinearFit,
    /// `centre − (πm/ℓ)²` per band in the range.
    pub centre_shifts: Vec<(usize, f64)>,
}

fn predicted(spec: &LatticeSpec, regime: Regime) -> RegimeValues {
    let g = spec.greek();
    let ell = spec.ell();
    let w = band_condition_lhs_bound(spec);
    match regime {
        Regime::DeltaPrimeLike => RegimeValues {
            band_width: Some(2.0 * w / (g.beta.abs() * ell)),
            centre_shift: Some((4.0 + g.det_a()) / (g.beta * ell)),
            gap_width: None,
        },
        Regime::Intermediate => {
            let x = w / (4.0 + g.gamma.norm_sqr());
            RegimeValues {
                band_width: Some(2.0 * math::asin(x)),
                gap_width: Some(2.0 * math::acos(x)),
                centre_shift: None,
            }
        }
        Regime::DeltaLike => RegimeValues {
            gap_width: Some(8.0 * g.alpha.abs() / ((4.0 + g.gamma.norm_sqr()) * ell)),
            ..RegimeValues::default()
        },
    }
}

fn intercept(ms: &[f64], ys: &[f64]) -> f64 {
    let inv: Vec<f64> = ms.iter().map(|m| 1.0 / m).collect();
    linear_fit(&inv, ys).intercept
}

fn rel(measured: Option<f64>, predicted: Option<f64>) -> f64 {
    match (measured, predicted) {
        (Some(a), Some(b)) if b != 0.0 => ((a - b) / b).abs(),
        (Some(a), Some(_)) => a.abs(),
        _ => 0.0,
    }
}

/// Compares the bands and gaps with index in `[m_lo, m_hi]` against the
/// asymptotic law of the applicable regime.
pub fn asymptotic_regime(spec: &LatticeSpec, m_lo: usize, m_hi: usize) -> Result<RegimeReport> {
    if m_hi < m_lo || m_hi - m_lo + 1 < 5 {
        return Err(GpiError::InsufficientBands {
            available: (m_hi + 1).saturating_sub(m_lo),
        });
    }
    let ell = spec.ell();
    let (bands, gaps) = band_structure(spec, m_hi)?;
    let in_range = |m: usize| (m_lo..=m_hi).contains(&m) && m > 0;
    let bands: Vec<_> = bands
        .into_iter()
        .filter(|b| in_range(b.m) && b.e_hi.is_finite())
        .collect();
    let gaps: Vec<_> = gaps.into_iter().filter(|g| in_range(g.m)).collect();
    if bands.len() < 5 || gaps.len() < 5 {
        return Err(GpiError::InsufficientBands {
            available: bands.len().min(gaps.len()),
        });
    }

    let bm: Vec<f64> = bands.iter().map(|b| b.m as f64).collect();
    let gm: Vec<f64> = gaps.iter().map(|g| g.m as f64).collect();
    let bw: Vec<f64> = bands.iter().map(|b| b.e_hi - b.e_lo).collect();
    let gw: Vec<f64> = gaps.iter().map(|g| g.e_hi - g.e_lo).collect();
    let centre_shifts: Vec<(usize, f64)> = bands
        .iter()
        .map(|b| {
            let k = PI * b.m as f64 / ell;
            (b.m, 0.5 * (b.e_lo + b.e_hi) - k * k)
        })
        .collect();

    let regime = Regime::of(spec);
    let kl = |lo: f64, hi: f64| ell * (math::sqrt(hi.max(0.0)) - math::sqrt(lo.max(0.0)));
    let measured = match regime {
        Regime::DeltaPrimeLike => {
            let cs: Vec<f64> = centre_shifts.iter().map(|c| c.1).collect();
            RegimeValues {
                band_width: Some(intercept(&bm, &bw)),
                centre_shift: Some(intercept(&bm, &cs)),
                gap_width: None,
            }
        }
        Regime::Intermediate => {
            let bk: Vec<f64> = bands.iter().map(|b| kl(b.e_lo, b.e_hi)).collect();
            let gk: Vec<f64> = gaps.iter().map(|g| kl(g.e_lo, g.e_hi)).collect();
            RegimeValues {
                band_width: Some(intercept(&bm, &bk)),
                gap_width: Some(intercept(&gm, &gk)),
                centre_shift: None,
            }
        }
        Regime::DeltaLike => RegimeValues {
            gap_width: Some(intercept(&gm, &gw)),
            ..RegimeValues::default()
        },
    };
    let predicted = predicted(spec, regime);
    let relative_error = rel(measured.band_width, predicted.band_width)
        .max(rel(measured.gap_width, predicted.gap_width))
        .max(rel(measured.centre_shift, predicted.centre_shift));

    Ok(RegimeReport {
        regime,
        m_lo,
        m_hi,
        predicted,
        measured,
        relative_error,
        band_width_fit: linear_fit(&bm, &bw),
        gap_width_fit: linear_fit(&gm, &gw),
        centre_shifts,
    })
}
