use alloc::vec::Vec;

use super::{band_condition_lhs_bound, rhs_energy, LatticeSpec};
use crate::error::{GpiError, Result};
use crate::math::{self, PI};
use crate::numeric::bisect;
use crate::spectral::point_spectrum;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BandOptions {
    /// Grid points per `π/ℓ` of wavenumber; at least 40.
    pub samples_per_period: usize,
    /// Dispersion points stored with each band.
    pub dispersion_samples: usize,
}

impl Default for BandOptions {
    fn default() -> Self {
        Self {
            samples_per_period: 40,
            dispersion_samples: 17,
        }
    }
}

/// A closed band `[e_lo, e_hi]`; `e_hi` is infinite for a band that never
/// closes (the free comb).
#[derive(Debug, Clone, PartialEq)]
pub struct BandInterval {
    pub m: usize,
    pub e_lo: f64,
    pub e_hi: f64,
    /// `(energy, θ)` with `θ ∈ [0, π]`.
    pub samples: Vec<(f64, f64)>,
}

/// An open gap between two consecutive bands.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GapInterval {
    pub m: usize,
    pub e_lo: f64,
    pub e_hi: f64,
}

// Energies are handled through `t` with `E = t|t|`: `t = k` above zero and
// `t = −κ` below.
fn energy(t: f64) -> f64 {
    t * t.abs()
}

fn to_t(e: f64) -> f64 {
    if e >= 0.0 {
        math::sqrt(e)
    } else {
        -math::sqrt(-e)
    }
}

struct Cell<'a> {
    spec: &'a LatticeSpec,
    bound: f64,
}

impl Cell<'_> {
    fn h(&self, t: f64) -> f64 {
        rhs_energy(&self.spec.greek, self.spec.ell, energy(t)).0 / self.bound
    }

    /// Sign-faithful `dh/dE`.
    fn dh(&self, t: f64) -> f64 {
        rhs_energy(&self.spec.greek, self.spec.ell, energy(t)).1
    }
}

// Beyond κℓ ≈ 700 the hyperbolic functions overflow; bands that deep are
// narrower than e^{-600} and cannot be resolved anyway.
const MAX_KAPPA_ELL: f64 = 600.0;

/// A `κ` below which `|h| > 1` and growing, so no band lies further down.
fn negative_cutoff(cell: &Cell, step: f64) -> f64 {
    let ell = cell.spec.ell;
    let deepest = point_spectrum(&cell.spec.scheme())
        .iter()
        .map(|p| p.kappa)
        .fold(0.0, f64::max);
    let cap = MAX_KAPPA_ELL / ell;
    let mut kappa = (2.0 * deepest + 8.0 / ell).min(cap);
    while kappa < cap {
        let h = cell.h(-kappa);
        let (h2, d) = (cell.h(-kappa - step), cell.dh(-kappa));
        // Growing in modulus as E decreases: sign(h) dh/dE < 0.
        if h.abs() > 1.0 && h2.abs() > h.abs() && h * d < 0.0 {
            return kappa;
        }
        kappa = (2.0 * kappa).min(cap);
    }
    cap
}

fn classify(x: f64) -> usize {
    // Nearest integer, ties broken downward.
    let m = math::ceil(x - 0.5);
    if m > 0.0 {
        m as usize
    } else {
        0
    }
}

pub fn band_structure(spec: &LatticeSpec, m_max: usize) -> Result<(Vec<BandInterval>, Vec<GapInterval>)> {
    band_structure_with(spec, m_max, &BandOptions::default())
}

/// Bands and gaps up to index `m_max`.
///
/// `h(E) = RHS(E)/|w|` is sampled on a uniform grid in `t`. Critical points
/// of `h` are located by bisection on `dh/dE`; on each monotone piece the
/// crossings of `h = ±1` are bisected to full precision. Bands are indexed
/// by the nearest `ℓk/π` of their midpoint (ties downward), bumped so that
/// indices increase. Gaps are indexed the same way.
pub fn band_structure_with(
    spec: &LatticeSpec,
    m_max: usize,
    opts: &BandOptions,
) -> Result<(Vec<BandInterval>, Vec<GapInterval>)> {
    if opts.samples_per_period < 40 {
        return Err(GpiError::InvalidParameters("need at least 40 samples per period"));
    }
    let ell = spec.ell;
    let cell = Cell {
        spec,
        bound: band_condition_lhs_bound(spec),
    };
    let step = PI / (ell * opts.samples_per_period as f64);
    let t_top = (m_max as f64 + 2.0) * PI / ell;
    let kappa_max = negative_cutoff(&cell, step);
    let n_neg = math::ceil(kappa_max / step) as i64;
    let n_pos = math::ceil(t_top / step) as i64;
    let ts: Vec<f64> = (-n_neg..=n_pos).map(|j| j as f64 * step).collect();
    let ds: Vec<f64> = ts.iter().map(|&t| cell.dh(t)).collect();

    let mut breaks = Vec::with_capacity(ts.len() / 8);
    breaks.push(ts[0]);
    let mut last_crit: Option<usize> = None;
    for j in 0..ts.len() - 1 {
        let (a, b) = (ds[j], ds[j + 1]);
        let turns = (a < 0.0 && b >= 0.0) || (a > 0.0 && b <= 0.0);
        if !turns {
            continue;
        }
        if last_crit == Some(j.wrapping_sub(1)) {
            return Err(GpiError::GridTooCoarse { k: ts[j] });
        }
        last_crit = Some(j);
        if let Some(tc) = bisect(|t| cell.dh(t), ts[j], ts[j + 1], 0.0) {
            breaks.push(tc);
        }
    }
    breaks.push(ts[ts.len() - 1]);

    let mut points = breaks.clone();
    for w in breaks.windows(2) {
        let (p, q) = (w[0], w[1]);
        for level in [1.0, -1.0] {
            let f = |t: f64| cell.h(t) - level;
            let (fp, fq) = (f(p), f(q));
            if fp * fq < 0.0 {
                if let Some(t) = bisect(f, p, q, 0.0) {
                    points.push(t);
                }
            }
        }
    }
    points.sort_by(f64::total_cmp);
    points.dedup();

    // Maximal runs of band segments.
    let mut raw: Vec<(f64, f64)> = Vec::new();
    let mut open: Option<f64> = None;
    for w in points.windows(2) {
        let in_band = cell.h(0.5 * (w[0] + w[1])).abs() <= 1.0;
        match (in_band, open) {
            (true, None) => open = Some(w[0]),
            (false, Some(lo)) => {
                raw.push((lo, w[0]));
                open = None;
            }
            _ => {}
        }
    }
    let t_end = points[points.len() - 1];
    if let Some(lo) = open {
        raw.push((lo, t_end));
    }

    // Close gaps too thin to resolve.
    let mut merged: Vec<(f64, f64)> = Vec::with_capacity(raw.len());
    for (lo, hi) in raw {
        match merged.last_mut() {
            Some(last) if lo - last.1 <= 1e-9 / ell => last.1 = hi,
            _ => merged.push((lo, hi)),
        }
    }

    let k_index = |t: f64| ell * t.max(0.0) / PI;
    let mut bands = Vec::new();
    let mut edges: Vec<(usize, f64, f64)> = Vec::new();
    let mut next = 0usize;
    for &(lo, hi) in &merged {
        let unbounded = hi >= t_end;
        if unbounded && lo >= (m_max as f64 + 1.0) * PI / ell {
            continue;
        }
        let x = if unbounded {
            k_index(lo)
        } else {
            0.5 * (k_index(lo) + k_index(hi))
        };
        let m = classify(x).max(next);
        if m > m_max {
            break;
        }
        next = m + 1;
        edges.push((m, lo, hi));
        let mut band = BandInterval {
            m,
            e_lo: energy(lo),
            e_hi: if unbounded { f64::INFINITY } else { energy(hi) },
            samples: Vec::new(),
        };
        band.samples = dispersion(spec, &band, opts.dispersion_samples);
        bands.push(band);
    }

    let mut gaps = Vec::new();
    let mut next = 0usize;
    for w in edges.windows(2) {
        let (lo, hi) = (w[0].2, w[1].1);
        let m = classify(0.5 * (k_index(lo) + k_index(hi))).max(next);
        next = m + 1;
        gaps.push(GapInterval {
            m,
            e_lo: energy(lo),
            e_hi: energy(hi),
        });
    }
    Ok((bands, gaps))
}

/// `(E, θ)` at `n` points spread uniformly in `t` across `band`, with
/// `cos θ = RHS(E)/|w|` and `θ ∈ [0, π]`. An unbounded band is sampled up to
/// `((m + 1)π/ℓ)²`.
pub fn dispersion(spec: &LatticeSpec, band: &BandInterval, n: usize) -> Vec<(f64, f64)> {
    let cell = Cell {
        spec,
        bound: band_condition_lhs_bound(spec),
    };
    let lo = to_t(band.e_lo);
    let hi = if band.e_hi.is_finite() {
        to_t(band.e_hi)
    } else {
        lo.max((band.m as f64 + 1.0) * PI / spec.ell)
    };
    (0..n)
        .map(|j| {
            let t = if n == 1 {
                0.5 * (lo + hi)
            } else {
                lo + (hi - lo) * j as f64 / (n - 1) as f64
            };
            let h = cell.h(t).clamp(-1.0, 1.0);
            (energy(t), math::acos(h))
        })
        .collect()
}
