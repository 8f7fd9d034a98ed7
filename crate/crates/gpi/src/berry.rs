//! Geometric phase of bound states along the loop `c = |c| e^{iξ}`,
//! `ξ ∈ [0, 2π)`, at fixed `a = b`.
//!
//! On this family the two roots are `κ± = −a ∓ |c|` and the normalized
//! eigenfunction is `f(x) = √κ (Θ(x) e^{−κx} ± e^{−iξ} Θ(−x) e^{κx})`.

use alloc::vec::Vec;

use num_complex::Complex64;

use crate::error::{GpiError, Result};
use crate::math;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    /// `κ₊ = −a − |c|`, the deeper level.
    Plus,
    /// `κ₋ = −a + |c|`.
    Minus,
}

impl Branch {
    fn kappa(self, a: f64, c_mod: f64) -> f64 {
        match self {
            Branch::Plus => -a - c_mod,
            Branch::Minus => -a + c_mod,
        }
    }

    fn sign(self) -> f64 {
        match self {
            Branch::Plus => 1.0,
            Branch::Minus => -1.0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParameterLoop {
    pub a: f64,
    pub c_mod: f64,
    pub samples: usize,
    pub branch: Branch,
}

impl ParameterLoop {
    pub fn new(a: f64, c_mod: f64, samples: usize, branch: Branch) -> Result<Self> {
        if !a.is_finite() || !c_mod.is_finite() {
            return Err(GpiError::InvalidParameters("loop parameters must be finite"));
        }
        if !(c_mod > 0.0) {
            return Err(GpiError::InvalidParameters("|c| must be positive"));
        }
        if samples < 3 {
            return Err(GpiError::InvalidParameters("loop needs at least 3 samples"));
        }
        let kappa = branch.kappa(a, c_mod);
        if !(kappa > 0.0) {
            return Err(GpiError::NoBoundState { kappa });
        }
        Ok(Self {
            a,
            c_mod,
            samples,
            branch,
        })
    }

    pub fn kappa(&self) -> f64 {
        self.branch.kappa(self.a, self.c_mod)
    }

    pub fn eigenstate_at(&self, xi: f64) -> LoopState {
        let kappa = self.kappa();
        let mu = math::sqrt(kappa);
        LoopState {
            kappa,
            mu: Complex64::new(mu, 0.0),
            nu: Complex64::from_polar(self.branch.sign() * mu, -xi),
        }
    }

    /// `ξ_j = 2πj/N`, `j = 0..N`.
    pub fn states(&self) -> Vec<LoopState> {
        let n = self.samples;
        (0..n)
            .map(|j| self.eigenstate_at(math::TAU * j as f64 / n as f64))
            .collect()
    }
}

/// A bound state `μ Θ(x) e^{−κx} + ν Θ(−x) e^{κx}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LoopState {
    pub kappa: f64,
    pub mu: Complex64,
    pub nu: Complex64,
}

impl LoopState {
    /// The same state multiplied by `e^{iφ}`.
    pub fn with_phase(self, phi: f64) -> Self {
        let u = Complex64::from_polar(1.0, phi);
        Self {
            kappa: self.kappa,
            mu: self.mu * u,
            nu: self.nu * u,
        }
    }
}

/// Eigenstate of the `a = b`, `c = |c| e^{iξ}` coupling on the chosen branch.
pub fn eigenstate_at(a: f64, c_mod: f64, branch: Branch, xi: f64) -> Result<LoopState> {
    let kappa = branch.kappa(a, c_mod);
    if !(kappa > 0.0) {
        return Err(GpiError::NoBoundState { kappa });
    }
    Ok(ParameterLoop {
        a,
        c_mod,
        samples: 3,
        branch,
    }
    .eigenstate_at(xi))
}

/// `⟨f₁, f₂⟩` in closed form.
pub fn overlap(s1: &LoopState, s2: &LoopState) -> Complex64 {
    (s1.mu.conj() * s2.mu + s1.nu.conj() * s2.nu) / (s1.kappa + s2.kappa)
}

#[derive(Debug, Clone, PartialEq)]
pub struct PhaseResult {
    /// In `(−π, π]`.
    pub phase: f64,
    /// `⟨f_j, f_{j+1}⟩`, closing with `⟨f_{N−1}, f_0⟩`.
    pub per_step_overlaps: Vec<Complex64>,
}

const OVERLAP_TOL: f64 = 1e-12;

/// Folds an angle into `(−π, π]`, sending values within `1e-12` of `−π`
/// to `π`.
pub fn wrap_phase(x: f64) -> f64 {
    let mut p = math::wrap_tau(x + math::PI) - math::PI;
    if p <= -math::PI + 1e-12 {
        p = math::PI;
    }
    p
}

/// `−arg ∏ ⟨f_j, f_{j+1}⟩` around the closed list of states.
pub fn berry_phase_of_states(states: &[LoopState]) -> Result<PhaseResult> {
    let n = states.len();
    let mut per_step = Vec::with_capacity(n);
    let mut prod = Complex64::new(1.0, 0.0);
    for j in 0..n {
        let o = overlap(&states[j], &states[(j + 1) % n]);
        if o.norm() < OVERLAP_TOL {
            return Err(GpiError::DegenerateOverlap);
        }
        per_step.push(o);
        // Renormalize to keep the running product away from underflow.
        prod = prod * o / o.norm();
    }
    Ok(PhaseResult {
        phase: wrap_phase(-prod.arg()),
        per_step_overlaps: per_step,
    })
}

pub fn berry_phase_discrete(lp: &ParameterLoop) -> Result<PhaseResult> {
    berry_phase_of_states(&lp.states())
}

/// `Re Σ_j i (⟨f_j, f_{j+1}⟩ − 1)`, the first-order discretization of
/// `∮ i⟨f, ∂_ξ f⟩ dξ`. Unlike the product of overlaps it carries an
/// `O(N⁻²)` discretization error.
pub fn berry_phase_finite_difference(lp: &ParameterLoop) -> Result<f64> {
    let states = lp.states();
    let n = states.len();
    let mut sum = Complex64::new(0.0, 0.0);
    for j in 0..n {
        let o = overlap(&states[j], &states[(j + 1) % n]);
        if o.norm() < OVERLAP_TOL {
            return Err(GpiError::DegenerateOverlap);
        }
        sum += Complex64::new(0.0, 1.0) * (o - 1.0);
    }
    Ok(sum.re)
}

/// `i⟨f, ∂_ξ f⟩ = |ν|²/(2κ)`, which is `½` on the whole loop.
pub fn berry_connection_analytic(lp: &ParameterLoop, xi: f64) -> f64 {
    let s = lp.eigenstate_at(xi);
    s.nu.norm_sqr() / (2.0 * s.kappa)
}

/// Loop integral of the connection, folded into `(−π, π]`.
pub fn berry_phase_analytic(lp: &ParameterLoop) -> f64 {
    wrap_phase(math::TAU * berry_connection_analytic(lp, 0.0))
}
