// Real elementary functions for a `no_std` build.

pub(crate) use libm::{acos, asin, ceil, cos, cosh, exp, sin, sinh, sqrt};

pub(crate) const PI: f64 = core::f64::consts::PI;
pub(crate) const TAU: f64 = core::f64::consts::TAU;

/// `x mod 2π` folded into `[0, 2π)`.
pub(crate) fn wrap_tau(x: f64) -> f64 {
    let r = libm::fmod(x, TAU);
    if r < 0.0 {
        r + TAU
    } else {
        r
    }
}
