#![allow(dead_code)]

use gpi::{Complex64, CouplingScheme, GreekParams, HalflineParams};
use proptest::prelude::*;

pub fn complex(r: f64) -> impl Strategy<Value = Complex64> {
    (-r..r, -r..r).prop_map(|(re, im)| Complex64::new(re, im))
}

pub fn greek() -> impl Strategy<Value = GreekParams> {
    (-5.0..5.0, -5.0..5.0, complex(3.0)).prop_map(|(a, b, g)| GreekParams::new(a, b, g))
}

pub fn halfline() -> impl Strategy<Value = HalflineParams> {
    (-5.0..5.0, -5.0..5.0, complex(4.0)).prop_map(|(a, b, c)| HalflineParams::new(a, b, c))
}

/// Coupled schemes kept away from the separating set.
pub fn coupled() -> impl Strategy<Value = CouplingScheme> {
    greek()
        .prop_filter("separating", |g| g.coupling_weight().norm() > 1e-3)
        .prop_map(|g| CouplingScheme::from_greek(g).unwrap())
}

pub fn rel(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / (1.0 + b.norm())
}

pub fn re(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

pub fn greek_close(x: &GreekParams, y: &GreekParams, tol: f64) -> bool {
    rel(re(x.alpha), re(y.alpha)) <= tol && rel(re(x.beta), re(y.beta)) <= tol && rel(x.gamma, y.gamma) <= tol
}

pub fn halfline_close(x: &HalflineParams, y: &HalflineParams, tol: f64) -> bool {
    rel(re(x.a), re(y.a)) <= tol && rel(re(x.b), re(y.b)) <= tol && rel(x.c, y.c) <= tol
}
