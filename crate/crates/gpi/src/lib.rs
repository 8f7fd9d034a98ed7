//! Generalized point interactions on the line.
//!
//! The one-centre interaction at `x = 0` is a four-parameter family of
//! self-adjoint extensions of `-d²/dx²` restricted to functions vanishing
//! near the origin. This crate provides
//!
//! * the parametrizations of the boundary conditions and the exact maps
//!   between them ([`params`], [`scheme`]),
//! * the resolvent kernel, point spectrum and on-shell S-matrix ([`spectral`]),
//! * the geometric phase picked up by bound states along a loop in
//!   coupling space ([`berry`]),
//! * the band structure of the periodic array ([`lattice`]).
//!
//! Units follow `ħ = 2m = 1`, so the energy is `z = k²`.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

mod error;
mod math;

pub mod berry;
pub mod lattice;
pub mod numeric;
pub mod params;
pub mod scheme;
pub mod spectral;

pub use error::{GpiError, Result};
pub use num_complex::Complex64;
pub use params::{
    CarreauParams, ChernoffHughesParams, GreekParams, HalflineParams, InverseParams, SebaParams,
    TransferParams,
};
pub use scheme::{CouplingScheme, HalflineBc, SeparatedHalflineBC, Symmetries};
