//! Numerical core for resonant inductive power transfer link design.
//!
//! Coil geometry is discretized into straight filament segments, inductances
//! are extracted with Neumann's double line integral, and the series-series
//! compensated two-resonator link is solved as a 2x2 phasor network.
//!
//! The crate is `no_std` and only needs `alloc`.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod charging;
pub mod circuit;
pub mod design;
mod error;
pub mod geometry;
pub mod losses;
pub mod magnetics;
pub mod math;
pub mod quadrature;
pub mod sweep;

pub use error::{Error, Result};

/// Vacuum permeability, H/m (pre-2019 exact value 4π×10⁻⁷).
pub const MU_0: f64 = 4.0e-7 * core::f64::consts::PI;

/// µ0/4π, H/m.
pub const MU0_OVER_4PI: f64 = 1.0e-7;
