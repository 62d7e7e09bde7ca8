//! Quantum particles confined to spiral plane curves.
//!
//! A curve with curvature `k(s)` induces the potential `−ħ²k²/8m` on a
//! particle bound to it. For power-law curvature `k = 1/(σ s^p)` the curves
//! are spirals; `p = 1/2` gives a 1D Coulomb problem and `p = 1` an
//! inverse-square well whose Dirichlet spectrum is given by zeros of Bessel
//! functions. This crate builds those curves, their spectra, a
//! finite-difference cross-check, and the polyene absorption fits built on
//! top of them.

// `!(x > 0.0)` is used on purpose: it also rejects NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]
// Coefficients and reference values are quoted at their published precision.
#![allow(clippy::excessive_precision)]

pub mod error;
pub mod fdsolver;
pub mod geometry;
pub mod output;
pub mod polyene;
pub mod quantum;
pub mod specfun;

pub use error::{Error, Result};
