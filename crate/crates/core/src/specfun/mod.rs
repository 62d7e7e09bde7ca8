//! Real-order special functions and quadrature.
//!
//! All functions are pure and allocation-light; they are safe to call from
//! any number of threads.

mod bessel;
mod gamma;
mod laguerre;
mod quadrature;

pub use bessel::{bessel_j, bessel_j_derivative, bessel_j_order_below, bessel_j_zero, bessel_j_zeros, BesselOrder};
pub use gamma::log_gamma;
pub use laguerre::laguerre;
pub use quadrature::{integrate, QuadratureSpec};
