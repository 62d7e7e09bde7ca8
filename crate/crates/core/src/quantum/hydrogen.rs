//! 1D hydrogen atom along the p = 1/2 curve and the 3D radial functions it
//! is compared with.
//!
//! The 1D state with principal number N uses the generalized Laguerre
//! polynomial of degree N − 1 and order 1; the 3D radial function R_{Nℓ}
//! uses degree N − ℓ − 1 and order 2ℓ + 1. With that indexing |ψ_1D(s)|²
//! equals s²R_{N0}(s)², and N = 1 is nodeless.

use crate::error::{domain, Result};
use crate::specfun::{integrate, laguerre, log_gamma, QuadratureSpec};

/// Truncation of the normalisation integral, in units of N·a₀.
const NORM_CUTOFF: f64 = 50.0;

#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct HydrogenState1D {
    pub n: usize,
    pub a0: f64,
    pub normalization: f64,
}

impl HydrogenState1D {
    /// State N with Bohr length `a0`, normalised on [0, 50·N·a₀].
    pub fn new(n: usize, a0: f64) -> Result<Self> {
        if n == 0 {
            return Err(domain("HydrogenState1D", "principal number starts at 1"));
        }
        if !(a0 > 0.0) || !a0.is_finite() {
            return Err(domain("HydrogenState1D", format!("a0 must be positive, got {a0}")));
        }
        let unnormalised = Self { n, a0, normalization: 1.0 };
        let upper = NORM_CUTOFF * n as f64 * a0;
        let norm = integrate(|s| unnormalised.shape(s).powi(2), 0.0, upper, &QuadratureSpec::default())?;
        Ok(Self {
            normalization: 1.0 / norm.sqrt(),
            ..unnormalised
        })
    }

    fn shape(&self, s: f64) -> f64 {
        let z = 2.0 * s / (self.n as f64 * self.a0);
        (-0.5 * z).exp() * z * laguerre(self.n - 1, 1.0, z)
    }

    pub fn value(&self, s: f64) -> Result<f64> {
        if !(s > 0.0) || !s.is_finite() {
            return Err(domain("hydrogen_wavefunction_1d", format!("s must be positive, got {s}")));
        }
        Ok(self.normalization * self.shape(s))
    }
}

pub fn hydrogen_wavefunction_1d(state: &HydrogenState1D, s: f64) -> Result<f64> {
    state.value(s)
}

/// R_{Nℓ}(r) in atomic units (a₀ = 1), normalised so ∫ r²R² dr = 1.
pub fn hydrogen_radial_3d(n: usize, ell: usize, r: f64) -> Result<f64> {
    hydrogen_radial_3d_scaled(n, ell, 1.0, r)
}

/// R_{Nℓ}(r) for Bohr length `a0`.
pub fn hydrogen_radial_3d_scaled(n: usize, ell: usize, a0: f64, r: f64) -> Result<f64> {
    if n == 0 || ell >= n {
        return Err(domain("hydrogen_radial_3d", format!("need 0 <= ell < N, got N = {n}, ell = {ell}")));
    }
    if !(a0 > 0.0) || !(r >= 0.0) || !r.is_finite() {
        return Err(domain("hydrogen_radial_3d", format!("need a0 > 0 and r >= 0, got a0 = {a0}, r = {r}")));
    }
    let nf = n as f64;
    let degree = n - ell - 1;
    // B² = (2/(N a₀))³ (N−ℓ−1)! / (2N (N+ℓ)!)
    let log_b2 = 3.0 * (2.0 / (nf * a0)).ln() + log_gamma(degree as f64 + 1.0)? - (2.0 * nf).ln() - log_gamma((n + ell) as f64 + 1.0)?;
    let z = 2.0 * r / (nf * a0);
    Ok((0.5 * log_b2).exp() * (-0.5 * z).exp() * z.powi(ell as i32) * laguerre(degree, (2 * ell + 1) as f64, z))
}
