use crate::error::{domain, Result};

/// V = −ħ²k²/(8m), in hartree for k in 1/bohr and m in mₑ.
pub fn geometry_induced_potential(k_value: f64, mass: f64) -> Result<f64> {
    if !(mass > 0.0) || !mass.is_finite() {
        return Err(domain("geometry_induced_potential", format!("mass must be positive, got {mass}")));
    }
    Ok(-k_value * k_value / (8.0 * mass))
}

/// Bessel order ω = ½√|1 − 1/σ²| of the polyene-curve eigenfunctions.
///
/// The absolute value is kept as written: for σ < 1 this ω belongs to the
/// repulsive effective potential (ω² − ¼)/s², not to the attractive
/// −1/(4σ²s²) that the geometry induces.
pub fn omega_from_sigma(sigma: f64) -> Result<f64> {
    if !(sigma > 0.0) || sigma.is_nan() {
        return Err(domain("omega_from_sigma", format!("sigma must be positive, got {sigma}")));
    }
    if sigma.is_infinite() {
        return Ok(0.5);
    }
    Ok(0.5 * (1.0 - 1.0 / (sigma * sigma)).abs().sqrt())
}

/// Coefficient c of c/s² in −ψ″ + (c/s²)ψ = εψ whose regular solutions are
/// √s·J_ω(√ε s): c = ω² − ¼.
pub fn effective_inverse_square_coefficient(omega: f64) -> f64 {
    omega * omega - 0.25
}

/// Coefficient of the geometry-induced term for k = 1/(σs) moved to the
/// left-hand side: −ψ″ − ψ/(4σ²s²) = εψ, i.e. c = −1/(4σ²).
pub fn literal_inverse_square_coefficient(sigma: f64) -> f64 {
    -1.0 / (4.0 * sigma * sigma)
}
