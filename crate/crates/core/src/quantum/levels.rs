//! Indexed energy levels and optical transitions between them.

use std::f64::consts::PI;

use crate::error::{domain, Error, Result};
use crate::quantum::units::UnitSystem;

/// Anything that can report E_n (hartree) for n = 1, 2, ….
pub trait EnergyLevels {
    fn energy(&self, n: usize) -> Result<f64>;
}

fn check_box(func: &'static str, n: usize, box_length: f64, mass: f64) -> Result<()> {
    if n == 0 {
        return Err(domain(func, "level index starts at 1"));
    }
    if !(box_length > 0.0) || !(mass > 0.0) || !box_length.is_finite() || !mass.is_finite() {
        return Err(domain(func, format!("box length and mass must be positive, got L = {box_length}, m = {mass}")));
    }
    Ok(())
}

/// E_n = h²n²/(8mL²) for a box with hard walls.
pub fn pib_open_energy(n: usize, box_length: f64, mass: f64) -> Result<f64> {
    check_box("pib_open_energy", n, box_length, mass)?;
    let h = UnitSystem::atomic().planck();
    let nf = n as f64;
    Ok(h * h * nf * nf / (8.0 * mass * box_length * box_length))
}

/// E_n = h²n²/(2mL²) on a closed curve of length L.
pub fn pib_closed_energy(n: usize, box_length: f64, mass: f64) -> Result<f64> {
    check_box("pib_closed_energy", n, box_length, mass)?;
    Ok(4.0 * pib_open_energy(n, box_length, mass)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum BoxTopology {
    Open,
    Closed,
}

/// Free particle of mass `mass` (mₑ) on a curve of length `length` (bohr).
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct ParticleInBox {
    pub length: f64,
    pub mass: f64,
    pub topology: BoxTopology,
}

impl ParticleInBox {
    pub fn open(length: f64, mass: f64) -> Self {
        Self {
            length,
            mass,
            topology: BoxTopology::Open,
        }
    }

    pub fn closed(length: f64, mass: f64) -> Self {
        Self {
            length,
            mass,
            topology: BoxTopology::Closed,
        }
    }

    /// ψ_n(s) = √(2/L) sin(nπs/L) for the open box.
    pub fn wavefunction(&self, n: usize, s: f64) -> f64 {
        (2.0 / self.length).sqrt() * (n as f64 * PI * s / self.length).sin()
    }
}

impl EnergyLevels for ParticleInBox {
    fn energy(&self, n: usize) -> Result<f64> {
        match self.topology {
            BoxTopology::Open => pib_open_energy(n, self.length, self.mass),
            BoxTopology::Closed => pib_closed_energy(n, self.length, self.mass),
        }
    }
}

/// λ = hc/(E_{n+1} − E_n) in nm for the HOMO → LUMO transition.
pub fn transition_wavelength<L: EnergyLevels + ?Sized>(levels: &L, n_homo: usize) -> Result<f64> {
    if n_homo == 0 {
        return Err(domain("transition_wavelength", "HOMO index starts at 1"));
    }
    let gap = levels.energy(n_homo + 1)? - levels.energy(n_homo)?;
    if !(gap > 0.0) {
        return Err(Error::DegenerateLevels { gap });
    }
    Ok(UnitSystem::atomic().wavelength_nm(gap))
}
