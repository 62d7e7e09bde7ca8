//! Dirichlet spectrum of the polyene-curve box.
//!
//! On [0, L] the regular eigenfunctions are √s·J_ω(j_{ω,n} s/L) with
//! energies E_n = ħ² j²_{ω,n}/(2mL²).

use crate::error::{domain, Error, Result};
use crate::quantum::levels::EnergyLevels;
use crate::quantum::potential::omega_from_sigma;
use crate::specfun::{bessel_j, bessel_j_order_below, bessel_j_zeros, BesselOrder};

#[derive(Debug, Clone, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct SpiralBoxSpectrum {
    /// Curvature parameter, absent when the spectrum was built from ω directly.
    pub sigma: Option<f64>,
    pub omega: f64,
    /// Box length in bohr.
    pub box_length: f64,
    /// Mass in mₑ.
    pub mass: f64,
    /// j_{ω,n} for n = 1..=levels.
    pub zeros: Vec<f64>,
    /// E_n in hartree.
    pub energies: Vec<f64>,
}

impl SpiralBoxSpectrum {
    /// Spectrum for a given Bessel order.
    pub fn from_omega(omega: f64, box_length: f64, mass: f64, n_levels: usize) -> Result<Self> {
        BesselOrder::new(omega)?;
        if !(box_length > 0.0) || !(mass > 0.0) || !box_length.is_finite() || !mass.is_finite() {
            return Err(domain("spiral_box_spectrum", format!("box length and mass must be positive, got L = {box_length}, m = {mass}")));
        }
        let zeros = bessel_j_zeros(omega, n_levels)?;
        let scale = 1.0 / (2.0 * mass * box_length * box_length);
        let energies = zeros.iter().map(|j| j * j * scale).collect();
        Ok(Self {
            sigma: None,
            omega,
            box_length,
            mass,
            zeros,
            energies,
        })
    }

    pub fn levels(&self) -> usize {
        self.zeros.len()
    }

    fn zero(&self, n: usize) -> Result<f64> {
        if n == 0 || n > self.zeros.len() {
            return Err(Error::IndexOutOfRange {
                index: n,
                available: self.zeros.len(),
            });
        }
        Ok(self.zeros[n - 1])
    }

    /// c₁ = √2 / (L √(−J_{ω−1}(j) J_{ω+1}(j))) with j = j_{ω,n}.
    pub fn normalization(&self, n: usize) -> Result<f64> {
        let j = self.zero(n)?;
        let below = bessel_j_order_below(self.omega, j)?;
        let above = bessel_j(self.omega + 1.0, j)?;
        Ok(std::f64::consts::SQRT_2 / (self.box_length * (-below * above).sqrt()))
    }

    /// ψ_n(s) = c₁ √s J_ω(j_{ω,n} s / L) on [0, L].
    pub fn wavefunction(&self, n: usize, s: f64) -> Result<f64> {
        let c1 = self.normalization(n)?;
        self.wavefunction_with(n, c1, s)
    }

    /// ψ_n evaluated at many points with c₁ computed once.
    pub fn wavefunction_values(&self, n: usize, s_values: &[f64]) -> Result<Vec<f64>> {
        let c1 = self.normalization(n)?;
        s_values.iter().map(|&s| self.wavefunction_with(n, c1, s)).collect()
    }

    fn wavefunction_with(&self, n: usize, c1: f64, s: f64) -> Result<f64> {
        let l = self.box_length;
        if !(0.0..=l).contains(&s) {
            return Err(domain("spiral_box_wavefunction", format!("s = {s} outside [0, {l}]")));
        }
        let j = self.zero(n)?;
        Ok(c1 * s.sqrt() * bessel_j(self.omega, j * s / l)?)
    }
}

impl EnergyLevels for SpiralBoxSpectrum {
    fn energy(&self, n: usize) -> Result<f64> {
        if n == 0 || n > self.energies.len() {
            return Err(Error::IndexOutOfRange {
                index: n,
                available: self.energies.len(),
            });
        }
        Ok(self.energies[n - 1])
    }
}

/// Spectrum of the polyene-curve box with ω = omega_from_sigma(σ).
pub fn spiral_box_spectrum(sigma: f64, box_length: f64, mass: f64, n_levels: usize) -> Result<SpiralBoxSpectrum> {
    let omega = omega_from_sigma(sigma)?;
    let mut spectrum = SpiralBoxSpectrum::from_omega(omega, box_length, mass, n_levels)?;
    spectrum.sigma = Some(sigma);
    Ok(spectrum)
}

pub fn spiral_box_wavefunction(spectrum: &SpiralBoxSpectrum, n: usize, s: f64) -> Result<f64> {
    spectrum.wavefunction(n, s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quantum::levels::{pib_open_energy, transition_wavelength, ParticleInBox};
    use crate::specfun::{integrate, QuadratureSpec};
    use std::f64::consts::PI;

    #[test]
    fn first_level_of_deca() {
        let sp = spiral_box_spectrum(0.004f64.sqrt(), 1.0, 1.0, 3).unwrap();
        assert!((sp.omega - 7.889866919).abs() < 1e-9);
        let j = crate::specfun::bessel_j_zero(sp.omega, 1).unwrap();
        assert!((sp.energies[0] - 0.5 * j * j).abs() < 1e-12);
        assert_eq!(sp.sigma, Some(0.004f64.sqrt()));
    }

    #[test]
    fn large_sigma_is_open_box() {
        let (l, m) = (7.0, 0.8);
        let sp = spiral_box_spectrum(1e6, l, m, 5).unwrap();
        for n in 1..=5 {
            let pib = pib_open_energy(n, l, m).unwrap();
            assert!(((sp.energies[n - 1] - pib) / pib).abs() < 1e-6);
        }
        let half = SpiralBoxSpectrum::from_omega(0.5, l, m, 6).unwrap();
        let pib = ParticleInBox::open(l, m);
        for n in 1..=5 {
            let a = transition_wavelength(&half, n).unwrap();
            let b = transition_wavelength(&pib, n).unwrap();
            assert!(((a - b) / b).abs() < 1e-12);
        }
    }

    #[test]
    fn half_order_wavefunction_is_sine() {
        let l = 2.5;
        let sp = SpiralBoxSpectrum::from_omega(0.5, l, 1.0, 4).unwrap();
        for n in 1..=4 {
            for i in 0..=20 {
                let s = l * i as f64 / 20.0;
                let want = (2.0 / l).sqrt() * (n as f64 * PI * s / l).sin();
                assert!((sp.wavefunction(n, s).unwrap() - want).abs() < 1e-10);
            }
        }
    }

    #[test]
    fn normalised_with_vanishing_ends() {
        let sp = spiral_box_spectrum(0.004f64.sqrt(), 3.0, 1.0, 4).unwrap();
        let spec = QuadratureSpec::default();
        for n in 1..=4 {
            assert!(sp.wavefunction(n, 0.0).unwrap().abs() < 1e-12);
            assert!(sp.wavefunction(n, 3.0).unwrap().abs() < 1e-9);
            let norm = integrate(|s| sp.wavefunction(n, s).unwrap().powi(2), 0.0, 3.0, &spec).unwrap();
            assert!((norm - 1.0).abs() < 1e-8, "n = {n}: {norm}");
        }
    }

    #[test]
    fn energies_increase() {
        let sp = SpiralBoxSpectrum::from_omega(13.3537, 1.0, 1.0, 10).unwrap();
        assert!(sp.energies.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn index_and_domain_errors() {
        let sp = SpiralBoxSpectrum::from_omega(1.0, 1.0, 1.0, 2).unwrap();
        assert!(matches!(sp.wavefunction(3, 0.5), Err(Error::IndexOutOfRange { .. })));
        assert!(sp.wavefunction(0, 0.5).is_err());
        assert!(sp.wavefunction(1, 1.5).is_err());
        assert!(sp.wavefunction(1, -0.1).is_err());
        assert!(SpiralBoxSpectrum::from_omega(1.0, 0.0, 1.0, 2).is_err());
        assert!(spiral_box_spectrum(-1.0, 1.0, 1.0, 2).is_err());
        assert!(sp.energy(3).is_err());
    }

    #[test]
    fn zero_levels_is_empty() {
        let sp = spiral_box_spectrum(0.5, 1.0, 1.0, 0).unwrap();
        assert!(sp.zeros.is_empty() && sp.energies.is_empty());
    }
}
