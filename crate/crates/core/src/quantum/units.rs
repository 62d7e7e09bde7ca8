//! Hartree atomic units (ħ = mₑ = 1, lengths in bohr, energies in hartree)
//! with conversions at the input/output boundary.

/// 1 hartree in eV (CODATA 2018).
pub const HARTREE_EV: f64 = 27.211_386_245_988;
/// h·c in eV·nm (CODATA 2018).
pub const HC_EV_NM: f64 = 1_239.841_984;
/// 1 bohr in nm (CODATA 2018).
pub const BOHR_NM: f64 = 0.052_917_721_090_3;

#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct UnitSystem {
    pub hbar: f64,
    pub mass_electron: f64,
    pub hc_ev_nm: f64,
}

impl Default for UnitSystem {
    fn default() -> Self {
        Self::atomic()
    }
}

impl UnitSystem {
    pub const fn atomic() -> Self {
        Self {
            hbar: 1.0,
            mass_electron: 1.0,
            hc_ev_nm: HC_EV_NM,
        }
    }

    /// Planck's constant h = 2πħ.
    pub fn planck(&self) -> f64 {
        2.0 * std::f64::consts::PI * self.hbar
    }

    pub fn hartree_to_ev(&self, e: f64) -> f64 {
        e * HARTREE_EV
    }

    pub fn ev_to_hartree(&self, e: f64) -> f64 {
        e / HARTREE_EV
    }

    pub fn nm_to_bohr(&self, l: f64) -> f64 {
        l / BOHR_NM
    }

    pub fn bohr_to_nm(&self, l: f64) -> f64 {
        l * BOHR_NM
    }

    /// λ = hc/ΔE in nm for a gap given in hartree.
    pub fn wavelength_nm(&self, gap_hartree: f64) -> f64 {
        self.hc_ev_nm / self.hartree_to_ev(gap_hartree)
    }

    /// Energy gap in hartree matching a wavelength in nm.
    pub fn gap_from_wavelength(&self, lambda_nm: f64) -> f64 {
        self.ev_to_hartree(self.hc_ev_nm / lambda_nm)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_hartree_wavelength() {
        let u = UnitSystem::atomic();
        assert!((u.wavelength_nm(1.0) - 45.563).abs() < 1e-3);
        assert!((u.gap_from_wavelength(u.wavelength_nm(0.3)) - 0.3).abs() < 1e-15);
    }

    #[test]
    fn length_round_trip() {
        let u = UnitSystem::default();
        assert!((u.nm_to_bohr(1.0) - 18.897_261_246).abs() < 1e-8);
        assert!((u.bohr_to_nm(u.nm_to_bohr(1.3)) - 1.3).abs() < 1e-15);
    }
}
