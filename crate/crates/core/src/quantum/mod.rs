//! Closed-form quantum mechanics on curves.
//!
//! Everything here works in Hartree atomic units; see [`UnitSystem`] for
//! the boundary conversions.

mod hydrogen;
mod levels;
mod potential;
mod spectrum;
mod units;

pub use hydrogen::{hydrogen_radial_3d, hydrogen_radial_3d_scaled, hydrogen_wavefunction_1d, HydrogenState1D};
pub use levels::{pib_closed_energy, pib_open_energy, transition_wavelength, BoxTopology, EnergyLevels, ParticleInBox};
pub use potential::{effective_inverse_square_coefficient, geometry_induced_potential, literal_inverse_square_coefficient, omega_from_sigma};
pub use spectrum::{spiral_box_spectrum, spiral_box_wavefunction, SpiralBoxSpectrum};
pub use units::{UnitSystem, BOHR_NM, HARTREE_EV, HC_EV_NM};
