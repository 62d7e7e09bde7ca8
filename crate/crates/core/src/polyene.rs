//! Linear polyenes as π electrons in a spiral box.
//!
//! A molecule with `n_pi` π electrons fills levels 1..=n_pi/2, so its
//! lowest optical transition is n → n+1 with n = n_pi/2. The spiral-box
//! model turns a curvature parameter σ into a wavelength; [`fit_sigma`]
//! inverts that against a measured absorption, and [`fit_effective_mass`]
//! does the same for the plain particle-in-a-box with a renormalised mass.

use std::path::Path;

use crate::error::{Error, Result};
use crate::geometry::logspace;
use crate::quantum::{omega_from_sigma, spiral_box_spectrum, transition_wavelength, ParticleInBox, UnitSystem};

/// C–C bond length used by [`box_length_from_bonds`], in nm.
pub const CONJUGATED_BOND_NM: f64 = 0.139;

/// Box length heuristic: (bonds along the conjugated chain + 1) × 0.139 nm.
/// An artifact convention for when no measured chain length is available.
pub fn box_length_from_bonds(bonds: usize) -> f64 {
    (bonds + 1) as f64 * CONJUGATED_BOND_NM
}

#[derive(Debug, Clone, PartialEq, serde::Serialize, serde::Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Molecule {
    pub name: String,
    pub n_pi: u32,
    pub box_length_nm: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda_exp_nm: Option<f64>,
    #[serde(default)]
    pub source: String,
}

impl Molecule {
    pub fn new(name: impl Into<String>, n_pi: u32, box_length_nm: f64, lambda_exp_nm: Option<f64>, source: impl Into<String>) -> Result<Self> {
        let mol = Self {
            name: name.into(),
            n_pi,
            box_length_nm,
            lambda_exp_nm,
            source: source.into(),
        };
        mol.validate()?;
        Ok(mol)
    }

    pub fn validate(&self) -> Result<()> {
        if self.n_pi == 0 || !self.n_pi.is_multiple_of(2) {
            return Err(Error::InvalidMolecule(format!("{}: n_pi must be a positive even number, got {}", self.name, self.n_pi)));
        }
        if !(self.box_length_nm > 0.0) || !self.box_length_nm.is_finite() {
            return Err(Error::InvalidMolecule(format!("{}: box_length_nm must be positive, got {}", self.name, self.box_length_nm)));
        }
        if let Some(l) = self.lambda_exp_nm {
            if !(l > 0.0) || !l.is_finite() {
                return Err(Error::InvalidMolecule(format!("{}: lambda_exp_nm must be positive, got {l}", self.name)));
            }
        }
        Ok(())
    }

    pub fn box_length_bohr(&self) -> f64 {
        UnitSystem::atomic().nm_to_bohr(self.box_length_nm)
    }

    fn require_lambda(&self) -> Result<f64> {
        self.lambda_exp_nm.ok_or_else(|| Error::MissingWavelength(self.name.clone()))
    }
}

/// Parses a JSON array of molecule records and validates each one.
pub fn parse_molecules(json: &str) -> Result<Vec<Molecule>> {
    let mols: Vec<Molecule> = serde_json::from_str(json).map_err(|e| Error::InvalidMolecule(e.to_string()))?;
    for m in &mols {
        m.validate()?;
    }
    Ok(mols)
}

pub fn load_molecules(path: &Path) -> Result<Vec<Molecule>> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::InvalidMolecule(format!("{}: {e}", path.display())))?;
    parse_molecules(&text)
}

pub fn molecules_to_json(mols: &[Molecule]) -> String {
    serde_json::to_string_pretty(mols).expect("molecule records always serialise")
}

/// HOMO index n = n_pi / 2.
pub fn homo_index(mol: &Molecule) -> usize {
    (mol.n_pi / 2) as usize
}

/// HOMO → LUMO wavelength (nm) of the spiral box with curvature σ.
pub fn lambda_model(sigma: f64, mol: &Molecule, mass: f64) -> Result<f64> {
    let n = homo_index(mol);
    let spectrum = spiral_box_spectrum(sigma, mol.box_length_bohr(), mass, n + 1)?;
    transition_wavelength(&spectrum, n)
}

#[derive(Debug, Clone, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct FitResult {
    pub sigma: f64,
    pub omega: f64,
    pub lambda_calc: f64,
    pub lambda_exp: f64,
    pub percent_error: f64,
    pub iterations: usize,
    pub converged: bool,
}

pub fn percent_error(calc: f64, exp: f64) -> f64 {
    100.0 * (calc - exp).abs() / exp
}

/// Search range and resolution for [`fit_sigma`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SigmaScan {
    pub min: f64,
    pub max: f64,
    pub points: usize,
    pub max_bisections: usize,
}

impl Default for SigmaScan {
    fn default() -> Self {
        Self {
            min: 1e-4,
            max: 1e3,
            points: 400,
            max_bisections: 200,
        }
    }
}

/// Fits σ so that the model wavelength matches `lambda_exp_nm` within `tol`
/// nm, using the default scan.
pub fn fit_sigma(mol: &Molecule, mass: f64, tol: f64) -> Result<FitResult> {
    fit_sigma_with(mol, mass, tol, &SigmaScan::default())
}

/// Scans log σ upward for the first sign change of λ_model − λ_exp, then
/// bisects in log σ. The first bracket is the σ < 1/√2 branch, where ω is
/// a one-to-one function of σ.
pub fn fit_sigma_with(mol: &Molecule, mass: f64, tol: f64, scan: &SigmaScan) -> Result<FitResult> {
    let target = mol.require_lambda()?;
    if !(tol > 0.0) {
        return Err(crate::error::domain("fit_sigma", format!("tolerance must be positive, got {tol}")));
    }
    let grid = logspace(scan.min, scan.max, scan.points.max(2));
    let residual = |sigma: f64| -> Result<f64> { Ok(lambda_model(sigma, mol, mass)? - target) };

    let mut prev: Option<(f64, f64)> = None;
    let mut bracket = None;
    for &sigma in &grid {
        let r = residual(sigma)?;
        if r.abs() <= tol {
            return finish(sigma, r + target, target, 0, true);
        }
        if let Some((ps, pr)) = prev {
            if pr * r < 0.0 {
                bracket = Some((ps, pr, sigma));
                break;
            }
        }
        prev = Some((sigma, r));
    }

    let Some((mut lo, mut r_lo, mut hi)) = bracket else {
        let values = grid.iter().map(|&s| lambda_model(s, mol, mass)).collect::<Result<Vec<_>>>()?;
        let min = values.iter().cloned().fold(f64::INFINITY, f64::min);
        let max = values.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        return Err(Error::NoBracket { target, min, max });
    };

    let mut best = (lo, r_lo);
    for it in 1..=scan.max_bisections {
        let mid = (0.5 * (lo.ln() + hi.ln())).exp();
        let r = residual(mid)?;
        if r.abs() < best.1.abs() {
            best = (mid, r);
        }
        if r.abs() <= tol {
            return finish(mid, r + target, target, it, true);
        }
        if mid <= lo || mid >= hi {
            return finish(best.0, best.1 + target, target, it, false);
        }
        if r * r_lo < 0.0 {
            hi = mid;
        } else {
            lo = mid;
            r_lo = r;
        }
    }
    finish(best.0, best.1 + target, target, scan.max_bisections, false)
}

fn finish(sigma: f64, lambda_calc: f64, lambda_exp: f64, iterations: usize, converged: bool) -> Result<FitResult> {
    Ok(FitResult {
        sigma,
        omega: omega_from_sigma(sigma)?,
        lambda_calc,
        lambda_exp,
        percent_error: percent_error(lambda_calc, lambda_exp),
        iterations,
        converged,
    })
}

/// Fits every molecule on its own thread; results keep input order.
pub fn fit_all(mols: &[Molecule], mass: f64, tol: f64) -> Vec<Result<FitResult>> {
    std::thread::scope(|scope| {
        let handles: Vec<_> = mols.iter().map(|m| scope.spawn(move || fit_sigma(m, mass, tol))).collect();
        handles.into_iter().map(|h| h.join().expect("fit thread panicked")).collect()
    })
}

/// Mass (mₑ) that makes the open particle-in-a-box reproduce λ_exp:
/// m = h²(2n+1)λ/(8L²hc).
pub fn fit_effective_mass(mol: &Molecule) -> Result<f64> {
    let lambda = mol.require_lambda()?;
    let n = homo_index(mol) as f64;
    let l = mol.box_length_bohr();
    let gap = UnitSystem::atomic().gap_from_wavelength(lambda);
    Ok(std::f64::consts::PI.powi(2) * (2.0 * n + 1.0) / (2.0 * l * l * gap))
}

/// PIB wavelength (nm) of a molecule for a given mass.
pub fn pib_wavelength(mol: &Molecule, mass: f64) -> Result<f64> {
    transition_wavelength(&ParticleInBox::open(mol.box_length_bohr(), mass), homo_index(mol))
}

#[derive(Debug, Clone, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct ReportRow {
    pub name: String,
    pub sigma: f64,
    pub omega: f64,
    pub lambda_calc_nm: f64,
    pub lambda_exp_nm: Option<f64>,
    pub percent_error: Option<f64>,
    pub effective_mass: Option<f64>,
}

/// Calculated vs experimental wavelengths for fixed σ per molecule.
pub fn report(mols: &[Molecule], sigmas: &[f64], mass: f64) -> Result<Vec<ReportRow>> {
    if mols.len() != sigmas.len() {
        return Err(Error::LengthMismatch(mols.len(), sigmas.len()));
    }
    mols.iter()
        .zip(sigmas)
        .map(|(mol, &sigma)| {
            let lambda_calc = lambda_model(sigma, mol, mass)?;
            Ok(ReportRow {
                name: mol.name.clone(),
                sigma,
                omega: omega_from_sigma(sigma)?,
                lambda_calc_nm: lambda_calc,
                lambda_exp_nm: mol.lambda_exp_nm,
                percent_error: mol.lambda_exp_nm.map(|e| percent_error(lambda_calc, e)),
                effective_mass: match mol.lambda_exp_nm {
                    Some(_) => Some(fit_effective_mass(mol)?),
                    None => None,
                },
            })
        })
        .collect()
}

/// The four chains of the reference set with their π-electron counts.
/// Box lengths come from [`box_length_from_bonds`]; no experimental
/// wavelengths are attached.
pub fn reference_polyenes() -> Vec<Molecule> {
    [
        ("deca-2,4,6,8-tetraene", 8u32),
        ("dodeca-2,4,6,8,10-pentaene", 10),
        ("tetradeca-2,4,6,8,10,12-hexaene", 12),
        ("hexadeca-2,4,6,8,10,12,14-heptaene", 14),
    ]
    .into_iter()
    .map(|(name, n_pi)| Molecule {
        name: name.to_string(),
        n_pi,
        // n_pi conjugated carbons joined by n_pi − 1 bonds
        box_length_nm: box_length_from_bonds(n_pi as usize - 1),
        lambda_exp_nm: None,
        source: "box length from bond-count heuristic; supply lambda_exp_nm from measured spectra".to_string(),
    })
    .collect()
}

/// σ² values fitted for the four reference chains.
pub const REFERENCE_SIGMA_SQUARED: [f64; 4] = [0.004, 0.0014, 0.0009, 0.00045];

#[cfg(test)]
mod tests {
    use super::*;

    fn deca() -> Molecule {
        reference_polyenes().remove(0)
    }

    #[test]
    fn homo_indices() {
        let ns: Vec<usize> = reference_polyenes().iter().map(homo_index).collect();
        assert_eq!(ns, vec![4, 5, 6, 7]);
        let ethylene = Molecule::new("ethylene", 2, 0.139, None, "").unwrap();
        assert_eq!(homo_index(&ethylene), 1);
    }

    #[test]
    fn molecule_validation() {
        assert!(Molecule::new("odd", 7, 1.0, None, "").is_err());
        assert!(Molecule::new("zero", 0, 1.0, None, "").is_err());
        assert!(Molecule::new("short", 8, 0.0, None, "").is_err());
        assert!(Molecule::new("neg", 8, 1.0, Some(-3.0), "").is_err());
    }

    #[test]
    fn parse_exact_fields() {
        let json = r#"[{"name": "a", "n_pi": 8, "box_length_nm": 1.1, "lambda_exp_nm": 300.0, "source": "x"},
                       {"name": "b", "n_pi": 10, "box_length_nm": 1.4, "source": "y"}]"#;
        let mols = parse_molecules(json).unwrap();
        assert_eq!(mols.len(), 2);
        assert_eq!(mols[1].lambda_exp_nm, None);
        assert!(parse_molecules(r#"[{"name": "a", "n_pi": 8, "box_length_nm": 1.1, "colour": 1}]"#).is_err());
        assert!(parse_molecules(r#"[{"name": "a", "n_pi": 9, "box_length_nm": 1.1}]"#).is_err());
        assert_eq!(parse_molecules(&molecules_to_json(&mols)).unwrap(), mols);
    }

    #[test]
    fn large_sigma_gives_pib_wavelength() {
        let mol = deca();
        let a = lambda_model(1e6, &mol, 1.0).unwrap();
        let b = pib_wavelength(&mol, 1.0).unwrap();
        assert!(((a - b) / b).abs() < 1e-6);
    }

    #[test]
    fn effective_mass_round_trip_and_linearity() {
        let mut mol = deca();
        mol.lambda_exp_nm = Some(303.0);
        let m = fit_effective_mass(&mol).unwrap();
        assert!(m > 0.0);
        let back = pib_wavelength(&mol, m).unwrap();
        assert!(((back - 303.0) / 303.0).abs() < 1e-10);
        mol.lambda_exp_nm = Some(606.0);
        assert!((fit_effective_mass(&mol).unwrap() / m - 2.0).abs() < 1e-12);
        mol.lambda_exp_nm = None;
        assert!(matches!(fit_effective_mass(&mol), Err(Error::MissingWavelength(_))));
    }

    #[test]
    fn loose_tolerance_converges_fast() {
        let mut mol = deca();
        mol.lambda_exp_nm = Some(lambda_model(0.004f64.sqrt(), &mol, 1.0).unwrap());
        let fit = fit_sigma(&mol, 1.0, 1e3).unwrap();
        assert!(fit.converged && fit.iterations <= 2);
    }

    #[test]
    fn unreachable_target_reports_range() {
        let mut mol = deca();
        mol.lambda_exp_nm = Some(1e9);
        let scan = SigmaScan {
            points: 40,
            ..SigmaScan::default()
        };
        match fit_sigma_with(&mol, 1.0, 1e-6, &scan) {
            Err(Error::NoBracket { min, max, .. }) => assert!(min > 0.0 && max < 1e9),
            other => panic!("expected NoBracket, got {other:?}"),
        }
    }

    #[test]
    fn fit_needs_wavelength_and_tolerance() {
        assert!(matches!(fit_sigma(&deca(), 1.0, 1e-6), Err(Error::MissingWavelength(_))));
        let mut mol = deca();
        mol.lambda_exp_nm = Some(300.0);
        assert!(fit_sigma(&mol, 1.0, 0.0).is_err());
    }

    #[test]
    fn percent_error_arithmetic() {
        assert!((percent_error(102.3, 100.0) - 2.3).abs() < 1e-12);
        assert!((percent_error(97.7, 100.0) - 2.3).abs() < 1e-12);
        assert_eq!(percent_error(5.0, 5.0), 0.0);
    }

    #[test]
    fn report_shapes() {
        assert!(report(&[], &[], 1.0).unwrap().is_empty());
        assert!(matches!(report(&[deca()], &[], 1.0), Err(Error::LengthMismatch(1, 0))));
        let rows = report(&[deca()], &[0.004f64.sqrt()], 1.0).unwrap();
        assert_eq!(rows[0].percent_error, None);
        assert!((rows[0].omega - 7.88987).abs() < 1e-5);
    }

    #[test]
    fn bond_heuristic() {
        assert!((box_length_from_bonds(7) - 1.112).abs() < 1e-12);
    }
}
