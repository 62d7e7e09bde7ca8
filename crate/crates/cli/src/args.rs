use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "spiralbox", version, about = "Spiral plane curves, their Bessel spectra and polyene absorption fits")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output file. Standard output when omitted.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,

    #[arg(long, short, global = true, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Svg,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Sample curves with curvature k(s) = 1/(σ s^p).
    Curve(CurveArgs),
    /// Zeros j_{ω,n} and energies of the spiral box.
    Spectrum(SpectrumArgs),
    /// Normalised eigenfunctions on [0, L].
    Wavefunction(WavefunctionArgs),
    /// Fit σ to the measured wavelength of each molecule.
    Fit(FitArgs),
    /// Compare Bessel eigenvalues with the finite-difference solver.
    Oracle(OracleArgs),
    /// 1D hydrogen density next to the 3D radial density.
    Hydrogen(HydrogenArgs),
    /// Calculated vs measured wavelengths at fixed σ.
    Report(ReportArgs),
}

/// Exactly one way of giving the Bessel order.
#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct OrderArgs {
    /// Curvature parameter σ.
    #[arg(long)]
    pub sigma: Option<f64>,
    /// σ² (the form used for the four reference polyenes).
    #[arg(long)]
    pub sigma_squared: Option<f64>,
    /// Bessel order ω directly.
    #[arg(long)]
    pub omega: Option<f64>,
}

#[derive(Debug, Args)]
pub struct CurveArgs {
    /// One or more σ values (comma separated or repeated).
    #[arg(long, value_delimiter = ',', required_unless_present = "table_sigmas")]
    pub sigma: Vec<f64>,
    /// Use the four reference polyene σ values.
    #[arg(long, conflicts_with = "sigma")]
    pub table_sigmas: bool,
    /// Curvature exponent: 1 polyene curve, 0.5 hydrogen curve.
    #[arg(long, default_value_t = 1.0)]
    pub p: f64,
    #[arg(long, default_value_t = 0.1)]
    pub s_min: f64,
    #[arg(long, default_value_t = 1.0)]
    pub s_max: f64,
    #[arg(long, default_value_t = 5000)]
    pub samples: usize,
}

#[derive(Debug, Args)]
pub struct SpectrumArgs {
    #[command(flatten)]
    pub order: OrderArgs,
    /// Box length in nm.
    #[arg(long, default_value_t = 1.0)]
    pub length_nm: f64,
    /// Particle mass in electron masses.
    #[arg(long, default_value_t = 1.0)]
    pub mass: f64,
    #[arg(long, default_value_t = 5)]
    pub levels: usize,
}

#[derive(Debug, Args)]
pub struct WavefunctionArgs {
    #[command(flatten)]
    pub order: OrderArgs,
    #[arg(long, default_value_t = 1.0)]
    pub length_nm: f64,
    #[arg(long, default_value_t = 1.0)]
    pub mass: f64,
    /// Highest level written; levels 1..=N become columns.
    #[arg(long, default_value_t = 3)]
    pub levels: usize,
    #[arg(long, default_value_t = 401)]
    pub samples: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OracleMode {
    /// Order-ω inverse-square potential (ω² − 1/4)/s².
    Effective,
    /// Bare geometric potential −1/(4σ² s²).
    Literal,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    #[command(flatten)]
    pub order: OrderArgs,
    /// Interval length of the reduced problem −ψ″ + c/s² ψ = λψ.
    #[arg(long, default_value_t = 1.0)]
    pub length: f64,
    #[arg(long, default_value_t = 3)]
    pub levels: usize,
    /// Interior nodes of the coarse grid; the fine grid has twice as many.
    #[arg(long, default_value_t = 10_000)]
    pub grid: usize,
    #[arg(long, value_enum, default_value_t = OracleMode::Effective)]
    pub mode: OracleMode,
}

#[derive(Debug, Args)]
pub struct HydrogenArgs {
    /// Principal quantum number N.
    #[arg(long = "n", default_value_t = 1)]
    pub n: usize,
    #[arg(long, default_value_t = 400)]
    pub samples: usize,
    /// Right end of the s grid in bohr; defaults to 5N² + 10.
    #[arg(long)]
    pub s_max: Option<f64>,
}

#[derive(Debug, Args)]
pub struct MoleculeInput {
    /// Molecule JSON file. The four built-in reference chains when omitted.
    #[arg(long, short)]
    pub input: Option<PathBuf>,
    /// Electron mass in mₑ for the spiral-box model.
    #[arg(long, default_value_t = 1.0)]
    pub mass: f64,
    /// Add the particle-in-a-box effective mass column.
    #[arg(long)]
    pub effective_mass: bool,
    /// Also write the calculated vs measured bar chart here.
    #[arg(long)]
    pub chart: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct FitArgs {
    #[command(flatten)]
    pub molecules: MoleculeInput,
    /// Wavelength tolerance in nm.
    #[arg(long, default_value_t = 1e-6)]
    pub tol: f64,
}

#[derive(Debug, Args)]
pub struct ReportArgs {
    #[command(flatten)]
    pub molecules: MoleculeInput,
    /// σ per molecule, in file order.
    #[arg(long, value_delimiter = ',', conflicts_with_all = ["sigma_squared", "table_sigmas"])]
    pub sigma: Vec<f64>,
    /// σ² per molecule, in file order.
    #[arg(long, value_delimiter = ',', conflicts_with = "table_sigmas")]
    pub sigma_squared: Vec<f64>,
    /// Use the four reference σ values.
    #[arg(long)]
    pub table_sigmas: bool,
}
