use std::path::Path;

use spiralbox::fdsolver::{discretize, eigenvalues_lowest, inverse_square, richardson_grids};
use spiralbox::geometry::{linspace, sample_power_law};
use spiralbox::output::{fmt_num, fmt_opt, svg_bar_chart, svg_curve_gallery, svg_line_plot, CsvTable};
use spiralbox::polyene::{
    fit_all, fit_effective_mass, load_molecules, reference_polyenes, report, Molecule, REFERENCE_SIGMA_SQUARED,
};
use spiralbox::quantum::{
    effective_inverse_square_coefficient, hydrogen_radial_3d, literal_inverse_square_coefficient, omega_from_sigma,
    HydrogenState1D, SpiralBoxSpectrum, UnitSystem,
};
use spiralbox::Error;

use crate::args::*;

/// Process outcome other than success, with its exit code.
#[derive(Debug)]
pub enum Failure {
    Invalid(String),
    Write(String),
    Fit(String),
}

impl Failure {
    pub fn code(&self) -> i32 {
        match self {
            Failure::Invalid(_) => 2,
            Failure::Write(_) => 3,
            Failure::Fit(_) => 4,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            Failure::Invalid(m) | Failure::Write(m) | Failure::Fit(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NoBracket { .. } => Failure::Fit(e.to_string()),
            other => Failure::Invalid(other.to_string()),
        }
    }
}

type Outcome = Result<(), Failure>;

pub fn run(cli: Cli) -> Outcome {
    let out = cli.output.as_deref();
    match cli.command {
        Command::Curve(a) => curve(&a, cli.format, out),
        Command::Spectrum(a) => spectrum(&a, cli.format, out),
        Command::Wavefunction(a) => wavefunction(&a, cli.format, out),
        Command::Fit(a) => fit(&a, cli.format, out),
        Command::Oracle(a) => oracle(&a, cli.format, out),
        Command::Hydrogen(a) => hydrogen(&a, cli.format, out),
        Command::Report(a) => report_cmd(&a, cli.format, out),
    }
}

fn write_text(path: Option<&Path>, text: &str) -> Outcome {
    use std::io::Write;
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| Failure::Write(format!("cannot write {}: {e}", p.display()))),
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| Failure::Write(format!("cannot write to standard output: {e}"))),
    }
}

/// Writes a table as CSV or JSON; SVG requests go through `svg`.
fn emit(table: &CsvTable, format: Format, path: Option<&Path>, svg: impl FnOnce() -> String) -> Outcome {
    let text = match format {
        Format::Csv => table.to_csv(),
        Format::Json => serde_json::to_string_pretty(&table.to_json()).expect("JSON values serialise") + "\n",
        Format::Svg => svg(),
    };
    write_text(path, &text)
}

fn invalid(msg: impl Into<String>) -> Failure {
    Failure::Invalid(msg.into())
}

impl OrderArgs {
    /// (σ if given, ω)
    fn resolve(&self) -> Result<(Option<f64>, f64), Failure> {
        let sigma = match (self.sigma, self.sigma_squared) {
            (Some(s), _) => Some(s),
            (_, Some(s2)) if s2 > 0.0 => Some(s2.sqrt()),
            (_, Some(s2)) => return Err(invalid(format!("--sigma-squared must be positive, got {s2}"))),
            _ => None,
        };
        match (sigma, self.omega) {
            (Some(s), _) => Ok((Some(s), omega_from_sigma(s)?)),
            (None, Some(w)) => Ok((None, w)),
            (None, None) => Err(invalid("give one of --sigma, --sigma-squared, --omega")),
        }
    }
}

fn curve(a: &CurveArgs, format: Format, out: Option<&Path>) -> Outcome {
    let sigmas: Vec<f64> = if a.table_sigmas {
        REFERENCE_SIGMA_SQUARED.iter().map(|s2| s2.sqrt()).collect()
    } else {
        a.sigma.clone()
    };
    let mut table = CsvTable::new(["sigma", "p", "s", "x", "y", "radius", "curvature"]);
    let mut gallery = Vec::new();
    for &sigma in &sigmas {
        let samples = sample_power_law(sigma, a.p, a.s_min, a.s_max, a.samples)?;
        for (&s, &pt) in samples.s_values.iter().zip(&samples.points) {
            let radius = samples.center.map(|c| (pt - c).norm());
            let k = 1.0 / (sigma * s.powf(a.p));
            table.push(vec![fmt_num(sigma), fmt_num(a.p), fmt_num(s), fmt_num(pt.x), fmt_num(pt.y), fmt_opt(radius), fmt_num(k)]);
        }
        gallery.push((format!("sigma = {}", fmt_num(sigma)), samples.points));
    }
    emit(&table, format, out, || {
        svg_curve_gallery(&format!("k(s) = 1/(sigma s^{}), s in [{}, {}]", fmt_num(a.p), fmt_num(a.s_min), fmt_num(a.s_max)), &gallery)
    })
}

fn spectrum_from(order: &OrderArgs, length_nm: f64, mass: f64, levels: usize) -> Result<SpiralBoxSpectrum, Failure> {
    let (sigma, omega) = order.resolve()?;
    if !(length_nm > 0.0) {
        return Err(invalid(format!("--length-nm must be positive, got {length_nm}")));
    }
    let length = UnitSystem::atomic().nm_to_bohr(length_nm);
    let mut spectrum = SpiralBoxSpectrum::from_omega(omega, length, mass, levels)?;
    spectrum.sigma = sigma;
    Ok(spectrum)
}

fn spectrum(a: &SpectrumArgs, format: Format, out: Option<&Path>) -> Outcome {
    let spec = spectrum_from(&a.order, a.length_nm, a.mass, a.levels)?;
    let units = UnitSystem::atomic();
    let mut table = CsvTable::new(["n", "omega", "j", "energy_hartree", "energy_ev"]);
    for (i, (&j, &e)) in spec.zeros.iter().zip(&spec.energies).enumerate() {
        table.push(vec![(i + 1).to_string(), fmt_num(spec.omega), fmt_num(j), fmt_num(e), fmt_num(units.hartree_to_ev(e))]);
    }
    emit(&table, format, out, || {
        let n: Vec<f64> = (1..=spec.levels()).map(|i| i as f64).collect();
        let ev = spec.energies.iter().map(|&e| units.hartree_to_ev(e)).collect();
        svg_line_plot(&format!("spiral box levels, omega = {}", fmt_num(spec.omega)), "n", &n, &[("E_n (eV)".into(), ev)])
    })
}

fn wavefunction(a: &WavefunctionArgs, format: Format, out: Option<&Path>) -> Outcome {
    if a.samples < 2 {
        return Err(invalid("--samples must be at least 2"));
    }
    let spec = spectrum_from(&a.order, a.length_nm, a.mass, a.levels)?;
    let s = linspace(0.0, spec.box_length, a.samples);
    let mut header = vec!["s_bohr".to_string()];
    let mut columns = Vec::new();
    for n in 1..=a.levels {
        header.push(format!("psi_{n}"));
        columns.push(spec.wavefunction_values(n, &s)?);
    }
    let mut table = CsvTable::new(header);
    for (i, &si) in s.iter().enumerate() {
        let mut row = vec![fmt_num(si)];
        row.extend(columns.iter().map(|c| fmt_num(c[i])));
        table.push(row);
    }
    emit(&table, format, out, || {
        let series = columns.iter().enumerate().map(|(i, c)| (format!("psi_{}", i + 1), c.clone())).collect::<Vec<_>>();
        svg_line_plot(&format!("eigenfunctions, omega = {}", fmt_num(spec.omega)), "s (bohr)", &s, &series)
    })
}

fn oracle(a: &OracleArgs, format: Format, out: Option<&Path>) -> Outcome {
    let (sigma, omega) = a.order.resolve()?;
    if !(a.length > 0.0) {
        return Err(invalid(format!("--length must be positive, got {}", a.length)));
    }
    let analytic: Vec<f64> = spiralbox::specfun::bessel_j_zeros(omega, a.levels)?
        .iter()
        .map(|j| (j / a.length).powi(2))
        .collect();
    match a.mode {
        OracleMode::Effective => {
            let grids = richardson_grids(inverse_square(effective_inverse_square_coefficient(omega)), a.length, a.levels, a.grid)?;
            let mut table = CsvTable::new(["n", "analytic", "fd_coarse", "fd_fine", "fd_richardson", "relative_error"]);
            for (n, &exact) in analytic.iter().enumerate() {
                let rel = (grids.extrapolated[n] - exact).abs() / exact;
                table.push_numbers(&[(n + 1) as f64, exact, grids.coarse[n], grids.fine[n], grids.extrapolated[n], rel]);
            }
            emit(&table, format, out, || {
                let n: Vec<f64> = (1..=a.levels).map(|i| i as f64).collect();
                svg_line_plot(
                    &format!("analytic vs finite difference, omega = {}", fmt_num(omega)),
                    "n",
                    &n,
                    &[("(j/L)^2".into(), analytic.clone()), ("Richardson".into(), grids.extrapolated.clone())],
                )
            })
        }
        OracleMode::Literal => {
            let sigma = sigma.ok_or_else(|| invalid("literal mode needs --sigma or --sigma-squared"))?;
            let c = literal_inverse_square_coefficient(sigma);
            let mut table = CsvTable::new(["n_interior", "h", "ground_literal", "ground_effective_analytic"]);
            let (mut hs, mut ground) = (Vec::new(), Vec::new());
            for div in [8, 4, 2, 1] {
                let n = (a.grid / div).max(spiralbox::fdsolver::MIN_INTERIOR);
                let op = discretize(inverse_square(c), a.length, n)?;
                let e0 = eigenvalues_lowest(&op, 1)?[0];
                table.push(vec![n.to_string(), fmt_num(op.grid_step), fmt_num(e0), fmt_opt(analytic.first().copied())]);
                hs.push(op.grid_step);
                ground.push(e0);
            }
            emit(&table, format, out, || {
                svg_line_plot(
                    &format!("literal potential -1/(4 sigma^2 s^2), sigma = {}", fmt_num(sigma)),
                    "h",
                    &hs,
                    &[("ground eigenvalue".into(), ground.clone())],
                )
            })
        }
    }
}

fn hydrogen(a: &HydrogenArgs, format: Format, out: Option<&Path>) -> Outcome {
    if a.samples < 2 {
        return Err(invalid("--samples must be at least 2"));
    }
    let state = HydrogenState1D::new(a.n, 1.0)?;
    let n = a.n as f64;
    let s_max = a.s_max.unwrap_or(5.0 * n * n + 10.0);
    if !(s_max > 0.0) {
        return Err(invalid(format!("--s-max must be positive, got {s_max}")));
    }
    let step = s_max / a.samples as f64;
    let mut table = CsvTable::new(["s", "psi_1d", "density_1d", "r2_radial_sq"]);
    let (mut s_col, mut d1, mut d3) = (Vec::new(), Vec::new(), Vec::new());
    for i in 1..=a.samples {
        let s = step * i as f64;
        let psi = state.value(s)?;
        let r = hydrogen_radial_3d(a.n, 0, s)?;
        let radial = s * s * r * r;
        table.push_numbers(&[s, psi, psi * psi, radial]);
        s_col.push(s);
        d1.push(psi * psi);
        d3.push(radial);
    }
    emit(&table, format, out, || {
        svg_line_plot(
            &format!("hydrogen N = {}", a.n),
            "s (bohr)",
            &s_col,
            &[("|psi_1D|^2".into(), d1.clone()), ("r^2 R_N0^2".into(), d3.clone())],
        )
    })
}

fn read_molecules(input: &MoleculeInput) -> Result<Vec<Molecule>, Failure> {
    if !(input.mass > 0.0) {
        return Err(invalid(format!("--mass must be positive, got {}", input.mass)));
    }
    match &input.input {
        Some(p) => Ok(load_molecules(p)?),
        None => Ok(reference_polyenes()),
    }
}

fn write_chart(path: Option<&Path>, names: &[String], calc: Vec<Option<f64>>, exp: Vec<Option<f64>>) -> Outcome {
    match path {
        Some(p) => write_text(Some(p), &chart(names, calc, exp)),
        None => Ok(()),
    }
}

fn chart(names: &[String], calc: Vec<Option<f64>>, exp: Vec<Option<f64>>) -> String {
    svg_bar_chart("absorption wavelength (nm)", names, &[("calculated".into(), calc), ("experimental".into(), exp)])
}

fn fit(a: &FitArgs, format: Format, out: Option<&Path>) -> Outcome {
    let mols = read_molecules(&a.molecules)?;
    if !(a.tol > 0.0) {
        return Err(invalid(format!("--tol must be positive, got {}", a.tol)));
    }
    let mut header = vec!["name", "sigma", "omega", "lambda_calc_nm", "lambda_exp_nm", "percent_error", "iterations", "converged"];
    if a.molecules.effective_mass {
        header.push("effective_mass");
    }
    let mut table = CsvTable::new(header);
    let mut problems = Vec::new();
    let (mut names, mut calc, mut exp) = (Vec::new(), Vec::new(), Vec::new());
    for (mol, result) in mols.iter().zip(fit_all(&mols, a.molecules.mass, a.tol)) {
        let fit = match result {
            Ok(f) => f,
            Err(Error::MissingWavelength(name)) => {
                eprintln!("warning: {name} has no lambda_exp_nm, skipped");
                continue;
            }
            Err(e @ Error::NoBracket { .. }) => {
                eprintln!("error: {}: {e}", mol.name);
                problems.push(format!("{}: {e}", mol.name));
                continue;
            }
            Err(e) => return Err(e.into()),
        };
        if !fit.converged {
            eprintln!("error: {}: fit did not reach the tolerance", mol.name);
            problems.push(format!("{}: not converged", mol.name));
        }
        let mut row = vec![
            mol.name.clone(),
            fmt_num(fit.sigma),
            fmt_num(fit.omega),
            fmt_num(fit.lambda_calc),
            fmt_num(fit.lambda_exp),
            fmt_num(fit.percent_error),
            fit.iterations.to_string(),
            fit.converged.to_string(),
        ];
        if a.molecules.effective_mass {
            row.push(fmt_num(fit_effective_mass(mol)?));
        }
        table.push(row);
        names.push(mol.name.clone());
        calc.push(Some(fit.lambda_calc));
        exp.push(Some(fit.lambda_exp));
    }
    write_chart(a.molecules.chart.as_deref(), &names, calc.clone(), exp.clone())?;
    emit(&table, format, out, || chart(&names, calc, exp))?;
    if problems.is_empty() {
        Ok(())
    } else {
        Err(Failure::Fit(problems.join("; ")))
    }
}

fn report_cmd(a: &ReportArgs, format: Format, out: Option<&Path>) -> Outcome {
    let mols = read_molecules(&a.molecules)?;
    let sigmas: Vec<f64> = if a.table_sigmas {
        REFERENCE_SIGMA_SQUARED.iter().map(|s2| s2.sqrt()).collect()
    } else if !a.sigma_squared.is_empty() {
        if let Some(bad) = a.sigma_squared.iter().find(|s| !(**s > 0.0)) {
            return Err(invalid(format!("--sigma-squared values must be positive, got {bad}")));
        }
        a.sigma_squared.iter().map(|s2| s2.sqrt()).collect()
    } else {
        a.sigma.clone()
    };
    let rows = report(&mols, &sigmas, a.molecules.mass)?;
    let mut header = vec!["name", "sigma", "omega", "lambda_calc_nm", "lambda_exp_nm", "percent_error"];
    if a.molecules.effective_mass {
        header.push("effective_mass");
    }
    let mut table = CsvTable::new(header);
    for r in &rows {
        let mut row = vec![
            r.name.clone(),
            fmt_num(r.sigma),
            fmt_num(r.omega),
            fmt_num(r.lambda_calc_nm),
            fmt_opt(r.lambda_exp_nm),
            fmt_opt(r.percent_error),
        ];
        if a.molecules.effective_mass {
            row.push(fmt_opt(r.effective_mass));
        }
        table.push(row);
    }
    let names: Vec<String> = rows.iter().map(|r| r.name.clone()).collect();
    let calc: Vec<Option<f64>> = rows.iter().map(|r| Some(r.lambda_calc_nm)).collect();
    let exp: Vec<Option<f64>> = rows.iter().map(|r| r.lambda_exp_nm).collect();
    write_chart(a.molecules.chart.as_deref(), &names, calc.clone(), exp.clone())?;
    emit(&table, format, out, || chart(&names, calc, exp))
}
