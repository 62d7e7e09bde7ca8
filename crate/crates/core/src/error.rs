use thiserror::Error;

/// Errors raised by the numerical routines in this crate.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("domain error in {func}: {detail}")]
    Domain { func: &'static str, detail: String },

    #[error("quadrature did not converge after {subdivisions} subdivisions (estimate {estimate:e}, error {error:e})")]
    QuadratureNotConverged {
        subdivisions: usize,
        estimate: f64,
        error: f64,
    },

    #[error("zero search for J_{nu} failed: {detail}")]
    ZeroSearch { nu: f64, detail: String },

    #[error("non-finite value {value} encountered at s = {s}")]
    NonFinite { s: f64, value: f64 },

    #[error("level index {index} out of range (1..={available})")]
    IndexOutOfRange { index: usize, available: usize },

    #[error("degenerate levels: energy gap {gap:e} is not positive")]
    DegenerateLevels { gap: f64 },

    #[error("target wavelength {target} nm not bracketed; attainable range on scan grid is [{min}, {max}] nm")]
    NoBracket { target: f64, min: f64, max: f64 },

    #[error("invalid molecule record: {0}")]
    InvalidMolecule(String),

    #[error("missing experimental wavelength for {0}")]
    MissingWavelength(String),

    #[error("length mismatch: {0} molecules but {1} sigma values")]
    LengthMismatch(usize, usize),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(func: &'static str, detail: impl Into<String>) -> Error {
    Error::Domain {
        func,
        detail: detail.into(),
    }
}
