//! Crate-wide error type.

use std::fmt;

/// Errors produced by the estimation and analysis modules.
#[derive(Debug)]
pub enum Error {
    /// A matrix failed the orthogonality / determinant checks of a rotation.
    NotARotation { residual: f64 },
    /// An input contained NaN or infinite entries.
    NonFinite(&'static str),
    /// A configuration failed validation.
    InvalidConfig(String),
    /// The Riccati covariance lost positive definiteness.
    CovarianceNotPositiveDefinite { t: f64, detail: String },
    /// The reduced algebraic Riccati design did not yield a Hurwitz closed loop.
    NonStabilizingGain { max_re_eig: f64 },
    /// An operation that relies on the block-Kronecker output structure was
    /// given rows that break it.
    KronFormRequired(&'static str),
    /// ODE-integrated and factored transition matrices disagree beyond tolerance.
    TransitionMismatch { residual: f64 },
    /// Doubling the quadrature resolution moved the result by more than the
    /// accepted relative change.
    QuadratureNotConverged { rel_change: f64 },
    /// An analysis window does not fit inside the available run.
    WindowOutOfRange { t0: f64, delta: f64, t_max: f64 },
    /// A required measurement was absent from the bundle.
    MissingInput(&'static str),
    /// A measurement bundle does not match the sensor configuration.
    InconsistentBundle(String),
    /// File I/O failure.
    Io(std::io::Error),
    /// A CSV or scenario file could not be parsed.
    Parse(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotARotation { residual } => {
                write!(f, "matrix is not a rotation (residual {residual:.3e})")
            }
            Error::NonFinite(what) => write!(f, "non-finite entries in {what}"),
            Error::InvalidConfig(msg) => write!(f, "invalid configuration: {msg}"),
            Error::CovarianceNotPositiveDefinite { t, detail } => {
                write!(
                    f,
                    "covariance lost positive definiteness at t = {t:.6} s ({detail}); \
                     consider a smaller dt or a less aggressive Q"
                )
            }
            Error::NonStabilizingGain { max_re_eig } => {
                write!(
                    f,
                    "constant-gain design is not stabilizing (max Re eig = {max_re_eig:.3e})"
                )
            }
            Error::KronFormRequired(what) => {
                write!(f, "{what} requires the block-Kronecker output form")
            }
            Error::TransitionMismatch { residual } => {
                write!(
                    f,
                    "transition-matrix routes disagree (residual {residual:.3e}); \
                     integrator misconfiguration"
                )
            }
            Error::QuadratureNotConverged { rel_change } => {
                write!(
                    f,
                    "quadrature not converged (doubling changed result by {rel_change:.3e})"
                )
            }
            Error::WindowOutOfRange { t0, delta, t_max } => {
                write!(
                    f,
                    "window [{t0}, {}] outside run of length {t_max}",
                    t0 + delta
                )
            }
            Error::MissingInput(what) => write!(f, "missing input: {what}"),
            Error::InconsistentBundle(msg) => write!(f, "inconsistent bundle: {msg}"),
            Error::Io(e) => write!(f, "i/o error: {e}"),
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
        }
    }
}

impl std::error::Error for Error {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        match self {
            Error::Io(e) => Some(e),
            _ => None,
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e)
    }
}

pub type Result<T> = std::result::Result<T, Error>;
