use thiserror::Error;

/// Errors raised by the library.
///
/// Infeasibility of an optimization problem is not an error; it is reported
/// through [`crate::Status::Infeasible`].
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid parameter `{name}` = {value}: {reason}")]
    InvalidParam {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },

    #[error("power-splitting ratio {0} is outside [0, 1]")]
    RhoOutOfRange(f64),

    #[error("antenna coincides with the user at x = {0} (zero distance)")]
    DegenerateGeometry(f64),

    #[error("Lambert W0 argument {0} is outside [0, inf)")]
    LambertDomain(f64),

    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("invalid sweep: {0}")]
    InvalidSweep(String),

    #[error("config line {line}: {message}")]
    Config { line: usize, message: String },

    #[error("unknown config key `{0}`")]
    UnknownKey(String),

    #[error("unknown scheme `{0}` (expected proposed|bm0|bm1|bm2|bm3)")]
    UnknownScheme(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
