use num_complex::Complex64;
use thiserror::Error;

/// Errors raised by the series, parameter and search routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("division by a series with zero constant term")]
    SingularDivision,

    #[error("logarithm/power needs constant term 1, got {0}")]
    BranchUndefined(Complex64),

    #[error("exponential needs constant term 0, got {0}")]
    NonZeroConstant(Complex64),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("{name} = {value} is outside the admissible range {range}")]
    OutOfRange {
        name: &'static str,
        value: f64,
        range: &'static str,
    },

    #[error("{0} is not defined for this family")]
    NotApplicable(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
