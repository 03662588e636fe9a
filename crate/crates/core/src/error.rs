use alloc::boxed::Box;
use alloc::string::String;

use thiserror::Error;

use crate::report::CheckReport;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("basis index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("invalid basis names: {0}")]
    InvalidBasis(String),

    #[error("malformed input: {0}")]
    Malformed(String),

    #[error("invalid rational {0:?}")]
    ParseScalar(String),

    /// A validating constructor or precondition check failed; the report
    /// carries the first witness.
    #[error("{0}")]
    CheckFailed(Box<CheckReport>),

    #[error("weight must be nonzero")]
    ZeroWeight,

    #[error("I singular: not factorizable")]
    NotFactorizable,

    #[error("bilinear form is degenerate")]
    DegenerateForm,

    #[error("matrix is singular")]
    Singular,

    #[error("unsupported size n = {0}")]
    UnsupportedSize(usize),

    #[error("finite-difference step {0:e} is invalid or too small")]
    StepTooSmall(f64),

    #[error("unknown catalog entry {0:?}")]
    UnknownEntry(String),
}

impl Error {
    pub(crate) fn failed(report: CheckReport) -> Self {
        Error::CheckFailed(Box::new(report))
    }
}

/// Turns a failing report into `Err(CheckFailed)`.
pub(crate) fn require(report: CheckReport) -> Result<CheckReport> {
    if report.passed {
        Ok(report)
    } else {
        Err(Error::failed(report))
    }
}
