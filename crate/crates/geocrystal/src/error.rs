use thiserror::Error;

/// Errors raised by the exact kernels.
///
/// Identity checks never produce these on positive inputs; they surface only
/// when a caller feeds in zeros, malformed shapes or the wrong semifield.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("value is not invertible")]
    NonInvertible,
    #[error("operation `{0}` needs subtraction, which this semifield lacks")]
    Capability(&'static str),
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("minor {0} vanishes")]
    VanishingMinor(String),
    #[error("toggle T at ({a},{b}) is not defined")]
    ForbiddenToggle { a: usize, b: usize },
    #[error("exponent matrix is not dominant")]
    NotDominant,
    #[error("tableau is not semistandard: {0}")]
    NotSemistandard(String),
    #[error("entry {0} is negative; expected a nonnegative integer")]
    Negative(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
