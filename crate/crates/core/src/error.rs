use thiserror::Error;

/// Errors raised by the algebra, analysis and refinement routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("bad index: {0}")]
    BadIndex(String),
    #[error("symbol is not divisible by (1+z)^{order}")]
    NonDivisible { order: usize },
    #[error("the zero polynomial has no isolatable roots")]
    ZeroPolynomial,
    #[error("too few points: need at least {needed}, got {got}")]
    TooFewPoints { needed: usize, got: usize },
    #[error("tension parameter must be numeric for refinement")]
    NonNumericAlpha,
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("unsupported format: {0}")]
    UnsupportedFormat(String),
}

pub type Result<T> = std::result::Result<T, Error>;
