use thiserror::Error;

/// Errors raised by the slope, path and invariant computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("0/0 is not a slope")]
    ZeroOverZero,

    #[error("undefined Farey sum: numerator and denominator both cancel")]
    UndefinedSum,

    #[error("cannot parse slope {0:?}")]
    Parse(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("degenerate arc: endpoints coincide at {0}")]
    DegenerateArc(String),

    #[error("bypass attachment needs two dividing curves, found {0}")]
    UnsupportedState(u64),

    #[error("dividing-curve intersection count must be even and at least 2, got {0}")]
    Parity(u64),

    #[error("linking matrix is singular")]
    Singular,

    #[error("vertex {0} cannot be written with negative numerator and positive denominator")]
    Convention(String),

    #[error("target {target} unreachable with denominator bound {bound}")]
    BoundTooSmall { target: String, bound: u64 },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
