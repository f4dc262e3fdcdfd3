use thiserror::Error;

/// Crate-wide error type. Every fallible contract surfaces one of these
/// variants; none of them is ever produced by a silent fallback.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("ring mismatch: {0} vs {1}")]
    RingMismatch(String, String),

    #[error("matrix is singular")]
    SingularMatrix,

    #[error("matrix is not square")]
    NonSquare,

    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    #[error("expected a homogeneous cubic in 4 variables: {0}")]
    NotACubic(String),

    #[error("polar subspace undefined: cubic is a cone or uses at most 3 variables")]
    ConeOrDegenerate,

    #[error("ideal is not zero-dimensional: quotient is infinite-dimensional")]
    PositiveDimensional,

    #[error("no separating linear form found after {retries} retries")]
    SeparationFailure { retries: u32 },

    #[error("cubic is not rational-pentahedral: {0}")]
    NotPentahedralRational(String),

    #[error("only {found} of {expected} intersection points are rational")]
    IncompleteRationalPoints { found: usize, expected: usize },

    #[error("invariant point is identically zero")]
    AllZero,

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
