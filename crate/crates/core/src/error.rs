use thiserror::Error;

/// Errors raised by the arithmetic, series and combinatorics layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("exact division failed: divisor does not divide dividend")]
    InexactDivision,
    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },
    #[error("matrix dimensions do not match")]
    DimensionMismatch,
    #[error("assignment is missing variable `{0}`")]
    MissingVariable(String),
    #[error("constant term is not invertible")]
    NonInvertibleConstantTerm,
    #[error("inner series of a composition must have zero constant term")]
    NonzeroConstantTermInner,
    #[error("series must have valuation 1 with invertible linear coefficient")]
    BadValuation,
    #[error("constant term not allowed here: {0}")]
    BadConstantTerm(&'static str),
    #[error("insufficient precision: need order {needed}, have {available}")]
    InsufficientPrecision { needed: usize, available: usize },
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("arguments out of range: {0}")]
    BadRange(String),
    #[error("series is not tangent to the identity (must be t + O(t^2))")]
    NotTangentToIdentity,
    #[error("sequence too short: need {needed} terms, have {available}")]
    InsufficientSequence { needed: usize, available: usize },
    #[error("zero pivot in condensation at shift {shift}, size {size}")]
    ZeroPivot { shift: usize, size: usize },
    #[error("continued fraction expansion is singular at level {level}")]
    SingularExpansion { level: usize },
    #[error("series has zero constant term")]
    ZeroConstantTerm,
    #[error("continued fraction depth {depth} is below the requested {needed}")]
    InsufficientDepth { depth: usize, needed: usize },
    #[error("word cannot be factorized into Lukasiewicz words: {0}")]
    NotFactorizable(String),
    #[error("instance too large for exhaustive enumeration: {0}")]
    InstanceTooLarge(String),
    #[error("malformed rational `{0}`")]
    MalformedRational(String),
    #[error("empty coefficient list")]
    EmptyCoefficients,
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("internal verification failed: {0}")]
    VerificationFailed(String),
}

pub type Result<T> = std::result::Result<T, Error>;
