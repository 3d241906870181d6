use thiserror::Error;

/// Errors raised anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unsupported field order {0}")]
    UnsupportedField(u32),
    #[error("modulus {0:?} is not irreducible over GF({1})")]
    ReducibleModulus(Vec<u8>, u8),
    #[error("element {value} out of range for GF({q})")]
    ElementOutOfRange { value: u32, q: u32 },
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("GF({0}) is not a quadratic extension of a subfield")]
    NotQuadratic(u32),
    #[error("GF({sub}) is not a subfield of GF({big})")]
    NotSubfield { sub: u32, big: u32 },
    #[error("field mismatch: GF({0}) vs GF({1})")]
    FieldMismatch(u32, u32),
    #[error("layout mismatch: {0}")]
    LayoutMismatch(String),
    #[error("ambient mismatch: {0}")]
    AmbientMismatch(String),
    #[error("coordinate {index} out of range for length {length}")]
    CoordinateOutOfRange { index: usize, length: usize },
    #[error("gauge code must be nonzero")]
    ZeroGaugeCode,
    #[error("enumeration cap exceeded: {p}^{log_p} vectors required, cap is {cap}")]
    CapExceeded { p: u8, log_p: usize, cap: u128 },
    #[error("distance unknown: {0}")]
    DistanceUnknown(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("no admissible candidate: {0}")]
    NoCandidate(String),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn precondition<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Precondition(msg.into()))
}
