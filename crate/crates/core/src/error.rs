use thiserror::Error;

/// Errors raised by the polynomial substrate, the detectors and the generators.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected} variables, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("exponent overflow")]
    ExponentOverflow,

    #[error("operation is undefined on the zero polynomial")]
    ZeroPolynomial,

    #[error("polynomial system is empty")]
    EmptySystem,

    #[error("{line}:{column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("{line}:{column}: unknown variable `{name}`")]
    UnknownVariable {
        line: usize,
        column: usize,
        name: String,
    },

    #[error("{line}:{column}: zero denominator")]
    ZeroDenominator { line: usize, column: usize },

    #[error("weight {} is {value}; weights must be strictly positive", index + 1)]
    NonPositiveWeight { index: usize, value: String },

    #[error("target index {index} out of range for polynomial {} with {len} terms", poly + 1)]
    TargetOutOfRange {
        poly: usize,
        index: usize,
        len: usize,
    },

    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),

    #[error("enumeration cap exceeded: {needed} candidates requested, cap is {cap}")]
    CapExceeded { needed: u128, cap: u64 },

    #[error("polynomial {} is not homogeneous of degree {degree}", index + 1)]
    NotHomogeneous { index: usize, degree: u32 },

    #[error("invalid set-packing instance: {0}")]
    InvalidInstance(String),

    #[error("monomial does not match the set-packing encoding: {0}")]
    EncodingShape(String),

    #[error("{0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
