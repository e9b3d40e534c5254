use thiserror::Error;

use crate::domains::DomainTag;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,

    /// A quadratic surd with a nonzero irrational part was asked for its rational value.
    #[error("{0} is not rational")]
    NotRational(String),

    #[error("cannot parse {input:?} as {domain}")]
    Parse { domain: DomainTag, input: String },

    #[error("{what} needs at least {required} terms, got {actual}")]
    InsufficientLength {
        what: &'static str,
        required: usize,
        actual: usize,
    },

    #[error("empty sequence")]
    EmptySequence,

    #[error("series orders differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("inner series of a composition must have zero constant term")]
    NonzeroConstantTerm,

    #[error("lower parameter rising factorial vanishes at index {0}")]
    VanishingDenominator(usize),

    #[error("unknown sequence {name:?}; known sequences: {known}")]
    UnknownSequence { name: String, known: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}
