use thiserror::Error;

/// Errors raised by the library operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,

    #[error("L({p},{q}) is not a lens space: gcd({p},{q}) != 1")]
    NotCoprime { p: u64, q: u64 },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("modulus mismatch: expected a label mod {expected}, got one mod {found}")]
    ModulusMismatch { expected: u64, found: u64 },

    #[error("malformed V-sequence: {0}")]
    MalformedSequence(String),

    #[error("internal inconsistency: {0}")]
    Inconsistency(String),

    #[error(
        "cable ({p},{q}) of a knot with nu+ = {nu} is outside the range of the cabling formula; \
         nu+ of the cable is at least {lower_bound}"
    )]
    OutOfRegime {
        p: u64,
        q: u64,
        nu: u64,
        lower_bound: u64,
    },

    #[error("cable ({p},{q}) of a knot with nu+ = {nu} lies in the range of the lower bound, not the formula")]
    FormulaRegime { p: u64, q: u64, nu: u64 },

    #[error("parse error at offset {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("knot evaluation incomplete: {0}")]
    Incomplete(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
