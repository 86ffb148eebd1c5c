use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
    #[error("label {0} lies outside the action domain")]
    OutsideDomain(u64),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("size bound exceeded: {0}")]
    SizeBound(String),
    #[error("zero has no discrete logarithm")]
    ZeroLog,
    #[error("{0} is not the size of a subfield")]
    BadSubfield(u64),
    #[error("({q}, {d}) does not satisfy the Dickson condition")]
    NotDickson { q: u64, d: u32 },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("verdict is NO; there is no witness group")]
    NoWitness,
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
