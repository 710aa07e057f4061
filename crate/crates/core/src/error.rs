use thiserror::Error;

/// Errors raised anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown variable `{name}` at position {pos}")]
    UnknownVariable { name: String, pos: usize },
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("{q} is not a power of the characteristic {p}")]
    NotPPower { q: u64, p: u64 },
    #[error("polynomials belong to different rings")]
    RingMismatch,
    #[error("vectors live in different ambient free modules")]
    AmbientMismatch,
    #[error("inhomogeneous input: {0}")]
    Inhomogeneous(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("resource budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("quotient does not have finite length")]
    InfiniteLength,
    #[error("first submodule is not contained in the second")]
    NotContained,
    #[error("ring has Krull dimension {0}, dimension 2 is required")]
    WrongDimension(usize),
    #[error("ideal is not primary to the irrelevant ideal")]
    NotPrimary,
    #[error("the zero ideal is not allowed here")]
    ZeroIdeal,
    #[error("exponent overflow: degree {0} exceeds the supported range")]
    ExponentOverflow(u64),
}

pub type Result<T> = std::result::Result<T, Error>;
