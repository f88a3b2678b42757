use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("resultant of zero polynomial")]
    ZeroResultant,
    #[error("not an automorphism: matrix is singular")]
    NotAutomorphism,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("field mismatch: Q(zeta_{0}) vs Q(zeta_{1})")]
    FieldMismatch(u32, u32),
    #[error("polynomial {0} is not irreducible over the working field")]
    Reducible(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("{0}")]
    Hypothesis(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
