use thiserror::Error;

/// Every failure the library can report.
///
/// Variant names double as stable identifiers on the command line, see [`Error::name`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arguments are not coprime: gcd({a}, {c}) = {gcd}")]
    NotCoprime { a: String, c: String, gcd: String },

    #[error("resource limit exceeded: {what} needs {requested}, budget is {budget}")]
    ResourceLimit {
        what: &'static str,
        requested: u64,
        budget: u64,
    },

    #[error("cocycle value {value} is not an integer")]
    IntegralityViolation { value: String },

    #[error("the identity double coset (c = 0) has no finite symbol")]
    InfinityCoset,

    #[error("operation {op} is not available for group {group}")]
    UnsupportedGroup { op: &'static str, group: String },

    #[error("sample stream is empty")]
    EmptyStream,

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("matrix does not have determinant 1: {0}")]
    NotUnimodular(String),

    #[error("invalid double coset: {0}")]
    InvalidCoset(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    pub fn name(&self) -> &'static str {
        match self {
            Error::NotCoprime { .. } => "NotCoprime",
            Error::ResourceLimit { .. } => "ResourceLimit",
            Error::IntegralityViolation { .. } => "IntegralityViolation",
            Error::InfinityCoset => "InfinityCoset",
            Error::UnsupportedGroup { .. } => "UnsupportedGroup",
            Error::EmptyStream => "EmptyStream",
            Error::NotPrime(_) => "NotPrime",
            Error::NotUnimodular(_) => "NotUnimodular",
            Error::InvalidCoset(_) => "InvalidCoset",
            Error::InvalidArgument(_) => "InvalidArgument",
        }
    }

    pub(crate) fn not_coprime(a: impl ToString, c: impl ToString, gcd: impl ToString) -> Self {
        Error::NotCoprime {
            a: a.to_string(),
            c: c.to_string(),
            gcd: gcd.to_string(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
