use thiserror::Error;

/// Errors raised across the library. Each variant maps to one failure class
/// of the command-line contract (see [`Error::exit_code`]).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("non-homogeneous polynomial: terms of degree {first} and {second}")]
    NonHomogeneous { first: u32, second: u32 },

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("degenerate projection: {0}")]
    DegenerateProjection(String),

    #[error("inexact division at t-order {order}")]
    InexactDivision { order: usize },

    #[error("truncation exhausted at order {order}: {context}")]
    TruncationExhausted { order: usize, context: String },

    #[error("dependent input: {0}")]
    DependentInput(String),

    #[error("degenerate derivation: {0}")]
    DegenerateDerivation(String),

    #[error("invalid factorization: {0}")]
    InvalidFactorization(String),

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("infinite ramification: {0}")]
    InfiniteRamification(String),

    #[error(
        "no type found for factor {factor} up to order {max_order}: the generic fiber may be \
         non-reduced, or the input order is insufficient (raise --order)"
    )]
    NoType { factor: String, max_order: usize },

    #[error("construction degeneracy: {0}")]
    Construction(String),

    #[error("exhausted {attempts} attempts: {context}")]
    Exhausted { attempts: usize, context: String },
}

impl Error {
    /// Process exit code: 1 parse, 2 hypothesis/validation, 4 inconclusive truncation.
    /// Oracle mismatches (3) are verdicts, not errors.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Syntax { .. } | Error::NonHomogeneous { .. } | Error::Invalid(_) => 1,
            Error::NoType { .. } | Error::TruncationExhausted { .. } => 4,
            _ => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
