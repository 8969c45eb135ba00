use num_bigint::BigUint;
use thiserror::Error;

/// Errors raised by the library. Domain errors describe an input outside an
/// operation's mathematical domain; [`Error::MaxStepsExceeded`] is the budget
/// guard for trajectories that do not reach 1 in time.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("expected a positive odd integer, got 0")]
    Zero,

    #[error("expected a positive odd integer, got even value {0}")]
    Even(BigUint),

    #[error("{0} is a multiple of 3 (a starter) and has no predecessors")]
    StarterHasNoPredecessors(BigUint),

    #[error("1 has no finite reverse chain; use the terminal generator instead")]
    ReverseFromOne,

    #[error("reverse chain from {start} did not reach a starter within {budget} steps")]
    ReverseBudgetExceeded { start: BigUint, budget: usize },

    #[error("1 is the tree root; its children are the terminal integers")]
    RootPredecessors,

    #[error("{0} is not congruent to 3 mod 4")]
    NotThreeModFour(BigUint),

    #[error("invalid parameter {name}: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    #[error("trajectory of {start} did not reach 1 within {max_steps} odd steps")]
    MaxStepsExceeded { start: BigUint, max_steps: u64 },

    #[error("unknown output format {0:?}")]
    UnknownFormat(String),

    #[error("I/O error: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn param(name: &'static str, reason: impl Into<String>) -> Self {
        Error::InvalidParameter {
            name,
            reason: reason.into(),
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
