use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// A family or construction was given parameters outside its domain.
    #[error("invalid parameter: {0}")]
    Parameter(String),

    /// A construction would exceed the configured size guard.
    #[error("size guard: {what} needs an estimated {estimate} vertices+arcs, limit is {limit}")]
    SizeGuard {
        what: String,
        estimate: u128,
        limit: u128,
    },

    /// The homomorphism search ran out of nodes before reaching an answer.
    #[error("search budget of {budget} nodes exhausted{}", progress.as_ref().map(|p| format!(" ({p})")).unwrap_or_default())]
    Budget {
        budget: u64,
        progress: Option<String>,
    },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("invalid template: {0}")]
    Template(String),

    /// An input violated the precondition of an operation (e.g. a loop
    /// where a loop-free graph is required).
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// An exhaustive routine was asked to go beyond its enumeration cap.
    #[error("cap exceeded: {0}")]
    Cap(String),
}

impl Error {
    pub(crate) fn param(msg: impl Into<String>) -> Self {
        Error::Parameter(msg.into())
    }

    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    /// True for errors caused by a guard or budget rather than bad input.
    pub fn is_resource_limit(&self) -> bool {
        matches!(
            self,
            Error::SizeGuard { .. } | Error::Budget { .. } | Error::Cap(_)
        )
    }
}
