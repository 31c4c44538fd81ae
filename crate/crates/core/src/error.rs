use thiserror::Error;

/// Errors raised by the algebra engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("input error: {0}")]
    Input(String),
    #[error("parse error at {line}:{column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("computation budget exceeded after {pairs} S-pairs (limit {limit})")]
    ComputationBudgetExceeded { pairs: u64, limit: u64 },
    #[error("extension is not finite over the base ring")]
    NotFinite,
    #[error("no monic relation of degree {0} exists")]
    NotIntegral(usize),
    #[error("denominator is a zero-divisor and no component list was supplied")]
    ReducibleAmbiguity,
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("function is not regulous on the ambient variety")]
    NotRegulousOnAmbient,
    #[error("element already lies in the current ring")]
    AlreadyInRing,
    #[error("fraction is not regulous")]
    NotRegulous,
    #[error("element is not in the radical of the given ideal")]
    NotInRadical,
    #[error("no power up to {0} lies in the ideal")]
    NotFoundWithinBound(u32),
    #[error("extension failed the subintegrality re-check")]
    NotSubintegral,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub fn is_budget(&self) -> bool {
        matches!(self, Error::ComputationBudgetExceeded { .. })
    }
}
