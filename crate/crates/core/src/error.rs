use thiserror::Error;

/// Errors raised by the series, realization-field and flow computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("valuation of zero")]
    ValuationOfZero,

    /// A leading-term search ran past the configured horizon without
    /// certifying either a nonzero term or exact zero.
    #[error("precision horizon {horizon} exhausted while {context}")]
    PrecisionHorizon { horizon: usize, context: String },

    #[error("element is not in the valuation ring (valuation {valuation})")]
    NotInValuationRing { valuation: i64 },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("level {level} out of range 1..={max}")]
    LevelOutOfRange { level: usize, max: usize },

    #[error("level allocation exhausted: need level {needed}, only {available} configured")]
    LevelsExhausted { needed: usize, available: usize },

    #[error("not a simple residue root: {0}")]
    NotSimpleRoot(String),

    #[error("not a 1-unit: {0}")]
    NotOneUnit(String),

    #[error("cannot classify: {0}")]
    Unclassifiable(String),

    #[error("determinant is not 1: {0}")]
    Determinant(String),

    #[error("not in V: {0}")]
    NotInV(String),
}

impl Error {
    pub fn horizon(horizon: usize, context: impl Into<String>) -> Self {
        Error::PrecisionHorizon { horizon, context: context.into() }
    }

    pub fn is_horizon(&self) -> bool {
        matches!(self, Error::PrecisionHorizon { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
