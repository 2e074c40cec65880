use thiserror::Error;

/// Errors raised by the calculus engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("weight {0:?} is not non-increasing")]
    NotDominant(Vec<i64>),

    #[error("weight must have at least one entry")]
    EmptyWeight,

    #[error("expected a partition (non-negative entries), got {0:?}")]
    NegativeEntry(Vec<i64>),

    #[error("invalid hook coordinates: {0}")]
    InvalidHook(String),

    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },

    #[error("operation requires an effective element (all coefficients >= 0)")]
    NotEffective,

    #[error("character is not a genuine character: peeling produced coefficient {coeff} at {weight:?}")]
    NotACharacter { weight: Vec<i64>, coeff: i64 },

    #[error("character is not symmetric under permutation of the variables")]
    NotSymmetric,

    #[error("invalid Grassmannian G({k},{d}): need 1 <= k <= d-1")]
    InvalidGrassmannian { k: usize, d: usize },

    #[error("invalid functor label {alpha:?} for d = {d}: need 0 <= a2 <= a1 <= d-2")]
    InvalidLabel { alpha: Vec<i64>, d: usize },

    #[error("d = {0} is below the minimum of {1}")]
    DimensionTooSmall(usize, usize),

    #[error("pair {alpha:?}, {beta:?} is not ordered (need alpha before beta)")]
    NotOrdered { alpha: Vec<i64>, beta: Vec<i64> },

    #[error("exterior power index {0} out of range 0..=4")]
    WedgeOutOfRange(usize),

    #[error("routes disagree: {0}")]
    RouteMismatch(String),

    #[error("cannot parse weight {0:?}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
