use thiserror::Error;

/// Errors shared across the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown element label `{0}`")]
    UnknownLabel(String),
    #[error("duplicate element label `{0}`")]
    DuplicateLabel(String),
    #[error("relation is not antisymmetric: {0} and {1} are mutually comparable")]
    NotAntisymmetric(String, String),
    #[error("open-set family is not a topology: {0}")]
    NotATopology(String),
    #[error("subset references point outside the space: `{0}`")]
    PointOutsideSpace(String),
    #[error("map is not total: no image for `{0}`")]
    NotTotal(String),
    #[error("map is not monotone: {0} <= {1} but images are incomparable")]
    NotMonotone(String, String),
    #[error("projection not continuous: preimage of open {{{0}}} is not open")]
    NotContinuous(String),
    #[error("enumeration budget exceeded: {candidates} candidates > budget {budget}")]
    BudgetExceeded { candidates: u128, budget: u128 },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("subgroups live in different ambient groups")]
    AmbientMismatch,
    #[error("class map not well-defined: representatives {0} and {1} are equivalent but map to different classes")]
    NotWellDefined(String, String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
