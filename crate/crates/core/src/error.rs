use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("entries belong to different fields")]
    MixedFields,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("subspace is not contained in the given subspace")]
    NotContained,
    #[error("{0} is not a prime >= 3 below 2^31")]
    InvalidPrime(u64),
    #[error("subspace is not an ideal")]
    NotAnIdeal,
    #[error("subspace is not central")]
    NotCentral,
    #[error("expected a subspace of dimension {expected}, found {found}")]
    WrongDimension { expected: usize, found: usize },
    #[error("algebra is not nilpotent")]
    NotNilpotent,
    #[error("Jacobi identity fails at ({i}, {j}, {k})")]
    JacobiViolation { i: usize, j: usize, k: usize },
    #[error("unknown catalog key `{0}`")]
    UnknownKey(String),
    #[error("catalog entry {0} needs an epsilon parameter")]
    EpsilonRequired(String),
    #[error("catalog entry {0} takes no epsilon parameter")]
    EpsilonForbidden(String),
    #[error(
        "dimension {0} is outside the catalog range 1..=6 (from dimension 7 on there are \
         one-parameter families of mutually non-isomorphic nilpotent Lie algebras)"
    )]
    UnsupportedDimension(usize),
    #[error("keys do not belong to the same epsilon family")]
    NotParameterized,
    #[error("the epsilon = 0 member is only compared by index equality")]
    ZeroEpsilonComparison,
    #[error("free nilpotent algebra would need {needed} basis words (limit {limit})")]
    ResourceLimit { needed: usize, limit: usize },
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("parse error: {0}")]
    Parse(String),
}
