use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("degree has a negative coordinate")]
    NegativeCoordinate,
    #[error("relation {0} is not above any generator")]
    RelationNotAboveGenerator(String),
    #[error("{0} is not a generator degree of the module")]
    NotAGenerator(String),
    #[error("shift vector has a negative coordinate")]
    NegativeShift,
    #[error("shift vector must be nonzero")]
    ZeroShift,
    #[error("fast path needs r = 2, got r = {0}")]
    UnsupportedDimension(usize),
    #[error("epsilon must be non-negative")]
    NegativeEpsilon,
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("grid: {0}")]
    Grid(String),
    #[error("maps do not commute on the square at ({0},{1})")]
    NonCommuting(usize, usize),
    #[error("search cap {0} exceeded")]
    CapExceeded(usize),
    #[error("negative density sample at {0}")]
    NegativeDensity(String),
    #[error("contour: {0}")]
    Contour(String),
    #[error("m_{0} is not super-additive")]
    NotSuperAdditive(usize),
    #[error("distance matrix is not a symmetric metric with zero diagonal")]
    BadMetric,
    #[error("step function: {0}")]
    StepFunction(String),
    #[error("exponent p must be >= 1")]
    BadExponent,
    #[error("sub-additivity violated at tau = {0}")]
    SubadditivityViolated(String),
    #[error("invariant violated: {0}")]
    Internal(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Input was well formed but the computation declined to run.
    pub fn is_refusal(&self) -> bool {
        matches!(self, Error::CapExceeded(_) | Error::UnsupportedDimension(_))
    }

    pub fn is_internal(&self) -> bool {
        matches!(
            self,
            Error::Internal(_) | Error::SubadditivityViolated(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
