use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero has no finite support")]
    ZeroSupport,
    #[error("{0} is not prime")]
    NotPrime(String),
    #[error("prime factor exceeds 64 bits")]
    PrimeTooLarge,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("dimension mismatch: expected {expected} variables, got {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("zero polynomial is not allowed here")]
    ZeroPolynomial,
    #[error("point lies on the divisor")]
    PointOnDivisor,
    #[error("all coordinates of a projective point are zero")]
    ZeroPoint,
    #[error("dimension -1: the ideal has an empty projective zero set")]
    EmptyVariety,
    #[error("emptiness undecided at bound {bound}")]
    EmptinessUndecided { bound: usize },
    #[error("instance too large for elimination ({vars} variables, limit {limit})")]
    EliminationTooLarge { vars: usize, limit: usize },
    #[error("basis vectors are linearly dependent")]
    DependentBasis,
    #[error("weight vector entries must be nonnegative")]
    NegativeWeight,
    #[error("u = {u} must exceed the degree {degree}")]
    DegreeTooSmall { u: usize, degree: usize },
    #[error("subset not in general position")]
    SubsetNotInGeneralPosition,
    #[error("input not in position")]
    NotInPosition,
    #[error("no replacement found within attempt budget ({attempts} attempts)")]
    BudgetExhausted { attempts: usize },
    #[error("unsupported variety class for an exact Chow form")]
    UnsupportedChowForm,
    #[error("invalid input: {0}")]
    Invalid(String),
}

impl Error {
    /// True for failures that mean "could not decide within the configured
    /// bounds" rather than "the input is malformed".
    pub fn is_undecided(&self) -> bool {
        matches!(
            self,
            Error::EmptinessUndecided { .. } | Error::BudgetExhausted { .. }
        )
    }
}
