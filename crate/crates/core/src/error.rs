use thiserror::Error;

/// Errors raised by the library. Every public operation that can reject its
/// input returns `Result<_, Error>`.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("{0} is not a root")]
    NotARoot(String),

    #[error("matrices are not homogeneous or have incompatible block sizes: {0}")]
    NotHomogeneous(String),

    #[error("family {0} has no matrix realization")]
    Unrealized(String),

    #[error("simple roots are linearly dependent")]
    DependentSimpleRoots,

    #[error("not an abstract positive system: {0}")]
    NotPositive(String),

    #[error("positive system is not admissible for the pair")]
    NotAdmissible,

    #[error("real form `{form}` is not available for {family}")]
    IllegalRealForm { family: String, form: String },

    #[error("enumeration budget of {0} exceeded")]
    BudgetExceeded(usize),

    #[error("weight is not dominant integral on the compact roots: {0}")]
    NotDominant(String),

    #[error("polynomial is not invariant under the Weyl group")]
    NotWInvariant,

    #[error("weight is atypical: (lambda + rho, {0}) = 0")]
    Atypical(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
