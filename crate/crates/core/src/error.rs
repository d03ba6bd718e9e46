use thiserror::Error;

/// Errors reported by group, root and basis operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("nullity must be at least 1")]
    ZeroNullity,
    #[error("nullity mismatch: expected {expected}, found {found}")]
    NullityMismatch { expected: usize, found: usize },
    #[error("coefficient of epsilon must be -1, 0 or 1, found {0}")]
    InvalidEpsilonCoefficient(i64),
    #[error("element sign must be -1 or 1, found {0}")]
    InvalidParity(i64),
    #[error("isotropic root has no reflection")]
    IsotropicRoot,
    #[error("the zero root is neither positive nor negative")]
    ZeroRoot,
    #[error("integer overflow")]
    Overflow,
    #[error("expected {expected} roots, found {found}")]
    WrongArity { expected: usize, found: usize },
    #[error("roots do not form a root basis")]
    NotRootBasis,
    #[error("generator index {index} out of range for nullity {nullity}")]
    GeneratorOutOfRange { index: usize, nullity: usize },
    #[error("generator {0} is not an involution")]
    NotInvolution(usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn check_nullity(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::NullityMismatch { expected, found })
    }
}
