use thiserror::Error;

/// Errors raised by the fiber-cone toolkit.
///
/// `InternalInconsistency` is special: it means one of the structural
/// self-checks failed, which indicates a bug (or a false claim) rather
/// than bad input. The CLI maps it to exit code 2.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid ideal: {0}")]
    InvalidIdeal(String),
    #[error("exponent overflow")]
    Overflow,
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("ideal is not normalized (need a_m = b_1 = 0)")]
    NotNormalized,
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("J is not contained in I")]
    NotASubideal,
    #[error("index out of range: {0}")]
    IndexError(String),
    #[error("bound too small: {0}")]
    BoundTooSmall(String),
    #[error("invalid specification: {0}")]
    InvalidSpec(String),
    #[error("{0} is not an element of the semigroup")]
    NotInSemigroup(u64),
    #[error("generators have gcd {0} != 1, Apéry set is infinite")]
    InfiniteApery(u64),
    #[error("{0} is not a supported prime")]
    InvalidPrime(u64),
    #[error("parse error at position {pos}: {msg}")]
    ParseError { pos: usize, msg: String },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::InternalInconsistency(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
