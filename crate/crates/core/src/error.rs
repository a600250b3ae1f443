use crate::cancel::Cancelled;
use crate::poly::PolyError;

/// Errors surfaced by the configuration, polygon and elimination layers.
///
/// [`Error::Internal`] marks a failed identity that the mathematics
/// guarantees; everything else is a violated precondition or bad input.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("need at least 3 rows, got {0}")]
    TooFewRows(usize),
    #[error("column sums must be zero (column {column} sums to {sum})")]
    ColumnSum { column: usize, sum: i64 },
    #[error("rows must span a rank-2 lattice")]
    RankDeficient,
    #[error("rows do not generate Z^2: 2x2 minors have gcd {0}")]
    NotPrime(i64),
    #[error("A must have rank n-2 = {expected}, got {found}")]
    ARank { expected: usize, found: usize },
    #[error("no rational w with w.a_i = 1 for every column of A")]
    NoHomogenizingVector,
    #[error("row {0} is zero; this construction needs every b_i nonzero")]
    ZeroRow(usize),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("invalid input: {0}")]
    Input(String),
    #[error("internal identity failed: {0}")]
    Internal(String),
    #[error("computation cancelled")]
    Cancelled,
    #[error(transparent)]
    Poly(PolyError),
}

impl From<PolyError> for Error {
    fn from(e: PolyError) -> Self {
        match e {
            PolyError::Cancelled => Error::Cancelled,
            other => Error::Poly(other),
        }
    }
}

impl From<Cancelled> for Error {
    fn from(_: Cancelled) -> Self {
        Error::Cancelled
    }
}

impl Error {
    /// True for failures of identities that should hold unconditionally.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Internal(_) | Error::Poly(PolyError::InexactDivision))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
