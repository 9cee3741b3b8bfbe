use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("jet arithmetic mismatch: {0}")]
    JetMismatch(String),

    #[error("jet composition requires the inner map to vanish at the origin")]
    NonzeroConstantTerm,

    #[error("singular constant term: the jet has no truncated inverse")]
    SingularConstantTerm,

    #[error("singular linear part: the map jet has no truncated inverse")]
    SingularLinearPart,

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("invalid tensor slot: {0}")]
    InvalidSlot(String),

    #[error("tensor is not valued in the Lie algebra (slot {slot})")]
    NotAlgebraValued { slot: usize },

    #[error("tensor fails the required antisymmetry")]
    NotAntisymmetric,

    #[error("singular matrix")]
    SingularMatrix,

    #[error("invalid group specification: {0}")]
    InvalidGroup(String),

    #[error("basis is linearly dependent")]
    DependentBasis,

    #[error("basis is not closed under the commutator bracket")]
    NotBracketClosed,

    #[error("algebra is not closed under transposition; supply an explicit supplement")]
    NotTransposeClosed,

    #[error("first prolongation is nonzero (dim {dim}); no canonical connection")]
    NonzeroProlongation { dim: usize },

    #[error("supplement does not split the alternation image: {0}")]
    NotASupplement(String),

    #[error("matrix is not an element of the structure group: {0}")]
    NotInGroup(String),

    #[error("frame jet has a singular matrix at the origin")]
    SingularFrame,

    #[error("marked frame is not related to the frame at the origin by a group element")]
    MarkedFrameMismatch,

    #[error("order mismatch: expected {expected}, got {got}")]
    OrderMismatch { expected: usize, got: usize },

    #[error("order must be at least {min} for this operation (got {got})")]
    OrderTooLow { min: usize, got: usize },

    #[error("connection torsion leaves the supplement W at order {order}")]
    TorsionNotInW { order: usize },

    #[error("jet value leaves the Lie algebra at order {order}")]
    NotAlgebraValuedJet { order: usize },

    #[error("jet does not satisfy the normal-form slice equations: {0}")]
    NotInSlice(String),

    #[error("internal inconsistency: {0}")]
    Internal(String),

    #[error("{path}: {message}")]
    Schema { path: String, message: String },

    #[error("cannot parse rational literal {0:?}")]
    BadRational(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn schema(path: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Schema {
            path: path.into(),
            message: message.into(),
        }
    }
}
