//! Error types shared across the crate.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("truncation orders differ: {0} vs {1}")]
    TruncationMismatch(usize, usize),

    #[error("series has nonzero constant term, expected F[0] = 0")]
    NonzeroConstantTerm,

    #[error("series has zero constant term, expected F[0] != 0")]
    ZeroConstantTerm,

    #[error("series is not a delta series (need F[0] = 0 and F[1] != 0)")]
    NotDelta,

    #[error("pair is not admissible (need G[0] = 0)")]
    NotAdmissible,

    #[error("pair is not Riordan (need F[0] != 0 and G a delta series)")]
    NotRiordan,

    #[error("matrix size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),

    #[error("zero diagonal entry at position {0}")]
    ZeroDiagonal(usize),

    #[error("requested n_max {0} exceeds truncation order {1}")]
    OrderTooLarge(usize, usize),

    #[error("polynomial degree {0} exceeds operator truncation order {1}")]
    DegreeOverflow(usize, usize),

    #[error("singular coefficient matrix")]
    SingularMatrix,

    #[error("ground sets differ")]
    GroundSetMismatch,

    #[error("label mismatch: {0}")]
    LabelMismatch(String),

    #[error("poset has no zero element")]
    NoZeroElement,

    #[error("partial order axiom violated: {0}")]
    OrderAxiom(String),

    #[error("invalid group table: {0}")]
    InvalidGroup(String),

    #[error("unknown instance id: {0}")]
    UnknownInstance(String),

    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
