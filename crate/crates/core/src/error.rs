use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("division is not exact: nonzero remainder")]
    DivisionNotExact,

    /// A q-integer `[index]` vanishes (or nearly vanishes) at the chosen q.
    #[error("q is not generic: q-integer [{index}] vanishes")]
    NonGenericQ { index: i64 },

    #[error("matrix is not nilpotent: A^{dim} != 0")]
    NotNilpotent { dim: usize },

    #[error("no square-root branch of v(u) satisfies the small-u asymptotics at u = {u}")]
    BranchAmbiguity { u: String },

    #[error("the symmetric basis needs square roots and is only available numerically")]
    SymmetricBasisRequiresNumeric,

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("malformed scalar JSON: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, Error>;
