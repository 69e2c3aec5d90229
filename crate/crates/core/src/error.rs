use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Shapes do not fit together (non-square determinant, product mismatch, ...).
    #[error("dimension error: {0}")]
    Dimension(String),
    #[error("invalid parameter: {0}")]
    Parameter(String),
    /// `det(I + mu*M)` was asked of a matrix whose entries already carry `mu`.
    #[error("matrix entries already contain the variable mu")]
    DomainClash,
    #[error("inexact division")]
    InexactDivision,
    #[error("enumeration budget of {budget} steps exceeded")]
    Budget { budget: u64 },
    /// An internal cross-check failed, e.g. a q-result that is not a pure polynomial in q.
    #[error("consistency check failed: {0}")]
    Consistency(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("parse error: {0}")]
    Parse(String),
}
