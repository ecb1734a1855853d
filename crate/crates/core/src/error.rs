use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid composition: {0}")]
    InvalidComposition(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid descent set: {0}")]
    InvalidDescentSet(String),

    #[error("invalid skew shape: {0}")]
    InvalidShape(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("{0}")]
    Usage(String),

    #[error("expected an expression in the {expected} basis, found {found}")]
    BasisMismatch { expected: &'static str, found: &'static str },

    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),

    #[error("input not symmetric: {0}")]
    NotSymmetric(String),

    #[error("{what} = {got} exceeds the limit {limit}")]
    ResourceBound { what: &'static str, got: usize, limit: usize },
}

impl Error {
    /// Stable machine-readable code.
    pub fn code(&self) -> &'static str {
        match self {
            Error::InvalidComposition(_) => "invalid_composition",
            Error::InvalidPartition(_) => "invalid_partition",
            Error::InvalidDescentSet(_) => "invalid_descent_set",
            Error::InvalidShape(_) => "invalid_shape",
            Error::InvalidPermutation(_) => "invalid_permutation",
            Error::Parse(_) => "parse_error",
            Error::Usage(_) => "usage_error",
            Error::BasisMismatch { .. } => "basis_mismatch",
            Error::DegreeMismatch(..) => "degree_mismatch",
            Error::NotSymmetric(_) => "not_symmetric",
            Error::ResourceBound { .. } => "resource_bound",
        }
    }

    pub(crate) fn check_bound(what: &'static str, got: usize, limit: usize) -> Result<()> {
        if got > limit {
            Err(Error::ResourceBound { what, got, limit })
        } else {
            Ok(())
        }
    }
}
