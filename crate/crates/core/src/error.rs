use thiserror::Error;

use crate::exact_poly::IntPoly;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("degree {degree} exceeds the configured cap of {cap}")]
    UnsupportedDegree { degree: usize, cap: usize },

    /// The polynomial factors over the integers; `witness` is a nontrivial factor.
    #[error("polynomial is not minimal, it has the factor {witness}")]
    NotMinimal { witness: IntPoly },

    #[error("rational numbers form infinite numerator classes")]
    InfiniteClass,

    /// A proven identity failed to hold. Always an implementation bug.
    #[error("theorem violation: {0}")]
    TheoremViolation(String),

    #[error("cannot parse polynomial {input:?}: {reason}")]
    Parse { input: String, reason: String },
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }
}
