use thiserror::Error;

use crate::exactlin::Field;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(Field, Field),

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("ambient dimension mismatch: {0} vs {1}")]
    AmbientMismatch(usize, usize),

    #[error("subspace is not contained in the ambient space")]
    NotContained,

    #[error("matrix is singular")]
    Singular,

    #[error("invalid input: {0}")]
    Invalid(String),

    /// A structure failed one of its defining identities.
    #[error("axiom failure: {0}")]
    Axiom(String),

    #[error("parse error at {line}:{col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }

    pub fn shape(msg: impl Into<String>) -> Self {
        Error::Shape(msg.into())
    }
}

pub(crate) fn same_field(a: Field, b: Field) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::FieldMismatch(a, b))
    }
}
