use thiserror::Error;

/// Errors raised by the algebraic and geometric routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("usage error: {0}")]
    Usage(String),
    #[error("syntax error at byte {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("non-rational coefficient `{0}`")]
    NonRational(String),
    #[error("components have mixed degrees: {0}")]
    MixedDegrees(String),
    #[error("degenerate resultant: {0}")]
    DegenerateResultant(String),
    #[error("null foliation: the field is a multiple of the radial field")]
    NullFoliation,
    #[error("point {0} is not a singular point of the foliation")]
    NotSingular(String),
    #[error("the foliation does not have isolated singularities")]
    NotIsolated,
    #[error("unsupported degree {0}")]
    UnsupportedDegree(u32),
    #[error("singular frame: determinant is zero")]
    SingularFrame,
    #[error("{0} violated")]
    FamilyCondition(String),
    #[error("oracle exceeded its budget of {0} reduction steps")]
    OracleTimeout(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
