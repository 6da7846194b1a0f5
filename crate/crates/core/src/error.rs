use crate::scalar::ScalarError;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error("R^(t2) is singular, so the dual representation is not defined")]
    NotDualizable,
    #[error("R must have both an inverse and a second inverse")]
    NotBiInvertible,
    #[error("minimal polynomial of PR has a non-linear factor: {factor}")]
    IrreducibleFactor { factor: String },
    #[error("eigenvalue index {index} out of range ({count} roots)")]
    NoSuchEigenvalue { index: usize, count: usize },
    #[error("R' condition `{condition}` fails at {witness}")]
    RPrimeConditionFailed { condition: String, witness: String },
    #[error("the derived R' is not invertible")]
    SingularRPrime,
    #[error("relations imply 1 = 0")]
    InconsistentRelations,
    #[error("reduction needs degree {degree}, completion only verified up to {bound}")]
    DegreeBoundExceeded { degree: usize, bound: usize },
    #[error("degree {0} is not supported")]
    DegreeUnsupported(usize),
    #[error("not a bicharacter: {0}")]
    NotABicharacter(String),
    #[error("the Hopf algebra has no antipode")]
    MissingAntipode,
    #[error("the antipode is not invertible")]
    AntipodeNotInvertible,
    #[error("not a bialgebra map: {0}")]
    NotABialgebraMap(String),
    #[error("p∘i is not the identity: {0}")]
    NotAProjection(String),
    #[error("input is not a braided Hopf algebra: {0}")]
    InputNotBraidedHopf(String),
    #[error("constructed output fails verification: {0}")]
    OutputVerificationFailed(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::Invalid(msg.into())
}
