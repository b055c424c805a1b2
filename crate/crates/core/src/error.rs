use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
    #[error("imaginary unit used outside the gaussian rationals: `{0}`")]
    ImaginaryOutsideGaussian(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("field mismatch: expected {expected}, found {found}")]
    FieldMismatch { expected: String, found: String },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("duplicate basis label `{0}`")]
    DuplicateLabel(String),
    #[error("malformed sparse matrix: {0}")]
    MalformedMatrix(String),
    #[error("not parity-homogeneous: {0}")]
    NotHomogeneous(String),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("invalid superalgebra ({} violation(s)); first: {}", .0.len(), .0.first().map(String::as_str).unwrap_or("-"))]
    InvalidAlgebra(Vec<String>),
    #[error("coordinate algebra is not super-commutative")]
    NotSuperCommutative,
    #[error("subspace not closed under the bracket: {0}")]
    NotClosed(String),
    #[error("subspace is not an ideal: {0}")]
    NotAnIdeal(String),
    #[error("field {0} has no square root of -1")]
    MissingSqrtMinusOne(String),
    #[error("Λ³ dimension {dim} exceeds budget {budget}")]
    BudgetExceeded { dim: usize, budget: usize },
    #[error("unsupported presentation: {0}")]
    UnsupportedPresentation(String),
    #[error("map not well-defined: {0}")]
    NotWellDefined(String),
    #[error("internal fault: {0}")]
    Internal(String),
}
