use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at column {column}: {message}")]
    Syntax { column: usize, message: String },

    #[error("unknown variable `{name}` at column {column}")]
    UnknownVariable { name: String, column: usize },

    #[error("degree and order are undefined for the zero polynomial")]
    ZeroPolynomial,

    #[error("derivation degree is undefined for the zero derivation")]
    ZeroDerivation,

    #[error("variable count mismatch: expected {expected}, found {found}")]
    VariableCount { expected: usize, found: usize },

    #[error("invalid weight system: {0}")]
    InvalidWeights(String),

    #[error("generator g{index} is not homogeneous: monomials {first} and {second} have weighted degrees {first_degree} and {second_degree}")]
    Inhomogeneous {
        index: usize,
        first: String,
        second: String,
        first_degree: u64,
        second_degree: u64,
    },

    #[error("generator g{index} has order {order} < 2, so the embedding dimension is not minimal")]
    OrderTooLow { index: usize, order: u64 },

    #[error("matrix is not square ({rows} rows, row {row} has {cols} entries)")]
    NonSquare { rows: usize, row: usize, cols: usize },

    #[error("matrix size {size} exceeds the configured bound {bound}")]
    MatrixTooLarge { size: usize, bound: usize },

    #[error("index {index} out of range for {n} variables")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("index list must be strictly increasing: {0:?}")]
    NotIncreasing(Vec<usize>),

    #[error("expected {expected} indices, got {found}")]
    IndexCount { expected: usize, found: usize },

    #[error("Gröbner engine exceeded its budget of {budget} reduction steps")]
    ResourceCap { budget: u64 },

    #[error("the ideal is the unit ideal")]
    UnitIdeal,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("derivation does not annihilate g{index} modulo the ideal")]
    NotAnnihilating { index: usize },

    #[error("invalid counter-example parameters: {0}")]
    InvalidParams(String),

    #[error("theory violation: {claim}\n{dump}")]
    TheoryViolation { claim: String, dump: String },
}

impl Error {
    pub(crate) fn theory(claim: impl Into<String>, dump: impl Into<String>) -> Self {
        Error::TheoryViolation {
            claim: claim.into(),
            dump: dump.into(),
        }
    }

    pub fn is_theory_violation(&self) -> bool {
        matches!(self, Error::TheoryViolation { .. })
    }

    pub fn is_resource_error(&self) -> bool {
        matches!(self, Error::ResourceCap { .. })
    }
}
