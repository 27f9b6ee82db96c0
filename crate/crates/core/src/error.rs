use thiserror::Error;

/// Errors raised by the algebra, the decision engines and the text formats.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("context mismatch: expected {expected} variables, found {found}")]
    ContextMismatch { expected: usize, found: usize },

    #[error("exponent {value} exceeds the configured limit {limit}")]
    ExponentOverflow { value: u64, limit: u32 },

    #[error("a ring with {0} variables is not supported (at most {max})", max = crate::varset::MAX_VARS)]
    TooManyVariables(usize),

    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("the zero ideal is not accepted here")]
    ZeroIdeal,

    #[error("the unit ideal is not accepted here")]
    UnitIdeal,

    #[error("{0} is a prime ideal and has no cleaner monomials")]
    PrimeIdeal(String),

    #[error("{0} must be squarefree")]
    NotSquarefree(String),

    #[error("generators {0} and {1} are not coprime")]
    NotCoprime(String, String),

    #[error("the complex is not a matroid")]
    NotMatroid,

    #[error("{0} is not a face of the complex")]
    NotAFace(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("search budget of {budget} expansions exhausted ({memo_entries} memo entries)")]
    BudgetExhausted { budget: u64, memo_entries: usize },

    #[error("invalid certificate at {path}: {reason}")]
    InvalidCertificate { path: String, reason: String },

    #[error("homology budget exceeded: {0}")]
    HomologyBudget(String),

    #[error("malformed certificate document: {0}")]
    Json(String),

    #[error("corpus manifest: {0}")]
    Manifest(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }
}
