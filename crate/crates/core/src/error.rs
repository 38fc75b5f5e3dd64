use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid h*-vector: {0}")]
    InvalidVector(String),
    #[error("invalid weight vector: {0}")]
    InvalidAlpha(String),
    #[error("inconsistent a/b decomposition: {0}")]
    InconsistentDecomposition(String),
    #[error("singular generator matrix")]
    Singular,
    #[error("enumeration budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("non-terminal group: element {index} has age {age}")]
    NonTerminal { index: usize, age: u64 },
    #[error("subsets live in different ambient groups")]
    AmbientMismatch,
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
