use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("guard exceeded: {0}")]
    Guard(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },
    #[error("element is not a unit: mark {mark} at class {class}")]
    NotUnit { class: usize, mark: i64 },
    #[error("group of type {0} is not in the class R")]
    NotInR(String),
    #[error("non-integral back-substitution at class {0}")]
    NonIntegral(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
