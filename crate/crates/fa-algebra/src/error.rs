//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by automaton, presentation and closure operations.
#[derive(Debug, Error)]
pub enum Error {
    #[error("alphabet mismatch: {0}")]
    AlphabetMismatch(String),
    #[error("invalid alphabet: {0}")]
    InvalidAlphabet(String),
    #[error("invalid padding: pad symbol followed by a letter on track {track}")]
    InvalidPadding { track: usize },
    #[error("unknown symbol {0:?}")]
    UnknownSymbol(String),
    #[error("arity error: {0}")]
    Arity(String),
    #[error("invalid automaton: {0}")]
    InvalidAutomaton(String),
    #[error("unknown relation or operation {0:?}")]
    UnknownRelation(String),
    #[error("malformed presentation: {0}")]
    Presentation(String),
    #[error("presentation failed validation: {0}")]
    ValidationFailed(String),
    #[error("word not in the domain language: {0:?}")]
    NotInDomain(String),
    #[error("operation {op:?} has no image for {args:?}")]
    TotalityViolation { op: String, args: String },
    #[error("formula error: {0}")]
    Formula(String),
    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("iteration limit of {0} exceeded")]
    ResourceExhausted(usize),
    #[error("json error: {0}")]
    Json(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
