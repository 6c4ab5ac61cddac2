use thiserror::Error;

/// Errors produced by the library.
///
/// Indices in messages are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {left}x{left} vs {right}x{right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("semilength mismatch: {left} vs {right}")]
    SemilengthMismatch { left: usize, right: usize },

    #[error("invalid Dyck word {word:?}: {reason}")]
    InvalidPath { word: String, reason: &'static str },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("empty cell D_{n}({i},{j})")]
    EmptyCell { n: usize, i: usize, j: usize },

    #[error("unknown root system label {0:?}")]
    UnknownType(String),

    #[error("not a Cartan matrix of finite type: {0}")]
    NotFiniteType(String),

    #[error("not an antichain: {0}")]
    NotAntichain(String),

    #[error("not upward closed: {0}")]
    NotUpwardClosed(String),

    #[error("invalid ideal: {0}")]
    InvalidIdeal(String),

    #[error("inadmissible pair ({p}, {q})")]
    Inadmissible { p: String, q: String },

    #[error("quadruple is not the support class of any level-1 ideal")]
    Unclassifiable,

    #[error("level must stay positive (got {0})")]
    Level(i64),

    #[error("arithmetic overflow: {0}")]
    Overflow(String),
}

pub type Result<T> = std::result::Result<T, Error>;
