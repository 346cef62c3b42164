use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid hessenberg function {values:?}: {reason}")]
    InvalidHessFn { values: Vec<usize>, reason: String },

    #[error("invalid permutation word {word:?}: {reason}")]
    InvalidWord { word: Vec<usize>, reason: String },

    #[error("invalid root ({i},{j}): {reason}")]
    InvalidRoot { i: usize, j: usize, reason: String },

    #[error("root ({i},{j}) is not positive")]
    NotPositive { i: usize, j: usize },

    #[error("n = {n} unsupported here (need {min} <= n <= {max})")]
    UnsupportedRank { n: usize, min: usize, max: usize },

    #[error("size mismatch: expected {expected}, got {got}")]
    SizeMismatch { expected: usize, got: usize },

    #[error("variable index {index} out of range (1..={nvars})")]
    VarOutOfRange { index: usize, nvars: usize },

    #[error("degree {degree} exceeds cap {cap}")]
    DegreeCap { degree: usize, cap: usize },

    #[error("cochain has no assignment for vertex {word}")]
    MissingAssignment { word: String },

    #[error("malformed {what}: {reason}")]
    Malformed { what: &'static str, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;
