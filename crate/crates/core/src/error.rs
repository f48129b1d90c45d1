use thiserror::Error;

/// Errors raised by constructors and operations that validate their input.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("rank must be at least 2, got {0}")]
    InvalidRank(usize),
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("generator index {index} out of range for rank {n}")]
    LetterOutOfRange { index: usize, n: usize },
    #[error("invalid window: {0}")]
    InvalidWindow(String),
    #[error("{a} and {b} are congruent modulo {n}; no transposition")]
    CongruentReflection { n: usize, a: i64, b: i64 },
    #[error("cyclically decreasing element needs a proper subset of Z/{n}Z, got {subset:?}")]
    InvalidSubset { n: usize, subset: Vec<usize> },
    #[error("h_{index} is only defined for index < n = {n}")]
    HIndexTooLarge { index: i64, n: usize },
    #[error("partition part {part} exceeds k = {k}")]
    PartTooLarge { part: usize, k: usize },
    #[error("Pieri element index must be positive, got {0}")]
    InvalidPieriIndex(i64),
    #[error("element {0} is not 0-Grassmannian")]
    NotGrassmannian(String),
    #[error("strong tableau counts are not symmetric: {0}")]
    Asymmetric(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
