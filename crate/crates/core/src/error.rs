use alloc::string::String;

use crate::hive::HiveCoord;

/// Errors raised by the hive-model operations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HiveError {
    #[error("parts are not weakly decreasing: {0}")]
    NotDecreasing(String),
    #[error("partition {name} has length {len}, larger than the side size {n}")]
    TooLong {
        name: &'static str,
        len: usize,
        n: usize,
    },
    #[error("size mismatch: |nu| = {nu} but |lambda| + |mu| = {sum}")]
    SizeMismatch { nu: u64, sum: u64 },
    #[error("labeling for side {n} needs {expected} values, got {got}")]
    WrongLength {
        n: usize,
        expected: usize,
        got: usize,
    },
    #[error("coordinate {0:?} is not a valid hive vertex")]
    InvalidCoord(HiveCoord),
    #[error("coordinate {0:?} is on the border")]
    BorderCoord(HiveCoord),
    #[error("labeling is not integral")]
    NotIntegral,
    #[error("labeling violates {0} rhombus inequalities")]
    NotAHive(usize),
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("w(T)·w(U(mu)) is not a reverse lattice word")]
    NotLatticeWord,
    #[error("skew shape {0}")]
    InvalidShape(String),
    #[error("hive polytope is empty")]
    EmptyPolytope,
    #[error("functional is not generic for this border: optimal face has positive dimension")]
    NonGeneric,
    #[error("flatspace {index} is a {shape}, not a small triangle or small rhombus")]
    LargeFlatspace { index: usize, shape: String },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}
