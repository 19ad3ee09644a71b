use thiserror::Error;

use crate::mpoly::Var;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("substituted value mentions the variable {0} being replaced")]
    SubstitutionCycle(Var),

    #[error("no value assigned to variable {0}")]
    MissingVariable(Var),

    #[error("series has constant term {0}, expected 1")]
    NotAUnit(String),

    #[error("series inverse requires a q- or t-degree bound")]
    NoTruncation,

    #[error("series inverse does not terminate: monomial {0} avoids every bounded variable")]
    NonTruncatingInverse(String),

    #[error("word is empty")]
    EmptyWord,

    #[error("word repeats the letter {0}")]
    RepeatedLetter(u32),

    #[error("explicit formula left a residue with q-exponent below the clearing shift {0}")]
    NegativeExponentResidue(u32),

    #[error("singular evaluation point: {0}")]
    SingularEvaluationPoint(String),

    #[error("invalid range: {0}")]
    InvalidRange(String),

    #[error("alpha must be an integer >= -1, got {0}")]
    InvalidAlpha(i64),

    #[error("invalid Laguerre history: {0}")]
    InvalidHistory(String),

    #[error("polynomial has x-degree {degree} but only {available} moments are available")]
    DegreeTooHigh { degree: u32, available: usize },

    #[error("cell (row {row}, column {col}) lies outside the board")]
    CellOutsideBoard { row: u32, col: u32 },

    #[error("invalid structure: {0}")]
    InvalidStructure(String),
}

pub type Result<T> = std::result::Result<T, Error>;
