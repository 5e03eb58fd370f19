use thiserror::Error;

use crate::diagrams::DiagramReport;
use crate::seifert::ValidationReport;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("not an exact rational: {0:?} (expected \"p\" or \"p/q\")")]
pub struct ParseRatError(pub String);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("{op} needs constant term {expected}, found {found}")]
    Domain {
        op: &'static str,
        expected: &'static str,
        found: String,
    },
    #[error("divisor has zero constant term and is not invertible")]
    NotInvertible,
    #[error("Laurent division is not exact")]
    InexactDivision,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WeightError {
    #[error("k = {k} is outside the supported range {min}..={max}{hint}")]
    OutOfRange {
        k: usize,
        min: usize,
        max: usize,
        hint: &'static str,
    },
    #[error("kmax = {0} is too small; the weights start at k = 2")]
    KmaxTooSmall(usize),
    #[error("weight routes disagree at {0}")]
    Disagreement(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeifertError {
    #[error("invalid Seifert data:\n{0}")]
    Invalid(ValidationReport),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("degree d = {d} outside 1..={n}")]
    DegreeOutOfRange { d: usize, n: usize },
    #[error("torsion normalization failed: {0}")]
    Normalization(String),
    #[error("block sizes {sizes:?} cannot carry dual blocks for n = {n}: {reason}")]
    BlockLayout {
        n: usize,
        sizes: Vec<usize>,
        reason: String,
    },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error(transparent)]
    Seifert(#[from] SeifertError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("k = {k} is outside the weight table range 2..={kmax}")]
    OutOfTable { k: usize, kmax: usize },
    #[error("invalid index: {0}")]
    BadIndex(String),
    #[error("internal consistency failure: {0}")]
    InternalConsistency(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("degree k = {k} is outside the supported range {min}..={max}")]
    OutOfRange { k: usize, min: usize, max: usize },
    #[error("invalid BCR diagram:\n{0}")]
    Invalid(DiagramReport),
}

#[derive(Debug, Error)]
pub enum InputError {
    #[error("{0}")]
    Json(#[from] serde_json::Error),
    #[error("at {path}: {source}")]
    Entry {
        path: String,
        #[source]
        source: ParseRatError,
    },
    #[error("at {path}: {message}")]
    Shape { path: String, message: String },
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}
