use thiserror::Error;

use crate::parser::ParseError;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("operands live in different parameter spaces")]
    SpaceMismatch,
    #[error("invalid parameter space: {0}")]
    InvalidSpace(String),
    #[error("denominator vanishes at the evaluation point")]
    Pole,
    #[error("evaluation point assigns {got} values, space has {expected} variables")]
    PointArity { expected: usize, got: usize },
    #[error("division by zero")]
    DivisionByZero,
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("the indeterminate `{var}` occurs in {matrix} at row {row}, column {col}")]
    IndeterminateInCoefficients {
        var: String,
        matrix: &'static str,
        row: usize,
        col: usize,
    },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("unknown column label `{0}`")]
    UnknownLabel(String),
    #[error("matroids do not share a ground set")]
    GroundMismatch,
    #[error("invalid row partition: {0}")]
    InvalidPartition(String),
    #[error("certificate does not match the system: {0}")]
    ShapeMismatch(String),
    #[error("limit exceeded: {0}")]
    LimitExceeded(String),
    #[error("unimodular witnesses need a square block: {rows} rows but rank {rank}")]
    RankDeficientBlock { rows: usize, rank: usize },
    #[error("I/O error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("malformed document: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid system file: {0}")]
    InvalidFile(String),
}
