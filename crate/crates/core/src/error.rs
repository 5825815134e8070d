use std::path::PathBuf;

use thiserror::Error;

/// Errors raised while building or parsing hypergraphs.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HypergraphError {
    #[error("vertex {0} is out of range 1..=4")]
    VertexOutOfRange(u8),
    #[error("edge mask {0:#06b} is not a nonempty subset of 4 vertices")]
    InvalidEdgeMask(u8),
    #[error("hypergraph code {0} does not fit in 15 bits")]
    CodeOutOfRange(u32),
    #[error("sign function has g(0000)=1; flip the global phase first")]
    NegativeReferenceAmplitude,
    #[error("permutation images {0:?} are not a bijection on 1..=4")]
    InvalidPermutation([u8; 4]),
    #[error("invalid edge token {token:?}: {reason}")]
    Parse { token: String, reason: &'static str },
    #[error("3-edge elimination did not terminate within {0} moves")]
    StandardizeDiverged(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StateError {
    #[error("keep mask {0:#06b} must select 1 or 2 qubits")]
    InvalidKeepMask(u8),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SolverError {
    #[error("restarts must be at least 1")]
    NoRestarts,
    #[error("tolerance must be positive, got {0}")]
    NonPositiveTolerance(f64),
    #[error("z iteration approached the pole z = -1 (last z = {re} + {im}i)")]
    Divergence { re: f64, im: f64 },
}

#[derive(Debug, Error)]
pub enum OrbitError {
    #[error("orbit {orbit} mixes standardized ranks {expected} and {found} (code {code})")]
    RankInconsistent { orbit: usize, code: u16, expected: u8, found: u8 },
    #[error("orbit cache {path}: {reason}")]
    BadCache { path: PathBuf, reason: String },
    #[error("orbit cache {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
}

#[derive(Debug, Error)]
pub enum ClassifyError {
    #[error(transparent)]
    Solver(#[from] SolverError),
    #[error(transparent)]
    Orbit(#[from] OrbitError),
    #[error("classes with representatives {a} and {b} have indistinguishable signatures")]
    Collision { a: u16, b: u16 },
    #[error("class with representative {rep} matches no reference row")]
    Unmatched { rep: u16 },
    #[error("class with representative {rep} matches reference rows {rows:?}")]
    Ambiguous { rep: u16, rows: Vec<u8> },
    #[error("reference row No.{row} is claimed by more than one class")]
    RowClaimedTwice { row: u8 },
    #[error("expected {expected} hypergraph classes, found {found}")]
    ClassCount { expected: usize, found: usize },
}

#[derive(Debug, Error)]
pub enum ReportError {
    #[error("unknown report format {0:?} (expected json, csv or md)")]
    UnknownFormat(String),
    #[error("writing report to {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}
