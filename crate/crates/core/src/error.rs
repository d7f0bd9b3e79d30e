use std::path::PathBuf;

use thiserror::Error;

use crate::graph::NodeId;

/// Errors produced by graph construction, generation, metrics and I/O.
#[derive(Debug, Error)]
pub enum Error {
    #[error("node id {node} out of range for graph with {node_count} nodes")]
    NodeOutOfRange { node: NodeId, node_count: usize },

    #[error("operation requires a non-empty graph")]
    EmptyGraph,

    #[error("graph has {node_count} nodes but at least {minimum} are required")]
    TooFewNodes { node_count: usize, minimum: usize },

    #[error("operation requires a graph with at least one link")]
    NoLinks,

    #[error("normalized rank {r} outside (0, 1]")]
    RankOutOfRange { r: f64 },

    #[error("bin width {bin_width} does not divide the rank range into a whole number of bins")]
    InvalidBinWidth { bin_width: f64 },

    #[error("rank grid must not be empty")]
    EmptyRankGrid,

    #[error("requested {requested} distinct nodes but only {eligible} are eligible")]
    InfeasibleSample { requested: usize, eligible: usize },

    #[error("target of {target} nodes is below the minimum of {minimum} for this model")]
    TargetTooSmall { target: usize, minimum: usize },

    #[error("invalid growth config: {0}")]
    InvalidConfig(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("edge list contains no usable edges")]
    EmptyEdgeList,

    #[error("graph invariant violated: {0}")]
    InvariantViolation(String),

    #[error("report schema version mismatch: expected {expected}, found {found}")]
    SchemaMismatch { expected: String, found: String },

    #[error("I/O error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("JSON error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
