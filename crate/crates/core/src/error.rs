use thiserror::Error;

use crate::graph::NodeId;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("degenerate attachment distribution: {0}")]
    DegenerateDistribution(String),

    #[error("graph is disconnected: node {target} is unreachable from node {from}")]
    Unreachable { from: NodeId, target: NodeId },

    #[error("insufficient data for fit: {usable} usable points, at least {required} required")]
    InsufficientData { usable: usize, required: usize },

    #[error("graph with {nodes} nodes exceeds the dense solver cap of {cap}")]
    Capacity { nodes: usize, cap: usize },

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("incomplete results: {0}")]
    IncompleteResults(String),

    #[error("ER draw still disconnected after {attempts} attempts (n={n}, edges={edges})")]
    ResampleLimit {
        attempts: usize,
        n: usize,
        edges: usize,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Toml(#[from] toml::de::Error),
}
