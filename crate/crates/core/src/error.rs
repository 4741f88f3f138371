use std::path::PathBuf;

use thiserror::Error;

use crate::network::NodeId;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("{context}: duplicate node id {id}")]
    DuplicateNode { context: String, id: NodeId },

    #[error("{context}: edge endpoint {id} does not reference a node")]
    DanglingEndpoint { context: String, id: NodeId },

    #[error("{context}: edge weight {weight} outside [0, 1]")]
    WeightOutOfRange { context: String, weight: f64 },

    #[error("{context}: self-loop on node {id}")]
    SelfLoop { context: String, id: NodeId },

    #[error("{context}: second edge between {a} and {b}")]
    DuplicateEdge { context: String, a: NodeId, b: NodeId },

    #[error("{context}: {message}")]
    InvalidNode { context: String, message: String },

    #[error("line {line}: malformed row: {message}")]
    MalformedRow { line: usize, message: String },

    #[error("line {line}: score {score} outside the {scale} scale")]
    ScoreOutOfScale {
        line: usize,
        score: f64,
        scale: &'static str,
    },

    #[error("unknown node id {0}")]
    UnknownNode(NodeId),

    #[error("unknown node label {0:?}")]
    UnknownLabel(String),

    #[error("label {0:?} names more than one node")]
    AmbiguousLabel(String),

    #[error("node {0} has no neighbours")]
    DegenerateNode(NodeId),

    #[error("network has no edge weight mass")]
    EdgelessNetwork,

    #[error("no source nodes given")]
    EmptySources,

    #[error("source energy {total} exceeds budget {budget}")]
    BudgetExceeded { total: f64, budget: f64 },

    #[error("state covers {got} nodes, expected {expected}")]
    StateMismatch { expected: usize, got: usize },

    #[error("invalid state: {0}")]
    InvalidState(String),

    #[error("timestamp {timestamp} lies after the current time {now}")]
    FutureTimestamp { timestamp: f64, now: f64 },

    #[error("invalid parameter {name}: {message}")]
    InvalidParam { name: &'static str, message: String },

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("need at least {required} samples, got {got}")]
    TooFewSamples { required: usize, got: usize },

    #[error("rank variance is zero; correlation undefined")]
    ZeroVariance,

    #[error("csv: {0}")]
    Csv(#[from] csv::Error),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    pub(crate) fn param(name: &'static str, message: impl Into<String>) -> Self {
        Error::InvalidParam {
            name,
            message: message.into(),
        }
    }

    /// Whether the error stems from invalid input (file contents, labels,
    /// parameters) rather than a failure while running a pipeline.
    pub fn is_validation(&self) -> bool {
        !matches!(
            self,
            Error::Io { .. } | Error::Csv(_) | Error::Json(_) | Error::DegenerateNode(_) | Error::ZeroVariance
        )
    }
}
