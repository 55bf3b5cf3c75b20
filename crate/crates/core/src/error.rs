use thiserror::Error;

use crate::degseq::Realizability;

#[derive(Debug, Error)]
pub enum Error {
    #[error("degree sequence is empty")]
    EmptySequence,

    #[error("negative degree {degree} at position {index}")]
    NegativeDegree { index: usize, degree: i64 },

    #[error("invalid power-law parameters: {0}")]
    InvalidPowerLaw(String),

    #[error("no realizable degree sequence after {attempts} attempts")]
    AttemptCapExceeded { attempts: u64 },

    #[error("degree sequence is not realizable: {0}")]
    NotRealizable(Realizability),

    #[error("self-loop on node {0}")]
    SelfLoop(u32),

    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(u32, u32),

    #[error("edge ({u}, {v}) has an endpoint outside 0..{n}")]
    NodeOutOfRange { u: u32, v: u32, n: usize },

    #[error("edge index {index} out of range for {m} edges")]
    EdgeIndexOutOfRange { index: usize, m: usize },

    #[error("switch needs two distinct edges")]
    SameEdge,

    #[error("graph has {0} edges; at least two are needed to attempt a switch")]
    TooFewEdgesToSwitch(usize),

    #[error("disconnected graph has no cycle to break")]
    NoCycle,

    #[error("graph is disconnected")]
    Disconnected,

    #[error("graph too large for the brute-force oracle ({n} nodes, {m} edges)")]
    GraphTooLarge { n: usize, m: usize },

    #[error("invalid heuristic parameters: {0}")]
    InvalidHeuristic(String),

    #[error("probability {0} outside (0, 1]")]
    InvalidProbability(f64),

    #[error("invalid run configuration: {0}")]
    InvalidConfig(String),

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
