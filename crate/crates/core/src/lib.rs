//! Sampling connected simple graphs with a prescribed degree sequence by
//! an edge-switching Markov chain.
//!
//! The chain performs `w` random switch attempts per transition, tests the
//! result for connectivity, and rolls the whole batch back on failure. How
//! `w` evolves is set by a [`heuristics::HeuristicConfig`]; the `sb` policy
//! derives it from `rho`, the exact per-attempt probability of staying
//! connected, which [`connectivity::analyze`] computes in linear time.

pub mod cli;
pub mod connectivity;
pub mod construct;
pub mod degseq;
pub mod engine;
pub mod error;
pub mod graph;
pub mod heuristics;
pub mod metrics;

pub use connectivity::{analyze, is_connected, ConnectivityReport, Ratio};
pub use degseq::{is_realizable, DegreeSequence, PowerLawSpec, Realizability};
pub use engine::{run, run_experiment, DegreeSource, ExperimentConfig, RunConfig, RunStats};
pub use error::{Error, Result};
pub use graph::{Edge, Graph, Orientation, SwitchOutcome};
pub use heuristics::HeuristicConfig;
pub use metrics::MetricKind;
