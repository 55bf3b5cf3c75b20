//! Brute-force ground truth for [`super::analyze`] on small graphs.
//!
//! Nothing here uses a search tree: bridges and two-edge cuts come from
//! deleting edges and re-testing connectivity, and the switch events come
//! from performing every (pair, orientation) switch on a copy.

use super::{is_connected_adj, BridgeCensus, ConnectivityReport, PairCutCensus};
use crate::error::{Error, Result};
use crate::graph::{Adjacency, Edge, Graph, Orientation, SwitchOutcome};

pub const ORACLE_MAX_NODES: usize = 32;
pub const ORACLE_MAX_EDGES: usize = 64;

/// Outcome counts over all `m(m-1)` (pair, orientation) switch choices.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct EventCensus {
    pub adjacent: u64,
    pub blocked: u64,
    pub applied: u64,
    /// Applied switches whose result is disconnected.
    pub disconnecting: u64,
    /// Disconnecting events on a pair of two bridges.
    pub disconnecting_bridge_pairs: u64,
    /// All other disconnecting events.
    pub disconnecting_other: u64,
    /// Disconnecting events on neighbor pairs (expected zero).
    pub disconnecting_neighbor: u64,
    /// Blocked orientations on nonadjacent, non-neighbor pairs (expected zero).
    pub blocked_free_pairs: u64,
    /// Disconnecting events where exactly one edge is a bridge (expected zero).
    pub disconnecting_mixed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleReport {
    pub report: ConnectivityReport,
    pub events: EventCensus,
}

fn connected_without(n: usize, edges: &[Edge], skip: &[usize]) -> bool {
    let kept: Vec<Edge> = edges
        .iter()
        .enumerate()
        .filter(|(i, _)| !skip.contains(i))
        .map(|(_, &e)| e)
        .collect();
    is_connected_adj(&Adjacency::build(n, &kept))
}

/// Whether a third edge joins two of the four endpoints of `e` and `f`.
fn are_neighbors(graph: &Graph, e: Edge, f: Edge) -> bool {
    let nodes = [e.u, e.v, f.u, f.v];
    for i in 0..4 {
        for j in i + 1..4 {
            let (a, b) = (nodes[i], nodes[j]);
            let joined = graph.has_edge(a, b);
            let is_e_or_f = Edge::new(a, b) == e || Edge::new(a, b) == f;
            if joined && !is_e_or_f {
                return true;
            }
        }
    }
    false
}

/// Full census by exhaustive deletion and switching. Requires a connected
/// graph within the size guard.
pub fn oracle_report(graph: &Graph) -> Result<OracleReport> {
    let (n, m) = (graph.n(), graph.m());
    if n > ORACLE_MAX_NODES || m > ORACLE_MAX_EDGES {
        return Err(Error::GraphTooLarge { n, m });
    }
    let edges = graph.edges();
    if !connected_without(n, edges, &[]) {
        return Err(Error::Disconnected);
    }

    let is_bridge: Vec<bool> = (0..m).map(|i| !connected_without(n, edges, &[i])).collect();

    let mut bridges = BridgeCensus {
        bridges: is_bridge.iter().filter(|&&b| b).count() as u64,
        ..Default::default()
    };
    let mut cuts = PairCutCensus::default();
    let mut events = EventCensus::default();

    for i in 0..m {
        for j in i + 1..m {
            let (e, f) = (edges[i], edges[j]);
            let adjacent = e.shares_node(f);
            let neighbor = !adjacent && are_neighbors(graph, e, f);

            if is_bridge[i] && is_bridge[j] {
                if adjacent {
                    bridges.adjacent_pairs += 1;
                } else if neighbor {
                    bridges.neighbor_pairs += 1;
                }
            } else if !is_bridge[i] && !is_bridge[j] && !connected_without(n, edges, &[i, j]) {
                cuts.pair_cuts += 1;
                if adjacent {
                    cuts.adjacent += 1;
                } else if neighbor {
                    cuts.neighbor += 1;
                }
            }

            for orientation in [Orientation::A, Orientation::B] {
                let mut h = graph.clone();
                match h.switch(i, j, orientation).expect("valid slots") {
                    SwitchOutcome::Adjacent => events.adjacent += 1,
                    SwitchOutcome::Blocked => {
                        events.blocked += 1;
                        if !neighbor {
                            events.blocked_free_pairs += 1;
                        }
                    }
                    SwitchOutcome::Applied(_) => {
                        events.applied += 1;
                        if !connected_without(n, h.edges(), &[]) {
                            events.disconnecting += 1;
                            if neighbor {
                                events.disconnecting_neighbor += 1;
                            }
                            match (is_bridge[i], is_bridge[j]) {
                                (true, true) => events.disconnecting_bridge_pairs += 1,
                                (false, false) => events.disconnecting_other += 1,
                                _ => {
                                    events.disconnecting_other += 1;
                                    events.disconnecting_mixed += 1;
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    Ok(OracleReport {
        report: ConnectivityReport {
            connected: true,
            m,
            bridges: Some(bridges),
            pair_cuts: Some(cuts),
        },
        events,
    })
}
