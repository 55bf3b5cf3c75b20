//! Halting metrics `g(t)`.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use crate::connectivity::is_connected_adj;
use crate::error::{Error, Result};
use crate::graph::{Adjacency, Graph, Node};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MetricKind {
    Clustering,
    AverageDistance,
}

impl MetricKind {
    pub fn name(self) -> &'static str {
        match self {
            MetricKind::Clustering => "clustering",
            MetricKind::AverageDistance => "distance",
        }
    }

    /// Window length and tolerance used with this metric by default.
    pub fn default_halting(self) -> (usize, f64) {
        match self {
            MetricKind::Clustering => (60, 1e-4),
            MetricKind::AverageDistance => (30, 1e-3),
        }
    }

    pub fn evaluate(self, adj: &Adjacency) -> f64 {
        match self {
            MetricKind::Clustering => clustering_adj(adj),
            MetricKind::AverageDistance => average_distance_adj(adj),
        }
    }
}

impl fmt::Display for MetricKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MetricKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "clustering" => Ok(MetricKind::Clustering),
            "distance" => Ok(MetricKind::AverageDistance),
            other => Err(format!("unknown metric {other:?}")),
        }
    }
}

/// Three times the triangle count over the number of connected triples
/// `sum_j C(d_j, 2)`; zero when there are no triples.
pub fn clustering_coefficient(graph: &Graph) -> f64 {
    clustering_adj(&graph.adjacency())
}

/// Counts each triangle `u < v < w` once by marking the neighbors of `u`
/// and scanning the neighbor lists of its higher neighbors: O(d_1 m).
pub fn triangles(adj: &Adjacency) -> u64 {
    let n = adj.n();
    let mut mark = vec![false; n];
    let mut count = 0u64;
    for u in 0..n as Node {
        let nu = adj.neighbors(u);
        for &v in nu {
            mark[v as usize] = true;
        }
        for &v in nu {
            if v <= u {
                continue;
            }
            for &w in adj.neighbors(v) {
                if w > v && mark[w as usize] {
                    count += 1;
                }
            }
        }
        for &v in nu {
            mark[v as usize] = false;
        }
    }
    count
}

pub(crate) fn clustering_adj(adj: &Adjacency) -> f64 {
    let triples: u64 = (0..adj.n() as Node)
        .map(|v| {
            let d = adj.degree(v) as u64;
            d * d.saturating_sub(1) / 2
        })
        .sum();
    if triples == 0 {
        return 0.0;
    }
    3.0 * triangles(adj) as f64 / triples as f64
}

/// Mean shortest-path length over unordered node pairs, by one BFS per
/// node. Errors on a disconnected graph.
pub fn average_distance(graph: &Graph) -> Result<f64> {
    let adj = graph.adjacency();
    if !is_connected_adj(&adj) {
        return Err(Error::Disconnected);
    }
    Ok(average_distance_adj(&adj))
}

/// Assumes connectivity. Zero for a single node.
pub(crate) fn average_distance_adj(adj: &Adjacency) -> f64 {
    let n = adj.n();
    if n < 2 {
        return 0.0;
    }
    let mut dist = vec![u32::MAX; n];
    let mut queue = VecDeque::with_capacity(n);
    let mut total = 0u64;
    for s in 0..n as Node {
        dist.fill(u32::MAX);
        dist[s as usize] = 0;
        queue.push_back(s);
        while let Some(v) = queue.pop_front() {
            let dv = dist[v as usize];
            total += u64::from(dv);
            for &w in adj.neighbors(v) {
                if dist[w as usize] == u32::MAX {
                    dist[w as usize] = dv + 1;
                    queue.push_back(w);
                }
            }
        }
    }
    // every unordered pair was counted twice
    let pairs = (n as u64) * (n as u64 - 1);
    total as f64 / pairs as f64
}
