//! Connectivity testing and the disconnection census behind `rho`, the
//! probability that one random switch attempt keeps the graph connected.
//!
//! A switch can only disconnect a connected graph when its two edges are a
//! nonadjacent, non-neighbor pair that is either two bridges or a two-edge
//! cut, and then exactly one of the two orientations disconnects. With `m`
//! edges there are `m(m-1)` equally likely (pair, orientation) choices, so
//!
//! ```text
//! mu_b = (C(B,2) - adjacent bridge pairs - neighbor bridge pairs) / m(m-1)
//! mu_c = (pair cuts - adjacent pair cuts - neighbor pair cuts)    / m(m-1)
//! rho  = 1 - mu_b - mu_c
//! ```

mod census;
mod oracle;

use std::fmt;

pub use census::{analyze, analyze_with, Analyzer};
pub use oracle::{oracle_report, EventCensus, OracleReport, ORACLE_MAX_EDGES, ORACLE_MAX_NODES};

use crate::graph::{Adjacency, Graph};

/// Exact rational `num / den`. A zero denominator (fewer than two edges)
/// reads as zero.
#[derive(Debug, Clone, Copy)]
pub struct Ratio {
    pub num: u128,
    pub den: u128,
}

impl Ratio {
    pub fn new(num: u128, den: u128) -> Self {
        Self { num, den }
    }

    pub fn to_f64(self) -> f64 {
        if self.den == 0 {
            0.0
        } else {
            self.num as f64 / self.den as f64
        }
    }

    fn normalized(self) -> (u128, u128) {
        if self.den == 0 || self.num == 0 {
            return (0, 1);
        }
        let g = gcd(self.num, self.den);
        (self.num / g, self.den / g)
    }
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl PartialEq for Ratio {
    fn eq(&self, other: &Self) -> bool {
        self.normalized() == other.normalized()
    }
}

impl Eq for Ratio {}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (n, d) = self.normalized();
        write!(f, "{n}/{d}")
    }
}

#[inline]
pub(crate) fn choose2(k: u64) -> u64 {
    k * k.saturating_sub(1) / 2
}

/// Bridge-pair census.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct BridgeCensus {
    pub bridges: u64,
    pub adjacent_pairs: u64,
    pub neighbor_pairs: u64,
}

impl BridgeCensus {
    /// Nonadjacent, non-neighbor bridge pairs: each has exactly one
    /// disconnecting orientation.
    pub fn disconnecting(&self) -> u64 {
        choose2(self.bridges) - self.adjacent_pairs - self.neighbor_pairs
    }
}

/// Two-edge-cut census. Pairs containing a bridge are excluded.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct PairCutCensus {
    pub pair_cuts: u64,
    pub adjacent: u64,
    pub neighbor: u64,
}

impl PairCutCensus {
    pub fn disconnecting(&self) -> u64 {
        self.pair_cuts - self.adjacent - self.neighbor
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConnectivityReport {
    pub connected: bool,
    pub m: usize,
    /// `None` when the graph is disconnected.
    pub bridges: Option<BridgeCensus>,
    /// `None` when disconnected or when pair cuts were skipped.
    pub pair_cuts: Option<PairCutCensus>,
}

impl ConnectivityReport {
    pub fn disconnected(m: usize) -> Self {
        Self {
            connected: false,
            m,
            bridges: None,
            pair_cuts: None,
        }
    }

    fn denominator(&self) -> u128 {
        let m = self.m as u128;
        m * m.saturating_sub(1)
    }

    pub fn mu_b(&self) -> Option<Ratio> {
        self.bridges
            .map(|b| Ratio::new(u128::from(b.disconnecting()), self.denominator()))
    }

    pub fn mu_c(&self) -> Option<Ratio> {
        self.pair_cuts
            .map(|c| Ratio::new(u128::from(c.disconnecting()), self.denominator()))
    }

    /// `1 - mu_b - mu_c`; pair cuts count as zero when they were skipped.
    pub fn rho(&self) -> Option<Ratio> {
        let b = self.bridges?;
        let c = self.pair_cuts.map_or(0, |c| c.disconnecting());
        let den = self.denominator();
        if den == 0 {
            return Some(Ratio::new(1, 1));
        }
        let bad = u128::from(b.disconnecting()) + u128::from(c);
        Some(Ratio::new(den - bad, den))
    }

    /// One-line JSON record with fixed field names.
    pub fn to_json(&self) -> String {
        let mut s = format!("{{\"connected\":{},\"m\":{}", self.connected, self.m);
        if let Some(b) = self.bridges {
            s += &format!(
                ",\"bridges\":{},\"adj_bridge_pairs\":{},\"nbr_bridge_pairs\":{}",
                b.bridges, b.adjacent_pairs, b.neighbor_pairs
            );
            match self.pair_cuts {
                Some(c) => {
                    s += &format!(
                        ",\"pair_cuts\":{},\"adj_pair_cuts\":{},\"nbr_pair_cuts\":{}",
                        c.pair_cuts, c.adjacent, c.neighbor
                    )
                }
                None => s += ",\"pair_cuts\":null,\"adj_pair_cuts\":null,\"nbr_pair_cuts\":null",
            }
            let mu_c = self
                .mu_c()
                .map_or_else(|| "null".to_string(), |r| r.to_f64().to_string());
            s += &format!(
                ",\"mu_b\":{},\"mu_c\":{},\"rho\":{}",
                self.mu_b().expect("connected").to_f64(),
                mu_c,
                self.rho().expect("connected").to_f64()
            );
        }
        s.push('}');
        s
    }
}

/// Plain O(n + m) connectivity test.
pub fn is_connected(graph: &Graph) -> bool {
    is_connected_adj(&graph.adjacency())
}

pub(crate) fn is_connected_adj(adj: &Adjacency) -> bool {
    let n = adj.n();
    if n <= 1 {
        return true;
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0u32];
    seen[0] = true;
    let mut reached = 1;
    while let Some(v) = stack.pop() {
        for &w in adj.neighbors(v) {
            if !seen[w as usize] {
                seen[w as usize] = true;
                reached += 1;
                stack.push(w);
            }
        }
    }
    reached == n
}
