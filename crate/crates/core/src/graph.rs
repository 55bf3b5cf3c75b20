//! Simple undirected graph with an indexed edge list and the edge switch.
//!
//! Edges live in a flat array so a uniformly random pair of edges is two
//! index draws. A hash index over normalized endpoint pairs gives expected
//! O(1) membership, which makes a switch O(1) expected time in Θ(m) space.
//! Neighbor lists are not maintained under switches; [`Graph::adjacency`]
//! builds a compressed snapshot in O(n + m) when a traversal needs one.

use std::fmt;
use std::io::{BufRead, Write};

use rand::Rng;
use rustc_hash::FxHashSet;

use crate::error::{Error, Result};

pub type Node = u32;

/// Undirected edge stored with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub u: Node,
    pub v: Node,
}

impl Edge {
    /// Normalizes endpoint order. Panics on a self-loop.
    pub fn new(a: Node, b: Node) -> Self {
        assert_ne!(a, b, "self-loop");
        if a < b {
            Edge { u: a, v: b }
        } else {
            Edge { u: b, v: a }
        }
    }

    #[inline]
    fn key(self) -> u64 {
        (u64::from(self.u) << 32) | u64::from(self.v)
    }

    #[inline]
    pub fn shares_node(self, other: Edge) -> bool {
        self.u == other.u || self.u == other.v || self.v == other.u || self.v == other.v
    }

    #[inline]
    pub fn other(self, x: Node) -> Node {
        if x == self.u {
            self.v
        } else {
            self.u
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.u, self.v)
    }
}

#[inline]
fn key(a: Node, b: Node) -> u64 {
    if a < b {
        (u64::from(a) << 32) | u64::from(b)
    } else {
        (u64::from(b) << 32) | u64::from(a)
    }
}

/// Which replacement pair a switch installs. With slots holding `(j, k)`
/// and `(x, y)`, `A` installs `(j, x), (k, y)` and `B` installs
/// `(j, y), (k, x)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Orientation {
    A,
    B,
}

/// The unit of undoing: two slots, what they held, and what they hold now.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SwitchRecord {
    pub slots: [usize; 2],
    pub removed: [Edge; 2],
    pub added: [Edge; 2],
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SwitchOutcome {
    /// The two edges share a node; nothing changed.
    Adjacent,
    /// A replacement edge already exists; nothing changed.
    Blocked,
    Applied(SwitchRecord),
}

impl SwitchOutcome {
    pub fn record(&self) -> Option<&SwitchRecord> {
        match self {
            SwitchOutcome::Applied(r) => Some(r),
            _ => None,
        }
    }

    pub fn is_applied(&self) -> bool {
        matches!(self, SwitchOutcome::Applied(_))
    }
}

/// One random switch attempt: the slots drawn, the orientation, and what
/// happened.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Attempt {
    pub slots: (usize, usize),
    pub orientation: Orientation,
    pub outcome: SwitchOutcome,
}

/// Applied switches since the last checkpoint, in order.
#[derive(Debug, Clone, Default)]
pub struct SwitchJournal {
    records: Vec<SwitchRecord>,
}

impl SwitchJournal {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, record: SwitchRecord) {
        self.records.push(record);
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub fn records(&self) -> &[SwitchRecord] {
        &self.records
    }

    /// Forget the records, committing the switches.
    pub fn clear(&mut self) {
        self.records.clear();
    }
}

#[derive(Debug, Clone)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    index: FxHashSet<u64>,
}

impl PartialEq for Graph {
    /// Equality of node count and edge *layout* (slot order included).
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.edges == other.edges
    }
}

impl Eq for Graph {}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Self {
            n,
            edges: Vec::new(),
            index: FxHashSet::default(),
        }
    }

    pub fn from_edges<I>(n: usize, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Node, Node)>,
    {
        let mut g = Self::empty(n);
        for (a, b) in pairs {
            g.add_edge(a, b)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, a: Node, b: Node) -> Result<usize> {
        if a as usize >= self.n || b as usize >= self.n {
            return Err(Error::NodeOutOfRange { u: a, v: b, n: self.n });
        }
        if a == b {
            return Err(Error::SelfLoop(a));
        }
        if !self.index.insert(key(a, b)) {
            let e = Edge::new(a, b);
            return Err(Error::DuplicateEdge(e.u, e.v));
        }
        self.edges.push(Edge::new(a, b));
        Ok(self.edges.len() - 1)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    #[inline]
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    #[inline]
    pub fn edge(&self, index: usize) -> Edge {
        self.edges[index]
    }

    #[inline]
    pub fn has_edge(&self, a: Node, b: Node) -> bool {
        a != b && self.index.contains(&key(a, b))
    }

    pub fn degrees(&self) -> Vec<u32> {
        let mut deg = vec![0u32; self.n];
        for e in &self.edges {
            deg[e.u as usize] += 1;
            deg[e.v as usize] += 1;
        }
        deg
    }

    /// Node degrees sorted nonincreasingly.
    pub fn degree_sequence(&self) -> Vec<u32> {
        let mut deg = self.degrees();
        deg.sort_unstable_by(|a, b| b.cmp(a));
        deg
    }

    /// Sorted edge set, independent of slot layout.
    pub fn edge_set(&self) -> Vec<Edge> {
        let mut e = self.edges.clone();
        e.sort_unstable();
        e
    }

    pub fn adjacency(&self) -> Adjacency {
        Adjacency::build(self.n, &self.edges)
    }

    /// Switches the edges in slots `first` and `second`.
    pub fn switch(
        &mut self,
        first: usize,
        second: usize,
        orientation: Orientation,
    ) -> Result<SwitchOutcome> {
        let m = self.m();
        for index in [first, second] {
            if index >= m {
                return Err(Error::EdgeIndexOutOfRange { index, m });
            }
        }
        if first == second {
            return Err(Error::SameEdge);
        }
        Ok(self.switch_unchecked(first, second, orientation))
    }

    fn switch_unchecked(&mut self, first: usize, second: usize, orientation: Orientation) -> SwitchOutcome {
        let e1 = self.edges[first];
        let e2 = self.edges[second];
        if e1.shares_node(e2) {
            return SwitchOutcome::Adjacent;
        }
        let (j, k) = (e1.u, e1.v);
        let (x, y) = (e2.u, e2.v);
        let (a1, a2) = match orientation {
            Orientation::A => ((j, x), (k, y)),
            Orientation::B => ((j, y), (k, x)),
        };
        if self.has_edge(a1.0, a1.1) || self.has_edge(a2.0, a2.1) {
            return SwitchOutcome::Blocked;
        }
        let n1 = Edge::new(a1.0, a1.1);
        let n2 = Edge::new(a2.0, a2.1);
        self.index.remove(&e1.key());
        self.index.remove(&e2.key());
        self.index.insert(n1.key());
        self.index.insert(n2.key());
        self.edges[first] = n1;
        self.edges[second] = n2;
        SwitchOutcome::Applied(SwitchRecord {
            slots: [first, second],
            removed: [e1, e2],
            added: [n1, n2],
        })
    }

    /// Draws an unordered pair of distinct slots and an orientation, each of
    /// the `m(m-1)` combinations with equal probability, and switches.
    pub fn attempt_switch<R: Rng + ?Sized>(&mut self, rng: &mut R) -> Result<Attempt> {
        let m = self.m();
        if m < 2 {
            return Err(Error::TooFewEdgesToSwitch(m));
        }
        let a = rng.random_range(0..m);
        let mut b = rng.random_range(0..m - 1);
        if b >= a {
            b += 1;
        }
        let (first, second) = if a < b { (a, b) } else { (b, a) };
        let orientation = if rng.random::<bool>() { Orientation::A } else { Orientation::B };
        let outcome = self.switch_unchecked(first, second, orientation);
        Ok(Attempt {
            slots: (first, second),
            orientation,
            outcome,
        })
    }

    /// Reverts one applied switch. Records must be undone newest first.
    pub fn undo(&mut self, record: &SwitchRecord) {
        for i in 0..2 {
            debug_assert_eq!(self.edges[record.slots[i]], record.added[i]);
            self.index.remove(&record.added[i].key());
        }
        for i in 0..2 {
            self.index.insert(record.removed[i].key());
            self.edges[record.slots[i]] = record.removed[i];
        }
    }

    /// Undoes every journaled switch in reverse order and empties the journal.
    pub fn rollback(&mut self, journal: &mut SwitchJournal) {
        while let Some(record) = journal.records.pop() {
            self.undo(&record);
        }
    }

    /// Reads the edge-list format: a header `n m`, then `m` lines `u v`.
    pub fn read_edge_list<R: BufRead>(reader: R) -> Result<Self> {
        let mut lines = reader.lines().enumerate().filter_map(|(i, l)| match l {
            Ok(s) if s.trim().is_empty() => None,
            other => Some((i + 1, other)),
        });
        let (lineno, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            msg: "missing header".into(),
        })?;
        let header = header?;
        let (n, m) = parse_pair::<usize>(&header, lineno)?;
        let mut g = Self::empty(n);
        for _ in 0..m {
            let (lineno, line) = lines.next().ok_or(Error::Parse {
                line: 0,
                msg: format!("expected {m} edges"),
            })?;
            let (a, b) = parse_pair::<Node>(&line?, lineno)?;
            g.add_edge(a, b).map_err(|e| Error::Parse {
                line: lineno,
                msg: e.to_string(),
            })?;
        }
        if let Some((lineno, _)) = lines.next() {
            return Err(Error::Parse {
                line: lineno,
                msg: format!("more than the declared {m} edges"),
            });
        }
        Ok(g)
    }

    pub fn write_edge_list<W: Write>(&self, mut out: W) -> Result<()> {
        writeln!(out, "{} {}", self.n, self.m())?;
        for e in &self.edges {
            writeln!(out, "{} {}", e.u, e.v)?;
        }
        Ok(())
    }
}

fn parse_pair<T: std::str::FromStr>(line: &str, lineno: usize) -> Result<(T, T)> {
    let mut it = line.split_whitespace();
    let bad = || Error::Parse {
        line: lineno,
        msg: format!("expected two integers, got {line:?}"),
    };
    let a = it.next().and_then(|s| s.parse().ok()).ok_or_else(bad)?;
    let b = it.next().and_then(|s| s.parse().ok()).ok_or_else(bad)?;
    if it.next().is_some() {
        return Err(bad());
    }
    Ok((a, b))
}

/// Compressed neighbor lists. `slots(v)` parallels `neighbors(v)` with the
/// edge-list index of each incident edge.
#[derive(Debug, Clone)]
pub struct Adjacency {
    offsets: Vec<usize>,
    targets: Vec<Node>,
    slots: Vec<u32>,
}

impl Adjacency {
    pub fn build(n: usize, edges: &[Edge]) -> Self {
        let mut offsets = vec![0usize; n + 1];
        for e in edges {
            offsets[e.u as usize + 1] += 1;
            offsets[e.v as usize + 1] += 1;
        }
        for i in 0..n {
            offsets[i + 1] += offsets[i];
        }
        let mut fill = offsets.clone();
        let mut targets = vec![0; 2 * edges.len()];
        let mut slots = vec![0; 2 * edges.len()];
        for (i, e) in edges.iter().enumerate() {
            let p = &mut fill[e.u as usize];
            targets[*p] = e.v;
            slots[*p] = i as u32;
            *p += 1;
            let p = &mut fill[e.v as usize];
            targets[*p] = e.u;
            slots[*p] = i as u32;
            *p += 1;
        }
        Self { offsets, targets, slots }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.offsets.len() - 1
    }

    #[inline]
    pub fn neighbors(&self, v: Node) -> &[Node] {
        &self.targets[self.offsets[v as usize]..self.offsets[v as usize + 1]]
    }

    #[inline]
    pub fn slots(&self, v: Node) -> &[u32] {
        &self.slots[self.offsets[v as usize]..self.offsets[v as usize + 1]]
    }

    #[inline]
    pub fn degree(&self, v: Node) -> usize {
        self.offsets[v as usize + 1] - self.offsets[v as usize]
    }
}
