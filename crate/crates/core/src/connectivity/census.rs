//! Linear-time disconnection census from a single depth-first search.
//!
//! In the DFS tree every non-tree edge is a back edge from a node to one of
//! its ancestors. A back edge covers the tree edges on the path between its
//! endpoints. A tree edge is a bridge iff nothing covers it. Two non-bridge
//! edges form a two-edge cut iff they have identical cover sets, where a back
//! edge counts as covering itself; two back edges never do (the tree stays
//! spanning). Tree edges with equal nonempty cover sets always lie on one
//! root path, so the cut classes are chains.
//!
//! Per tree edge `(parent(v), v)` we keep
//! * `cnt(v)`: the number of covering back edges, from per-node back-edge
//!   in/out degrees summed over the subtree;
//! * `high(v)`: the depth of the deepest landing point among them, found by
//!   processing back edges by decreasing landing depth with a union-find
//!   that skips already-labeled tree edges.
//!
//! For `v` below `u`, `cover(v) ⊆ cover(u)` whenever `high(v) < depth(u)`,
//! so the two are equal iff additionally `cnt(u) == cnt(v)`. The nearest
//! such ancestor is found with one stack per `cnt` value during a preorder
//! sweep.
//!
//! Bridge pairs use the classic path counters: for each node, the number of
//! downward paths starting there made of one bridge (`b`), two bridges
//! (`bb`), three bridges (`bbb`), a non-bridge edge then a bridge (`nb`),
//! and bridge, non-bridge, bridge (`bnb`).

use super::{choose2, BridgeCensus, ConnectivityReport, PairCutCensus};
use crate::graph::{Adjacency, Graph, Node};

const NONE: u32 = u32::MAX;

/// Analyzes `graph` with the DFS rooted at node 0.
///
/// With `ignore_pair_cuts` only the bridge census is computed and `rho`
/// becomes `1 - mu_b`.
pub fn analyze(graph: &Graph, ignore_pair_cuts: bool) -> ConnectivityReport {
    Analyzer::new().analyze(graph, &graph.adjacency(), 0, ignore_pair_cuts)
}

/// Same as [`analyze`] with an explicit root and a prebuilt adjacency.
pub fn analyze_with(graph: &Graph, adj: &Adjacency, root: Node, ignore_pair_cuts: bool) -> ConnectivityReport {
    Analyzer::new().analyze(graph, adj, root, ignore_pair_cuts)
}

/// Working memory kept between analyses, so repeated calls on graphs of
/// similar size do not allocate.
#[derive(Debug, Default, Clone)]
pub struct Analyzer {
    pool32: Vec<Vec<u32>>,
    pool64: Vec<Vec<u64>>,
}

impl Analyzer {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn analyze(&mut self, graph: &Graph, adj: &Adjacency, root: Node, ignore_pair_cuts: bool) -> ConnectivityReport {
        let m = graph.m();
        let tree = SearchTree::build(self, adj, root);
        if !tree.spanning {
            tree.recycle(self);
            return ConnectivityReport::disconnected(m);
        }
        let cover = CoverCounts::build(self, &tree);
        let bridges = bridge_census(self, &tree, &cover);
        let pair_cuts = (!ignore_pair_cuts).then(|| pair_cut_census(self, graph, adj, &tree, &cover));
        cover.recycle(self);
        tree.recycle(self);
        ConnectivityReport {
            connected: true,
            m,
            bridges: Some(bridges),
            pair_cuts,
        }
    }

    fn take32(&mut self, len: usize, fill: u32) -> Vec<u32> {
        let mut v = self.pool32.pop().unwrap_or_default();
        v.clear();
        v.resize(len, fill);
        v
    }

    fn take64(&mut self, len: usize) -> Vec<u64> {
        let mut v = self.pool64.pop().unwrap_or_default();
        v.clear();
        v.resize(len, 0);
        v
    }

    fn give32(&mut self, v: Vec<u32>) {
        self.pool32.push(v);
    }

    fn give64(&mut self, v: Vec<u64>) {
        self.pool64.push(v);
    }
}

/// DFS tree plus back edges, grouped by origin and by target.
struct SearchTree {
    root: Node,
    spanning: bool,
    parent: Vec<u32>,
    depth: Vec<u32>,
    preorder: Vec<Node>,
    back_from: Vec<Node>,
    back_to: Vec<Node>,
    /// back edge ids grouped by origin
    out_offsets: Vec<u32>,
    out_edges: Vec<u32>,
    /// back edge ids grouped by target
    in_offsets: Vec<u32>,
    in_edges: Vec<u32>,
}

impl SearchTree {
    fn build(pool: &mut Analyzer, adj: &Adjacency, root: Node) -> Self {
        let n = adj.n();
        let mut parent = pool.take32(n, NONE);
        let mut depth = pool.take32(n, NONE);
        let mut next = pool.take32(n, 0);
        let mut preorder = pool.take32(0, 0);
        let mut back_from = pool.take32(0, 0);
        let mut back_to = pool.take32(0, 0);
        let mut stack = pool.take32(0, 0);

        depth[root as usize] = 0;
        preorder.push(root);
        stack.push(root);
        while let Some(&v) = stack.last() {
            let vi = v as usize;
            let nbrs = adj.neighbors(v);
            let i = next[vi] as usize;
            if i == nbrs.len() {
                stack.pop();
                continue;
            }
            next[vi] += 1;
            let w = nbrs[i];
            let wi = w as usize;
            if depth[wi] == NONE {
                parent[wi] = v;
                depth[wi] = depth[vi] + 1;
                preorder.push(w);
                stack.push(w);
            } else if w != parent[vi] && depth[wi] < depth[vi] {
                back_from.push(v);
                back_to.push(w);
            }
        }
        pool.give32(next);
        pool.give32(stack);

        let (out_offsets, out_edges) = group(pool, n, &back_from);
        let (in_offsets, in_edges) = group(pool, n, &back_to);
        Self {
            root,
            spanning: preorder.len() == n,
            parent,
            depth,
            preorder,
            back_from,
            back_to,
            out_offsets,
            out_edges,
            in_offsets,
            in_edges,
        }
    }

    fn recycle(self, pool: &mut Analyzer) {
        for v in [
            self.parent,
            self.depth,
            self.preorder,
            self.back_from,
            self.back_to,
            self.out_offsets,
            self.out_edges,
            self.in_offsets,
            self.in_edges,
        ] {
            pool.give32(v);
        }
    }

    #[inline]
    fn back_out(&self, v: Node) -> &[u32] {
        &self.out_edges[self.out_offsets[v as usize] as usize..self.out_offsets[v as usize + 1] as usize]
    }

    #[inline]
    fn back_in(&self, v: Node) -> &[u32] {
        &self.in_edges[self.in_offsets[v as usize] as usize..self.in_offsets[v as usize + 1] as usize]
    }
}

/// Counting sort of edge ids by one endpoint.
fn group(pool: &mut Analyzer, n: usize, key: &[Node]) -> (Vec<u32>, Vec<u32>) {
    let mut offsets = pool.take32(n + 1, 0);
    for &k in key {
        offsets[k as usize + 1] += 1;
    }
    for i in 0..n {
        offsets[i + 1] += offsets[i];
    }
    let mut fill = pool.take32(0, 0);
    fill.extend_from_slice(&offsets);
    let mut ids = pool.take32(key.len(), 0);
    for (id, &k) in key.iter().enumerate() {
        ids[fill[k as usize] as usize] = id as u32;
        fill[k as usize] += 1;
    }
    pool.give32(fill);
    (offsets, ids)
}

/// Per tree edge `(parent(v), v)`: how many back edges cover it, and which
/// covering back edge lands deepest.
struct CoverCounts {
    cnt: Vec<u32>,
    high: Vec<u32>,
    high_edge: Vec<u32>,
}

impl CoverCounts {
    fn build(pool: &mut Analyzer, tree: &SearchTree) -> Self {
        let n = tree.parent.len();
        // out-degree minus in-degree summed over the subtree; the wrapping
        // partial sums end up as the true nonnegative counts
        let mut cnt = pool.take32(n, 0);
        for (&x, &y) in tree.back_from.iter().zip(&tree.back_to) {
            cnt[x as usize] = cnt[x as usize].wrapping_add(1);
            cnt[y as usize] = cnt[y as usize].wrapping_sub(1);
        }
        for &v in tree.preorder.iter().rev() {
            if v != tree.root {
                let p = tree.parent[v as usize] as usize;
                cnt[p] = cnt[p].wrapping_add(cnt[v as usize]);
            }
        }
        cnt[tree.root as usize] = 0;

        // back edges by decreasing landing depth
        let max_depth = tree.depth.iter().copied().max().unwrap_or(0) as usize;
        let mut by_depth = pool.take32(max_depth + 2, 0);
        for &y in &tree.back_to {
            by_depth[max_depth - tree.depth[y as usize] as usize + 1] += 1;
        }
        for i in 0..=max_depth {
            by_depth[i + 1] += by_depth[i];
        }
        let mut sorted = pool.take32(tree.back_to.len(), 0);
        for (id, &y) in tree.back_to.iter().enumerate() {
            let slot = &mut by_depth[max_depth - tree.depth[y as usize] as usize];
            sorted[*slot as usize] = id as u32;
            *slot += 1;
        }

        // link[v] == v while (parent(v), v) is unlabeled
        let mut link = pool.take32(0, 0);
        link.extend(0..n as u32);
        let mut high = pool.take32(n, NONE);
        let mut high_edge = pool.take32(n, NONE);
        for &id in &sorted {
            let x = tree.back_from[id as usize];
            let y_depth = tree.depth[tree.back_to[id as usize] as usize];
            let mut v = find(&mut link, x);
            while tree.depth[v as usize] > y_depth {
                high[v as usize] = y_depth;
                high_edge[v as usize] = id;
                let p = tree.parent[v as usize];
                link[v as usize] = p;
                v = find(&mut link, p);
            }
        }
        pool.give32(by_depth);
        pool.give32(sorted);
        pool.give32(link);
        Self { cnt, high, high_edge }
    }

    fn recycle(self, pool: &mut Analyzer) {
        pool.give32(self.cnt);
        pool.give32(self.high);
        pool.give32(self.high_edge);
    }
}

fn find(link: &mut [u32], mut v: u32) -> u32 {
    while link[v as usize] != v {
        let up = link[link[v as usize] as usize];
        link[v as usize] = up;
        v = up;
    }
    v
}

fn bridge_census(pool: &mut Analyzer, tree: &SearchTree, cover: &CoverCounts) -> BridgeCensus {
    let n = tree.parent.len();
    let mut b = pool.take64(n);
    let mut bb = pool.take64(n);
    let mut bbb = pool.take64(n);
    let mut nb = pool.take64(n);
    let mut bnb = pool.take64(n);
    let mut census = BridgeCensus::default();

    // reverse preorder: a node concludes after all of its descendants
    for &k in tree.preorder.iter().rev() {
        let ki = k as usize;
        for &id in tree.back_in(k) {
            nb[ki] += b[tree.back_from[id as usize] as usize];
        }
        census.bridges += b[ki];
        census.adjacent_pairs += choose2(b[ki]) + bb[ki];
        census.neighbor_pairs += bb[ki] * b[ki].saturating_sub(1) + bbb[ki] + b[ki] * nb[ki] + bnb[ki];

        if k != tree.root {
            let j = tree.parent[ki] as usize;
            if cover.cnt[ki] == 0 {
                b[j] += 1;
                bb[j] += b[ki];
                bbb[j] += bb[ki];
                bnb[j] += nb[ki];
            } else {
                nb[j] += b[ki];
            }
        }
    }
    for v in [b, bb, bbb, nb, bnb] {
        pool.give64(v);
    }
    census
}

fn pair_cut_census(
    pool: &mut Analyzer,
    graph: &Graph,
    adj: &Adjacency,
    tree: &SearchTree,
    cover: &CoverCounts,
) -> PairCutCensus {
    let n = tree.parent.len();
    let root = tree.root;
    let cnt = &cover.cnt;
    let parent = &tree.parent;
    let in_class = |v: Node| v != root && cnt[v as usize] > 0;

    let max_depth = tree.depth.iter().copied().max().unwrap_or(0) as usize;
    let mut path = pool.take32(max_depth + 1, NONE);
    // one linked stack per cnt value: top[c], then below[v] downwards
    let mut top = pool.take32(tree.back_from.len() + 1, NONE);
    let mut below = pool.take32(n, NONE);
    let mut class = pool.take32(n, NONE);
    let mut census = PairCutCensus::default();

    // Preorder sweep: class assignment, plus neighbor pairs {(u, a), (p(w), w)}
    // joined by a back edge w -> u where a is u's child toward w.
    for &v in &tree.preorder {
        let vi = v as usize;
        path[tree.depth[vi] as usize] = v;
        if in_class(v) {
            let c = cnt[vi] as usize;
            while top[c] != NONE {
                let t = top[c];
                let d = tree.depth[t as usize];
                // path[] keeps stale entries below the current depth
                if d < tree.depth[vi] && path[d as usize] == t {
                    break;
                }
                top[c] = below[t as usize];
            }
            class[vi] = match top[c] {
                u if u != NONE && tree.depth[u as usize] > cover.high[vi] => class[u as usize],
                _ => v,
            };
            below[vi] = top[c];
            top[c] = v;
        }
        for &id in tree.back_out(v) {
            let u = tree.back_to[id as usize];
            let a = path[tree.depth[u as usize] as usize + 1];
            let pv = parent[vi];
            if in_class(a)
                && in_class(v)
                && class[a as usize] == class[vi]
                && pv != a
                // counted by the other joining edge {a, p(v)} below
                && !graph.has_edge(a, pv)
            {
                census.neighbor += 1;
            }
        }
    }
    pool.give32(path);
    pool.give32(top);
    pool.give32(below);

    let mut size = pool.take32(n, 0);
    for v in 0..n as Node {
        if in_class(v) {
            size[class[v as usize] as usize] += 1;
            let p = parent[v as usize];
            if in_class(p) && class[p as usize] == class[v as usize] {
                census.adjacent += 1;
            }
        }
    }
    for r in 0..n {
        if class[r] == r as u32 {
            // a single covering back edge is itself a member of the cut class
            let members = u64::from(size[r]) + u64::from(cnt[r] == 1);
            census.pair_cuts += choose2(members);
        }
    }
    pool.give32(size);

    // Tree edge with a uniquely covering back edge x -> y.
    for v in 0..n as Node {
        if in_class(v) && cnt[v as usize] == 1 {
            let id = cover.high_edge[v as usize] as usize;
            let (x, y) = (tree.back_from[id], tree.back_to[id]);
            let p = parent[v as usize];
            if v == x || p == y {
                census.adjacent += 1;
            } else if graph.has_edge(x, v) || graph.has_edge(y, p) {
                census.neighbor += 1;
            }
        }
    }

    // Neighbor pairs {(p(u), u), (w, c)} joined by an edge {u, w}, u above w.
    let mut marks = pool.take32(n, 0);
    let mut touched = pool.take32(0, 0);
    for w in 0..n as Node {
        if w == root {
            continue;
        }
        let up = std::iter::once(parent[w as usize]).chain(tree.back_out(w).iter().map(|&id| tree.back_to[id as usize]));
        for u in up {
            if in_class(u) {
                let k = class[u as usize];
                marks[k as usize] += 1;
                touched.push(k);
            }
        }
        if touched.is_empty() {
            continue;
        }
        for &c in adj.neighbors(w) {
            if parent[c as usize] == w && in_class(c) {
                census.neighbor += u64::from(marks[class[c as usize] as usize]);
            }
        }
        for k in touched.drain(..) {
            marks[k as usize] = 0;
        }
    }
    pool.give32(marks);
    pool.give32(touched);
    pool.give32(class);

    census
}
