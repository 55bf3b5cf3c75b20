//! Deterministic construction of a connected starting graph.

use std::collections::BTreeSet;

use crate::degseq::{is_realizable, DegreeSequence};
use crate::error::{Error, Result};
use crate::graph::{Adjacency, Graph, Node, Orientation, SwitchOutcome};

/// Havel-Hakimi realization. Node `j` receives degree `degrees()[j]`.
///
/// Repeatedly takes the node with the largest residual degree and joins it
/// to the nodes with the next largest residuals; ties go to the lowest
/// node index. The result may be disconnected.
pub fn havel_hakimi(seq: &DegreeSequence) -> Result<Graph> {
    let d = seq.degrees();
    let n = d.len();
    let max = d[0] as usize;
    let mut residual: Vec<usize> = d.iter().map(|&x| x as usize).collect();
    // buckets[r] holds the nodes whose residual is r, by index
    let mut buckets: Vec<BTreeSet<Node>> = vec![BTreeSet::new(); max + 1];
    for (v, &r) in residual.iter().enumerate() {
        buckets[r].insert(v as Node);
    }

    let mut g = Graph::empty(n);
    let mut targets = Vec::with_capacity(max);
    let mut top = max;
    loop {
        while top > 0 && buckets[top].is_empty() {
            top -= 1;
        }
        if top == 0 {
            break;
        }
        let k = *buckets[top].iter().next().expect("nonempty");
        let need = top;
        buckets[top].remove(&k);
        residual[k as usize] = 0;
        buckets[0].insert(k);

        targets.clear();
        'collect: for r in (1..=top).rev() {
            for &v in &buckets[r] {
                targets.push(v);
                if targets.len() == need {
                    break 'collect;
                }
            }
        }
        if targets.len() < need {
            return Err(Error::NotRealizable(is_realizable(seq)));
        }
        for &v in &targets {
            let r = residual[v as usize];
            buckets[r].remove(&v);
            buckets[r - 1].insert(v);
            residual[v as usize] = r - 1;
            g.add_edge(k, v)?;
        }
    }
    Ok(g)
}

/// Component label per node.
pub(crate) fn components(adj: &Adjacency) -> (Vec<u32>, usize) {
    let n = adj.n();
    let mut label = vec![u32::MAX; n];
    let mut count = 0;
    let mut stack = Vec::new();
    for s in 0..n {
        if label[s] != u32::MAX {
            continue;
        }
        label[s] = count as u32;
        stack.push(s as Node);
        while let Some(v) = stack.pop() {
            for &w in adj.neighbors(v) {
                if label[w as usize] == u32::MAX {
                    label[w as usize] = count as u32;
                    stack.push(w);
                }
            }
        }
        count += 1;
    }
    (label, count)
}

/// Marks every bridge by edge slot, using DFS discovery times and low links.
pub fn find_bridges(adj: &Adjacency, m: usize) -> Vec<bool> {
    let n = adj.n();
    let mut is_bridge = vec![false; m];
    let mut disc = vec![u32::MAX; n];
    let mut low = vec![0u32; n];
    let mut parent_slot = vec![u32::MAX; n];
    let mut next = vec![0usize; n];
    let mut time = 0u32;
    let mut stack: Vec<Node> = Vec::new();

    for s in 0..n as Node {
        if disc[s as usize] != u32::MAX {
            continue;
        }
        disc[s as usize] = time;
        low[s as usize] = time;
        time += 1;
        stack.push(s);
        while let Some(&v) = stack.last() {
            let vi = v as usize;
            let i = next[vi];
            if i < adj.degree(v) {
                next[vi] += 1;
                let w = adj.neighbors(v)[i];
                let slot = adj.slots(v)[i];
                if slot == parent_slot[vi] {
                    continue;
                }
                let wi = w as usize;
                if disc[wi] == u32::MAX {
                    disc[wi] = time;
                    low[wi] = time;
                    time += 1;
                    parent_slot[wi] = slot;
                    stack.push(w);
                } else {
                    low[vi] = low[vi].min(disc[wi]);
                }
            } else {
                stack.pop();
                if let Some(&p) = stack.last() {
                    let pi = p as usize;
                    low[pi] = low[pi].min(low[vi]);
                    if low[vi] > disc[pi] {
                        is_bridge[parent_slot[vi] as usize] = true;
                    }
                }
            }
        }
    }
    is_bridge
}

/// Merges components with switches until the graph is connected. Returns
/// the number of merging switches performed.
///
/// Each round removes a non-bridge edge `(j, k)` of some component and an
/// edge `(x, y)` of another, and installs `(j, x), (k, y)`. The first
/// component stays connected without `(j, k)` and both halves of the second
/// attach to it, so the component count drops by one.
pub fn make_connected(graph: &mut Graph) -> Result<usize> {
    let mut merges = 0;
    loop {
        let adj = graph.adjacency();
        let (label, count) = components(&adj);
        if count <= 1 {
            return Ok(merges);
        }
        let is_bridge = find_bridges(&adj, graph.m());
        let cycle_slot = is_bridge.iter().position(|&b| !b).ok_or(Error::NoCycle)?;
        let cycle_comp = label[graph.edge(cycle_slot).u as usize];
        let other_slot = graph
            .edges()
            .iter()
            .position(|e| label[e.u as usize] != cycle_comp)
            .ok_or(Error::NoCycle)?;
        match graph.switch(cycle_slot, other_slot, Orientation::A)? {
            SwitchOutcome::Applied(_) => merges += 1,
            other => unreachable!("cross-component switch cannot be {other:?}"),
        }
    }
}

/// Havel-Hakimi followed by component merging; a pure function of `seq`.
pub fn initial_graph(seq: &DegreeSequence) -> Result<Graph> {
    let verdict = is_realizable(seq);
    if !verdict.is_realizable() {
        return Err(Error::NotRealizable(verdict));
    }
    let mut g = havel_hakimi(seq)?;
    make_connected(&mut g)?;
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::connectivity::is_connected;
    use crate::degseq::{sample_realizable, PowerLawSpec, DEFAULT_ATTEMPT_CAP};
    use crate::graph::Edge;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn seq(d: &[u32]) -> DegreeSequence {
        DegreeSequence::new(d.to_vec()).unwrap()
    }

    fn edges(pairs: &[(u32, u32)]) -> Vec<Edge> {
        let mut v: Vec<Edge> = pairs.iter().map(|&(a, b)| Edge::new(a, b)).collect();
        v.sort();
        v
    }

    #[test]
    fn havel_hakimi_traces() {
        assert_eq!(havel_hakimi(&seq(&[2, 2, 2])).unwrap().edge_set(), edges(&[(0, 1), (0, 2), (1, 2)]));
        assert_eq!(havel_hakimi(&seq(&[3, 1, 1, 1])).unwrap().edge_set(), edges(&[(0, 1), (0, 2), (0, 3)]));
        let two = havel_hakimi(&seq(&[2; 6])).unwrap();
        assert_eq!(
            two.edge_set(),
            edges(&[(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)])
        );
        assert!(!is_connected(&two));
    }

    #[test]
    fn merging_two_triangles() {
        let mut g = havel_hakimi(&seq(&[2; 6])).unwrap();
        assert_eq!(make_connected(&mut g).unwrap(), 1);
        assert_eq!(
            g.edge_set(),
            edges(&[(0, 3), (1, 4), (0, 2), (1, 2), (3, 5), (4, 5)])
        );
        assert!(is_connected(&g));
        assert_eq!(g.degrees(), vec![2; 6]);
    }

    #[test]
    fn three_triangles_need_two_merges() {
        let mut g = Graph::from_edges(
            9,
            [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (6, 7), (7, 8), (6, 8)],
        )
        .unwrap();
        assert_eq!(make_connected(&mut g).unwrap(), 2);
        assert!(is_connected(&g));
    }

    #[test]
    fn connected_input_untouched() {
        let mut g = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        let before = g.clone();
        assert_eq!(make_connected(&mut g).unwrap(), 0);
        assert_eq!(g, before);
    }

    #[test]
    fn forest_has_no_cycle() {
        let mut g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert!(matches!(make_connected(&mut g), Err(Error::NoCycle)));
    }

    #[test]
    fn initial_graph_examples() {
        let c6 = initial_graph(&seq(&[2; 6])).unwrap();
        assert!(is_connected(&c6));
        assert_eq!(c6.degrees(), vec![2; 6]);
        assert_eq!(initial_graph(&seq(&[1, 1])).unwrap().edge_set(), edges(&[(0, 1)]));
        assert_eq!(initial_graph(&seq(&[3, 1, 1, 1])).unwrap().edge_set(), edges(&[(0, 1), (0, 2), (0, 3)]));
        assert!(matches!(initial_graph(&seq(&[3, 3, 1, 1])), Err(Error::NotRealizable(_))));
    }

    #[test]
    fn bridge_finder_matches_deletion() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..200 {
            let n = rng.random_range(3..10u32);
            let mut g = Graph::empty(n as usize);
            for _ in 0..rng.random_range(1..15) {
                let (a, b) = (rng.random_range(0..n), rng.random_range(0..n));
                let _ = g.add_edge(a, b);
            }
            let adj = g.adjacency();
            let found = find_bridges(&adj, g.m());
            let (_, base) = components(&adj);
            for i in 0..g.m() {
                let rest: Vec<_> = g.edges().iter().enumerate().filter(|(j, _)| *j != i).map(|(_, e)| *e).collect();
                let (_, c) = components(&Adjacency::build(g.n(), &rest));
                assert_eq!(found[i], c > base);
            }
        }
    }

    use rand::Rng;

    #[test]
    fn power_law_sequences_realize_exactly() {
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        for (tau, n) in [(2.0, 1000), (2.4, 1000), (2.8, 300), (2.2, 50)] {
            let spec = PowerLawSpec::new(tau, n).unwrap();
            for _ in 0..3 {
                let (d, _) = sample_realizable(&spec, &mut rng, DEFAULT_ATTEMPT_CAP).unwrap();
                let g = initial_graph(&d).unwrap();
                assert!(is_connected(&g));
                assert_eq!(g.degree_sequence(), d.degrees());
                assert_eq!(initial_graph(&d).unwrap(), g);
            }
        }
    }

    proptest! {
        #[test]
        fn realizable_sequences_build(d in prop::collection::vec(1u32..8, 2..16)) {
            let s = DegreeSequence::new(d).unwrap();
            if is_realizable(&s).is_realizable() {
                let g = initial_graph(&s).unwrap();
                prop_assert!(is_connected(&g));
                prop_assert_eq!(g.degree_sequence(), s.degrees().to_vec());
            }
        }
    }
}
