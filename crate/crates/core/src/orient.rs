//! Turning undirected graphs into energy graphs.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{Arc, EnergyGraph, UndirectedGraph, VertexId};

/// Largest vertex count accepted by [`enumerate_acyclic_orientations`].
pub const MAX_ENUMERATION_VERTICES: usize = 12;

/// Breadth-first relabeling from `start_set`, orienting every edge from the
/// lower new label to the higher one.
///
/// Start vertices take labels `1..=ℓ` in ascending original order and become
/// exactly the sources of the result. Ties between newly discovered
/// neighbours break by ascending original index.
pub fn orient_topologically(g: &UndirectedGraph, start_set: &[usize]) -> Result<EnergyGraph> {
    orient_with_labels(g, start_set).map(|(graph, _)| graph)
}

/// Like [`orient_topologically`], also returning `labels[v - 1]`, the new label of original vertex `v`.
pub fn orient_with_labels(
    g: &UndirectedGraph,
    start_set: &[usize],
) -> Result<(EnergyGraph, Vec<VertexId>)> {
    let n = g.n();
    let mut start: Vec<usize> = start_set.to_vec();
    start.sort_unstable();
    start.dedup();
    if (n > 0 && start.is_empty()) || start.iter().any(|&v| v == 0 || v > n) {
        return Err(Error::InvalidStartSet { n });
    }
    for (i, &a) in start.iter().enumerate() {
        if let Some(&b) = start[i + 1..].iter().find(|&&b| g.has_edge(a, b)) {
            return Err(Error::StartSetNotIndependent(
                VertexId::from_slot(a - 1),
                VertexId::from_slot(b - 1),
            ));
        }
    }

    let mut label = vec![0usize; n];
    let mut next = 1;
    let mut queue = VecDeque::new();
    for &s in &start {
        label[s - 1] = next;
        next += 1;
        queue.push_back(s);
    }
    while let Some(v) = queue.pop_front() {
        for &w in g.neighbors(v) {
            if label[w - 1] == 0 {
                label[w - 1] = next;
                next += 1;
                queue.push_back(w);
            }
        }
    }
    let uncovered = label.iter().filter(|&&l| l == 0).count();
    if uncovered > 0 {
        return Err(Error::UncoveredVertices { count: uncovered });
    }

    let graph = relabel_edges(n, g.edges(), |v| label[v - 1]);
    Ok((
        graph,
        label
            .into_iter()
            .map(|l| VertexId::from_slot(l - 1))
            .collect(),
    ))
}

fn relabel_edges(
    n: usize,
    edges: &[(usize, usize)],
    label: impl Fn(usize) -> usize,
) -> EnergyGraph {
    let mut arcs: Vec<Arc> = edges
        .iter()
        .map(|&(a, b)| {
            let (la, lb) = (label(a), label(b));
            Arc::new(la.min(lb), la.max(lb))
        })
        .collect();
    arcs.sort_unstable();
    EnergyGraph::from_sorted_unchecked(n, arcs)
}

/// Lazily yields every acyclic orientation of `g` exactly once.
///
/// Each orientation is relabeled into energy-graph form by a topological
/// sort that prefers the smallest original index. Two different
/// orientations may produce equal relabeled graphs; they are still yielded
/// separately, since deduplication is by arc set on the original vertices.
pub fn enumerate_acyclic_orientations(g: &UndirectedGraph) -> Result<AcyclicOrientations> {
    if g.n() > MAX_ENUMERATION_VERTICES {
        return Err(Error::SizeGuard {
            n: g.n(),
            limit: MAX_ENUMERATION_VERTICES,
        });
    }
    Ok(AcyclicOrientations::new(g))
}

/// Backtracking search over edge directions with an incremental reachability check.
#[derive(Debug, Clone)]
pub struct AcyclicOrientations {
    n: usize,
    edges: Vec<(usize, usize)>,
    // out[v] bitmask over 0-based slots
    out: Vec<u32>,
    // per edge: 0 = untried, 1 = forward tried, 2 = both tried
    tried: Vec<u8>,
    forward: Vec<bool>,
    depth: usize,
    done: bool,
}

impl AcyclicOrientations {
    fn new(g: &UndirectedGraph) -> Self {
        let m = g.edge_count();
        Self {
            n: g.n(),
            edges: g.edges().iter().map(|&(a, b)| (a - 1, b - 1)).collect(),
            out: vec![0; g.n()],
            tried: vec![0; m],
            forward: vec![true; m],
            depth: 0,
            done: false,
        }
    }

    fn reaches(&self, from: usize, to: usize) -> bool {
        let mut seen = 1u32 << from;
        let mut frontier = 1u32 << from;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = self.out[v] & !seen;
            if fresh & (1 << to) != 0 {
                return true;
            }
            seen |= fresh;
            frontier |= fresh;
        }
        from == to
    }

    fn directed(&self, e: usize) -> (usize, usize) {
        let (a, b) = self.edges[e];
        if self.forward[e] {
            (a, b)
        } else {
            (b, a)
        }
    }

    fn current_graph(&self) -> EnergyGraph {
        // Kahn's algorithm, smallest original slot first.
        let mut indeg = vec![0usize; self.n];
        for v in 0..self.n {
            let mut mask = self.out[v];
            while mask != 0 {
                indeg[mask.trailing_zeros() as usize] += 1;
                mask &= mask - 1;
            }
        }
        let mut label = vec![0usize; self.n];
        let mut ready: std::collections::BTreeSet<usize> =
            (0..self.n).filter(|&v| indeg[v] == 0).collect();
        let mut next = 1;
        while let Some(v) = ready.pop_first() {
            label[v] = next;
            next += 1;
            let mut mask = self.out[v];
            while mask != 0 {
                let w = mask.trailing_zeros() as usize;
                mask &= mask - 1;
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    ready.insert(w);
                }
            }
        }
        let directed: Vec<(usize, usize)> =
            (0..self.edges.len()).map(|e| self.directed(e)).collect();
        let mut arcs: Vec<Arc> = directed
            .iter()
            .map(|&(t, h)| Arc::new(label[t], label[h]))
            .collect();
        arcs.sort_unstable();
        EnergyGraph::from_sorted_unchecked(self.n, arcs)
    }
}

impl Iterator for AcyclicOrientations {
    type Item = EnergyGraph;

    fn next(&mut self) -> Option<EnergyGraph> {
        if self.done {
            return None;
        }
        let m = self.edges.len();
        if m == 0 {
            self.done = true;
            return Some(self.current_graph());
        }
        // Resume: after a yield, depth == m and the last edge needs its next choice.
        if self.depth == m {
            self.depth -= 1;
        }
        loop {
            let e = self.depth;
            if self.tried[e] > 0 {
                let (t, h) = self.directed(e);
                self.out[t] &= !(1 << h);
            }
            let mut placed = false;
            while self.tried[e] < 2 {
                self.forward[e] = self.tried[e] == 0;
                self.tried[e] += 1;
                let (t, h) = self.directed(e);
                if !self.reaches(h, t) {
                    self.out[t] |= 1 << h;
                    placed = true;
                    break;
                }
            }
            if placed {
                if e + 1 == m {
                    self.depth = m;
                    return Some(self.current_graph());
                }
                self.depth += 1;
            } else {
                self.tried[e] = 0;
                if e == 0 {
                    self.done = true;
                    return None;
                }
                self.depth -= 1;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_force_count(g: &UndirectedGraph) -> usize {
        let m = g.edge_count();
        (0u32..1 << m)
            .filter(|mask| {
                let arcs: Vec<(usize, usize)> = g
                    .edges()
                    .iter()
                    .enumerate()
                    .map(|(i, &(a, b))| if mask >> i & 1 == 1 { (a, b) } else { (b, a) })
                    .collect();
                is_acyclic(g.n(), &arcs)
            })
            .count()
    }

    fn is_acyclic(n: usize, arcs: &[(usize, usize)]) -> bool {
        let mut indeg = vec![0; n + 1];
        for &(_, h) in arcs {
            indeg[h] += 1;
        }
        let mut stack: Vec<usize> = (1..=n).filter(|&v| indeg[v] == 0).collect();
        let mut seen = 0;
        while let Some(v) = stack.pop() {
            seen += 1;
            for &(t, h) in arcs {
                if t == v {
                    indeg[h] -= 1;
                    if indeg[h] == 0 {
                        stack.push(h);
                    }
                }
            }
        }
        seen == n
    }

    #[test]
    fn star_from_centre_points_outward() {
        let g = orient_topologically(&UndirectedGraph::star(3), &[1]).unwrap();
        assert_eq!(g.sources(), vec![VertexId::from_slot(0)]);
        assert_eq!(g.out_degree(VertexId::from_slot(0)), 3);
    }

    #[test]
    fn path_from_an_end() {
        let g = orient_topologically(&UndirectedGraph::path(3), &[1]).unwrap();
        assert_eq!(g.arcs(), &[Arc::new(1, 2), Arc::new(2, 3)]);
    }

    #[test]
    fn odd_cycle_has_one_collision_vertex() {
        let g = orient_topologically(&UndirectedGraph::cycle(5), &[1]).unwrap();
        let twos: Vec<_> = g.vertices().filter(|&v| g.in_degree(v) == 2).collect();
        assert_eq!(twos, vec![VertexId::from_slot(4)]);
        assert_eq!(
            g.arcs(),
            &[
                Arc::new(1, 2),
                Arc::new(1, 3),
                Arc::new(2, 4),
                Arc::new(3, 5),
                Arc::new(4, 5)
            ]
        );
    }

    #[test]
    fn start_set_must_be_independent() {
        let err = orient_topologically(&UndirectedGraph::path(3), &[1, 2]).unwrap_err();
        assert!(matches!(err, Error::StartSetNotIndependent(_, _)));
    }

    #[test]
    fn start_set_must_cover_every_component() {
        let g = UndirectedGraph::new(4, [(1, 2), (3, 4)]).unwrap();
        assert!(matches!(
            orient_topologically(&g, &[1]),
            Err(Error::UncoveredVertices { count: 2 })
        ));
        let both = orient_topologically(&g, &[1, 3]).unwrap();
        assert_eq!(both.sources().len(), 2);
    }

    #[test]
    fn multiple_starts_become_sources() {
        let g = orient_topologically(&UndirectedGraph::star(4), &[2, 3, 5]).unwrap();
        assert_eq!(g.sources().len(), 3);
    }

    #[test]
    fn orientation_counts() {
        let count = |g: &UndirectedGraph| enumerate_acyclic_orientations(g).unwrap().count();
        assert_eq!(count(&UndirectedGraph::complete(3)), 6);
        assert_eq!(count(&UndirectedGraph::path(2)), 2);
        assert_eq!(brute_force_count(&UndirectedGraph::cycle(4)), 14);
        assert_eq!(count(&UndirectedGraph::cycle(4)), 14);
        assert_eq!(count(&UndirectedGraph::complete(5)), 120);
        assert_eq!(count(&UndirectedGraph::empty_for_test(3)), 1);
    }

    #[test]
    fn orientation_counts_match_brute_force() {
        let graphs = [
            UndirectedGraph::new(5, [(1, 2), (2, 3), (3, 1), (3, 4), (4, 5), (5, 3)]).unwrap(),
            UndirectedGraph::new(6, [(1, 2), (1, 3), (2, 4), (3, 4), (4, 5), (5, 6), (4, 6)])
                .unwrap(),
            UndirectedGraph::complete(4),
            UndirectedGraph::new(4, [(1, 2), (3, 4)]).unwrap(),
        ];
        for g in &graphs {
            assert_eq!(
                enumerate_acyclic_orientations(g).unwrap().count(),
                brute_force_count(g)
            );
        }
    }

    #[test]
    fn every_orientation_is_a_valid_energy_graph() {
        for og in enumerate_acyclic_orientations(&UndirectedGraph::complete(4)).unwrap() {
            assert!(og.validate().is_empty());
            assert_eq!(og.arc_count(), 6);
        }
    }

    #[test]
    fn size_guard_refuses_large_graphs() {
        let err = enumerate_acyclic_orientations(&UndirectedGraph::path(13)).unwrap_err();
        assert!(matches!(err, Error::SizeGuard { n: 13, limit: 12 }));
    }

    impl UndirectedGraph {
        fn empty_for_test(n: usize) -> Self {
            UndirectedGraph::new(n, []).unwrap()
        }
    }
}
