//! Block (biconnected component) decomposition of the arc set.

use std::collections::BTreeSet;

use crate::graph::{Arc, EnergyGraph, VertexId};

/// Maximal partition of the arcs such that any two parts share at most one vertex.
///
/// Each block is sorted, blocks are ordered by their smallest arc. The
/// vertices shared between blocks are exactly the cut vertices of the
/// underlying graph.
pub fn arc_partition_blocks(graph: &EnergyGraph) -> Vec<Vec<Arc>> {
    decompose(graph).0
}

/// Cut vertices of the underlying undirected graph, ascending.
pub fn cut_vertices(graph: &EnergyGraph) -> Vec<VertexId> {
    decompose(graph).1.into_iter().collect()
}

fn decompose(graph: &EnergyGraph) -> (Vec<Vec<Arc>>, BTreeSet<VertexId>) {
    let n = graph.n();
    // adjacency of slots with arc index
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for (idx, a) in graph.arcs().iter().enumerate() {
        adj[a.tail.slot()].push((a.head.slot(), idx));
        adj[a.head.slot()].push((a.tail.slot(), idx));
    }

    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut timer = 0;
    let mut edge_stack: Vec<usize> = Vec::new();
    let mut blocks = Vec::new();
    let mut cuts = BTreeSet::new();

    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        let mut root_children = 0;
        // (vertex, arc used to enter it, next adjacency position)
        let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
        while let Some(&mut (v, via, ref mut pos)) = stack.last_mut() {
            if *pos < adj[v].len() {
                let (w, idx) = adj[v][*pos];
                *pos += 1;
                if idx == via {
                    continue;
                }
                if disc[w] == usize::MAX {
                    edge_stack.push(idx);
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    if v == root {
                        root_children += 1;
                    }
                    stack.push((w, idx, 0));
                } else if disc[w] < disc[v] {
                    edge_stack.push(idx);
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(parent, _, _)) = stack.last() {
                    low[parent] = low[parent].min(low[v]);
                    if low[v] >= disc[parent] {
                        if parent != root {
                            cuts.insert(VertexId::from_slot(parent));
                        }
                        let mut block = Vec::new();
                        while let Some(idx) = edge_stack.pop() {
                            block.push(graph.arcs()[idx]);
                            if idx == via {
                                break;
                            }
                        }
                        block.sort_unstable();
                        blocks.push(block);
                    }
                }
            }
        }
        if root_children > 1 {
            cuts.insert(VertexId::from_slot(root));
        }
    }
    blocks.sort_unstable();
    (blocks, cuts)
}
