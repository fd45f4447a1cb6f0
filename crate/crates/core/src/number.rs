//! Black arc numbers over orientations and over block decompositions.

use std::collections::BTreeMap;

use crate::blocks::arc_partition_blocks;
use crate::error::{Error, Result};
use crate::graph::{Arc, EnergyGraph, UndirectedGraph};
use crate::orient::enumerate_acyclic_orientations;
use crate::propagation::black_arcs_by_arrival;

pub const DEFAULT_MIN_ORIENT_LIMIT: usize = 10;

/// Minimum number of black arcs over every acyclic orientation of `g`.
pub fn black_arc_number_min(g: &UndirectedGraph) -> Result<usize> {
    black_arc_number_min_with_limit(g, DEFAULT_MIN_ORIENT_LIMIT)
}

pub fn black_arc_number_min_with_limit(g: &UndirectedGraph, limit: usize) -> Result<usize> {
    if g.n() > limit {
        return Err(Error::SizeGuard { n: g.n(), limit });
    }
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    let mut best = usize::MAX;
    for oriented in enumerate_acyclic_orientations(g)? {
        best = best.min(black_arcs_by_arrival(&oriented).len());
        if best == 0 {
            break;
        }
    }
    Ok(if best == usize::MAX { 0 } else { best })
}

/// The block as an energy graph of its own, vertices relabeled by ascending original index.
pub fn block_graph(block: &[Arc]) -> EnergyGraph {
    let mut labels = BTreeMap::new();
    for a in block {
        labels.insert(a.tail, 0);
        labels.insert(a.head, 0);
    }
    for (i, label) in labels.values_mut().enumerate() {
        *label = i + 1;
    }
    let mut arcs: Vec<Arc> = block
        .iter()
        .map(|a| Arc::new(labels[&a.tail], labels[&a.head]))
        .collect();
    arcs.sort_unstable();
    EnergyGraph::from_sorted_unchecked(labels.len(), arcs)
}

/// Black arc count of each block under its inherited orientation.
pub fn block_black_counts(graph: &EnergyGraph) -> Vec<(Vec<Arc>, usize)> {
    arc_partition_blocks(graph)
        .into_iter()
        .map(|block| {
            let count = black_arcs_by_arrival(&block_graph(&block)).len();
            (block, count)
        })
        .collect()
}

/// Sum of the per-block black arc counts.
pub fn decompose_and_sum(graph: &EnergyGraph) -> usize {
    block_black_counts(graph).iter().map(|(_, c)| c).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orient::orient_topologically;

    #[test]
    fn family_minima() {
        assert_eq!(black_arc_number_min(&UndirectedGraph::cycle(6)).unwrap(), 0);
        assert_eq!(black_arc_number_min(&UndirectedGraph::cycle(5)).unwrap(), 1);
        assert_eq!(black_arc_number_min(&UndirectedGraph::star(5)).unwrap(), 0);
        assert_eq!(black_arc_number_min(&UndirectedGraph::path(7)).unwrap(), 0);
        assert_eq!(
            black_arc_number_min(&UndirectedGraph::complete(4)).unwrap(),
            3
        );
    }

    #[test]
    fn guard_and_connectivity() {
        assert!(matches!(
            black_arc_number_min(&UndirectedGraph::path(11)),
            Err(Error::SizeGuard { n: 11, limit: 10 })
        ));
        let g = UndirectedGraph::new(4, [(1, 2), (3, 4)]).unwrap();
        assert!(matches!(black_arc_number_min(&g), Err(Error::NotConnected)));
    }

    #[test]
    fn joined_odd_cycles_add_up() {
        // second C5 hangs off the collision vertex of the first
        let c5 = orient_topologically(&UndirectedGraph::cycle(5), &[1]).unwrap();
        let mut arcs: Vec<(usize, usize)> = c5
            .arcs()
            .iter()
            .map(|a| (a.tail.index(), a.head.index()))
            .collect();
        arcs.extend(
            c5.arcs()
                .iter()
                .map(|a| (a.tail.index() + 4, a.head.index() + 4)),
        );
        let g = EnergyGraph::new(9, arcs).unwrap();
        assert_eq!(block_black_counts(&g).len(), 2);
        assert_eq!(decompose_and_sum(&g), 2);
        assert_eq!(black_arcs_by_arrival(&g).len(), 2);
    }

    #[test]
    fn path_blocks_have_no_black_arcs() {
        let g = orient_topologically(&UndirectedGraph::path(5), &[1]).unwrap();
        assert_eq!(decompose_and_sum(&g), 0);
    }

    #[test]
    fn block_relabeling_keeps_orientation() {
        let b = block_graph(&[Arc::new(3, 7), Arc::new(3, 9), Arc::new(7, 9)]);
        assert_eq!(b.arcs(), &[Arc::new(1, 2), Arc::new(1, 3), Arc::new(2, 3)]);
    }
}
