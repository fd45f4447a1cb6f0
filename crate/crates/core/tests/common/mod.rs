#![allow(dead_code)]

pub mod des;

use energy_graph::EnergyGraph;

pub fn pairs(g: &EnergyGraph) -> Vec<(usize, usize)> {
    g.arcs()
        .iter()
        .map(|a| (a.tail.index(), a.head.index()))
        .collect()
}

/// Random energy graph: every pair `i < j` is an arc with probability `p`.
pub fn random_dag(rng: &mut impl rand::Rng, n: usize, p: f64) -> EnergyGraph {
    let mut arcs = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            if rng.gen_bool(p) {
                arcs.push((i, j));
            }
        }
    }
    EnergyGraph::new(n, arcs).unwrap()
}

/// Random connected energy graph on at most `max_n` vertices with at least
/// one cut vertex: two or three random blobs glued at single vertices, then
/// labelled by a random topological order.
pub fn random_cut_vertex_graph(rng: &mut impl rand::Rng, max_n: usize) -> EnergyGraph {
    use rand::seq::SliceRandom;
    loop {
        let mut edges: Vec<(usize, usize)> = Vec::new();
        let mut n = 0;
        for _ in 0..rng.gen_range(2..=3) {
            let fresh = rng.gen_range(2..=5);
            let mut ids: Vec<usize> = Vec::new();
            if n > 0 {
                ids.push(rng.gen_range(0..n));
            }
            ids.extend(n..n + fresh);
            n += fresh;
            // a spanning path keeps the blob connected; chords at random
            for w in ids.windows(2) {
                edges.push((w[0], w[1]));
            }
            for i in 0..ids.len() {
                for j in i + 2..ids.len() {
                    if rng.gen_bool(0.5) {
                        edges.push((ids[i], ids[j]));
                    }
                }
            }
        }
        if n > max_n {
            continue;
        }
        let mut order: Vec<usize> = (1..=n).collect();
        order.shuffle(rng);
        let arcs = edges
            .iter()
            .map(|&(a, b)| (order[a].min(order[b]), order[a].max(order[b])));
        let g = EnergyGraph::new(n, arcs).unwrap();
        if !energy_graph::cut_vertices(&g).is_empty() {
            return g;
        }
    }
}
