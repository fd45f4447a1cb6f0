//! The Jaco-type black arc algorithm, black clouds and solid subgraphs.
//!
//! For `j = 1..n-1` in ascending order the algorithm looks at the heads of
//! `u_j` in the current residual graph, moves every arc induced among those
//! heads into the cloud, and deletes them from the residual. What remains is
//! the solid subgraph.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Arc, EnergyGraph, VertexId};
use crate::sequence::{jaco_graph, SequenceSpec};

/// Heads of `j` in `residual`, ascending.
pub fn head_neighborhood(residual: &EnergyGraph, j: VertexId) -> Vec<VertexId> {
    residual.out_neighbors(j).to_vec()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlackCloud {
    /// `steps[j - 1]`: arcs blackened while processing `u_j`.
    pub steps: Vec<Vec<Arc>>,
    /// Union of all steps, sorted.
    pub cumulative: Vec<Arc>,
}

impl BlackCloud {
    pub fn from_arcs(arcs: impl IntoIterator<Item = Arc>) -> Self {
        let set: BTreeSet<Arc> = arcs.into_iter().collect();
        let cumulative: Vec<Arc> = set.into_iter().collect();
        Self {
            steps: vec![cumulative.clone()],
            cumulative,
        }
    }

    pub fn len(&self) -> usize {
        self.cumulative.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cumulative.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct SolidSubgraph {
    pub graph: EnergyGraph,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlackArcOutcome {
    pub cloud: BlackCloud,
    pub solid: SolidSubgraph,
    pub black_arc_count: usize,
}

/// Mutable residual with `O(1)` arc deletion.
struct Residual {
    alive: Vec<Vec<bool>>,
    heads: Vec<Vec<VertexId>>,
}

impl Residual {
    fn new(graph: &EnergyGraph) -> Self {
        let heads: Vec<Vec<VertexId>> = graph
            .vertices()
            .map(|v| graph.out_neighbors(v).to_vec())
            .collect();
        let alive = heads.iter().map(|h| vec![true; h.len()]).collect();
        Self { alive, heads }
    }

    fn heads(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.heads[v.slot()]
            .iter()
            .zip(&self.alive[v.slot()])
            .filter(|(_, &a)| a)
            .map(|(&h, _)| h)
    }

    fn position(&self, arc: Arc) -> Option<usize> {
        self.heads[arc.tail.slot()].binary_search(&arc.head).ok()
    }

    fn has(&self, arc: Arc) -> bool {
        self.position(arc)
            .is_some_and(|p| self.alive[arc.tail.slot()][p])
    }

    fn remove(&mut self, arc: Arc) {
        let p = self.position(arc).expect("arc of residual");
        self.alive[arc.tail.slot()][p] = false;
    }

    /// Arcs among the heads of `j`, ascending.
    fn induced_among_heads(&self, j: VertexId) -> Vec<Arc> {
        let heads: Vec<VertexId> = self.heads(j).collect();
        let members: BTreeSet<VertexId> = heads.iter().copied().collect();
        heads
            .iter()
            .flat_map(|&x| {
                self.heads(x)
                    .filter(|y| members.contains(y))
                    .map(move |y| Arc { tail: x, head: y })
            })
            .collect()
    }
}

fn check_jaco(graph: &EnergyGraph) -> Result<()> {
    if graph.n() < 2 {
        return Err(Error::TooSmall {
            n: graph.n(),
            min: 2,
        });
    }
    match graph.jaco_violation() {
        Some(v) => Err(Error::NotJacoType(v)),
        None => Ok(()),
    }
}

/// Runs the algorithm for exactly `n - 1` iterations.
///
/// Only defined for Jaco-type labelings, where every out-neighbourhood is a
/// run of consecutive vertices. Use
/// [`black_arcs_by_arrival`](crate::propagation::black_arcs_by_arrival) for
/// arbitrary energy graphs.
pub fn jaco_black_arc_algorithm(graph: &EnergyGraph) -> Result<BlackArcOutcome> {
    check_jaco(graph)?;
    let mut residual = Residual::new(graph);
    let mut steps = Vec::with_capacity(graph.n() - 1);
    for j in graph.vertices().take(graph.n() - 1) {
        let step = residual.induced_among_heads(j);
        for &arc in &step {
            residual.remove(arc);
        }
        steps.push(step);
    }
    let cumulative: BTreeSet<Arc> = steps.iter().flatten().copied().collect();
    let solid = graph.without_arcs(&cumulative);
    let cumulative: Vec<Arc> = cumulative.into_iter().collect();
    Ok(BlackArcOutcome {
        black_arc_count: cumulative.len(),
        cloud: BlackCloud { steps, cumulative },
        solid: SolidSubgraph { graph: solid },
    })
}

/// `graph` minus the cloud arcs.
pub fn solid_subgraph(graph: &EnergyGraph, cloud: &BlackCloud) -> Result<SolidSubgraph> {
    if let Some(&arc) = cloud.cumulative.iter().find(|&&a| !graph.has_arc(a)) {
        return Err(Error::ForeignArc(arc));
    }
    let removed: BTreeSet<Arc> = cloud.cumulative.iter().copied().collect();
    Ok(SolidSubgraph {
        graph: graph.without_arcs(&removed),
    })
}

/// Sum over `i = 1..n-1` of the triangles through `u_i` in the residual
/// underlying graph whose other two corners both lie in the heads of `u_i`.
pub fn primitive_degree_sum(graph: &EnergyGraph) -> Result<usize> {
    check_jaco(graph)?;
    let mut residual = Residual::new(graph);
    let mut total = 0;
    for i in graph.vertices().take(graph.n() - 1) {
        let heads: Vec<VertexId> = residual.heads(i).collect();
        let mut closing = Vec::new();
        for (a, &x) in heads.iter().enumerate() {
            for &y in &heads[a + 1..] {
                // heads are ascending, so the only possible residual arc is x -> y
                let arc = Arc { tail: x, head: y };
                if residual.has(arc) {
                    closing.push(arc);
                }
            }
        }
        total += closing.len();
        for arc in closing {
            residual.remove(arc);
        }
    }
    Ok(total)
}

/// `⌊n/2⌋ − 1`, the black arc number of the mod-4 Jaco-type graph.
pub fn mod4_closed_form(n: usize) -> Result<usize> {
    if n < 4 {
        return Err(Error::TooSmall { n, min: 4 });
    }
    Ok(n / 2 - 1)
}

/// `(n, b_count)` for each `n` in `from..=to`.
pub fn black_arc_table(spec: &SequenceSpec, from: usize, to: usize) -> Result<Vec<(usize, usize)>> {
    (from..=to)
        .map(|n| {
            let g = jaco_graph(spec, n)?;
            Ok((n, jaco_black_arc_algorithm(&g)?.black_arc_count))
        })
        .collect()
}
