//! Energy propagation through an energy graph.
//!
//! Every source holds `1·ξ` and releases it in equal shares, one atomic
//! particle of mass `m` per out-arc, at `t = 0`. A particle crosses an arc in
//! one time unit. The particles that reach a vertex first merge, hand their
//! kinetic energy to the vertex pool and come to rest there; the pool is then
//! split equally over the vertex's own out-particles. A particle arriving
//! after the first batch travelled along a black arc: its kinetic energy and
//! its mass-energy `mc²` dissipate. Sinks keep whatever reaches them first.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::energy::{Energy, Rational};
use crate::error::{Error, Result};
use crate::graph::{Arc, EnergyGraph, VertexId, VertexMap};

/// Minimum travelling time from any source, per vertex.
pub fn levels(graph: &EnergyGraph) -> VertexMap<u32> {
    let mut level = vec![u32::MAX; graph.n()];
    let mut queue = VecDeque::new();
    for s in graph.sources() {
        level[s.slot()] = 0;
        queue.push_back(s);
    }
    while let Some(v) = queue.pop_front() {
        let next = level[v.slot()] + 1;
        for &w in graph.out_neighbors(v) {
            if level[w.slot()] == u32::MAX {
                level[w.slot()] = next;
                queue.push_back(w);
            }
        }
    }
    debug_assert!(level.iter().all(|&l| l != u32::MAX));
    VertexMap::from_vec(level)
}

/// Sorted arrival times of the particles reaching one vertex; `⟨0⟩` for sources.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrivalString {
    pub vertex: VertexId,
    pub times: Vec<u32>,
}

impl ArrivalString {
    /// Particles tied for the earliest arrival.
    pub fn first_arrivals(&self) -> usize {
        self.times
            .iter()
            .take_while(|&&t| t == self.times[0])
            .count()
    }
}

pub fn arrival_strings(graph: &EnergyGraph) -> VertexMap<ArrivalString> {
    strings_from_levels(graph, &levels(graph))
}

fn strings_from_levels(graph: &EnergyGraph, level: &VertexMap<u32>) -> VertexMap<ArrivalString> {
    VertexMap::from_vec(
        graph
            .vertices()
            .map(|v| {
                let mut times: Vec<u32> = graph
                    .in_neighbors(v)
                    .iter()
                    .map(|&u| level[u] + 1)
                    .collect();
                if times.is_empty() {
                    times.push(0);
                }
                times.sort_unstable();
                ArrivalString { vertex: v, times }
            })
            .collect(),
    )
}

fn is_black(level: &VertexMap<u32>, arc: &Arc) -> bool {
    level[arc.tail] + 1 > level[arc.head]
}

/// Arcs whose particle arrives after the first batch at its head, sorted.
pub fn black_arcs_by_arrival(graph: &EnergyGraph) -> Vec<Arc> {
    let level = levels(graph);
    graph
        .arcs()
        .iter()
        .copied()
        .filter(|a| is_black(&level, a))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArcKineticEnergy {
    pub arc: Arc,
    pub xi: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArcDissipation {
    pub arc: Arc,
    pub energy: Energy,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SinkCapacitation {
    pub vertex: VertexId,
    pub energy: Energy,
}

/// Full ledger of one propagation run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropagationReport {
    pub sources: Vec<VertexId>,
    pub sinks: Vec<VertexId>,
    pub levels: VertexMap<u32>,
    pub arrival_strings: VertexMap<ArrivalString>,
    pub black_arcs: Vec<Arc>,
    /// Kinetic energy collected by the first arrivals (`1ξ` at sources) and
    /// the number of merged particles.
    pub pool: VertexMap<Energy>,
    /// Kinetic energy carried by the particle on each arc, in arc order.
    pub arc_ke: Vec<ArcKineticEnergy>,
    pub dissipated_per_arc: Vec<ArcDissipation>,
    pub capacitated_per_sink: Vec<SinkCapacitation>,
    /// Particles at rest in non-sink vertices. Sink mass is part of the sink's capacitation.
    pub resting_mass: VertexMap<u64>,
    pub total_black_energy: Energy,
    pub total_capacitated: Energy,
}

impl PropagationReport {
    pub fn dissipation_on(&self, arc: Arc) -> Option<&Energy> {
        self.dissipated_per_arc
            .iter()
            .find(|d| d.arc == arc)
            .map(|d| &d.energy)
    }

    pub fn capacitation_at(&self, v: VertexId) -> Option<&Energy> {
        self.capacitated_per_sink
            .iter()
            .find(|c| c.vertex == v)
            .map(|c| &c.energy)
    }

    /// Dissipation summed over the black in-arcs of `v`.
    pub fn dissipated_into(&self, v: VertexId) -> Energy {
        self.dissipated_per_arc
            .iter()
            .filter(|d| d.arc.head == v)
            .map(|d| &d.energy)
            .sum()
    }
}

/// Runs the propagation model and returns its exact ledger.
pub fn propagate(graph: &EnergyGraph) -> Result<PropagationReport> {
    let sources = graph.sources();
    if sources.is_empty() {
        return Err(Error::NoSources);
    }
    let level = levels(graph);
    let arrival_strings = strings_from_levels(graph, &level);

    let n = graph.n();
    let mut pool = vec![Energy::zero(); n];
    let mut resting = vec![0u64; n];
    // Kinetic energy per arc, aligned with graph.arcs(); filled when the tail fires.
    let mut ke: Vec<Option<Rational>> = vec![None; graph.arc_count()];
    let arc_index = |a: Arc| graph.arcs().binary_search(&a).expect("arc of graph");

    let mut black_arcs = Vec::new();
    let mut dissipated = Vec::new();
    let mut capacitated = Vec::new();

    // Labels are a topological order, so every tail fires before its heads collide.
    for v in graph.vertices() {
        let mut here = Energy::zero();
        if graph.in_degree(v) == 0 {
            here.xi = Rational::one();
        }
        for &u in graph.in_neighbors(v) {
            let arc = Arc { tail: u, head: v };
            let share = ke[arc_index(arc)].as_ref().expect("tail fired earlier");
            if is_black(&level, &arc) {
                black_arcs.push(arc);
                dissipated.push(ArcDissipation {
                    arc,
                    energy: Energy::new(share.clone(), 1),
                });
            } else {
                here.xi += share;
                here.mass_units += 1;
            }
        }
        let d = graph.out_degree(v);
        if d == 0 {
            capacitated.push(SinkCapacitation {
                vertex: v,
                energy: here.clone(),
            });
        } else {
            resting[v.slot()] = here.mass_units;
            let share = &here.xi / d;
            for &w in graph.out_neighbors(v) {
                ke[arc_index(Arc { tail: v, head: w })] = Some(share.clone());
            }
        }
        pool[v.slot()] = here;
    }

    black_arcs.sort_unstable();
    dissipated.sort_unstable_by_key(|d| d.arc);
    let total_black_energy: Energy = dissipated.iter().map(|d| &d.energy).sum();
    let mut total_capacitated: Energy = capacitated.iter().map(|c| &c.energy).sum();
    total_capacitated.mass_units += resting.iter().sum::<u64>();

    let arc_ke = graph
        .arcs()
        .iter()
        .zip(ke)
        .map(|(&arc, xi)| ArcKineticEnergy {
            arc,
            xi: xi.expect("every tail fires"),
        })
        .collect();

    Ok(PropagationReport {
        sources,
        sinks: graph.sinks(),
        levels: level,
        arrival_strings,
        black_arcs,
        pool: VertexMap::from_vec(pool),
        arc_ke,
        dissipated_per_arc: dissipated,
        capacitated_per_sink: capacitated,
        resting_mass: VertexMap::from_vec(resting),
        total_black_energy,
        total_capacitated,
    })
}

pub fn total_black_energy(graph: &EnergyGraph) -> Result<Energy> {
    propagate(graph).map(|r| r.total_black_energy)
}

/// `E_black + E_capacitated = (#sources)·ξ + |A|·mc²`, exactly.
pub fn check_conservation(report: &PropagationReport, graph: &EnergyGraph) -> bool {
    let expected = Energy::new(
        Rational::from_integer(graph.sources().len() as i64),
        graph.arc_count() as u64,
    );
    report.total_black_energy.clone() + report.total_capacitated.clone() == expected
        && report.total_black_energy.mass_units == report.black_arcs.len() as u64
}
