mod common;

use common::des::{ratio, simulate, SimOutcome};
use common::{pairs, random_dag};
use energy_graph::{
    jaco_graph, orient_topologically, propagate, EnergyGraph, PropagationReport, SequenceSpec,
    UndirectedGraph,
};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn assert_agrees(g: &EnergyGraph) -> (PropagationReport, SimOutcome) {
    let rep = propagate(g).unwrap();
    let sim = simulate(g.n(), &pairs(g));

    let black: Vec<(usize, usize)> = rep
        .black_arcs
        .iter()
        .map(|a| (a.tail.index(), a.head.index()))
        .collect();
    assert_eq!(
        black,
        sim.black_arcs.iter().copied().collect::<Vec<_>>(),
        "black arcs of {g:?}"
    );
    assert_eq!(rep.total_black_energy.xi.as_big(), &sim.dissipated_xi);
    assert_eq!(rep.total_black_energy.mass_units, sim.dissipated_mass);

    let sinks: Vec<(usize, _)> = rep
        .capacitated_per_sink
        .iter()
        .map(|s| {
            (
                s.vertex.index(),
                (s.energy.xi.as_big().clone(), s.energy.mass_units),
            )
        })
        .collect();
    assert_eq!(sinks, sim.sinks.clone().into_iter().collect::<Vec<_>>());

    for (v, s) in rep.arrival_strings.iter() {
        let times: Vec<u64> = s.times.iter().map(|&t| t as u64).collect();
        assert_eq!(times, sim.arrivals[&v.index()], "arrivals at {v}");
    }
    let resting: u64 = rep.resting_mass.values().iter().sum();
    assert_eq!(resting, sim.resting_mass);
    assert_eq!(rep.sources.len(), sim.sources);
    (rep, sim)
}

#[test]
fn natural_graph_matches_simulation() {
    let g = jaco_graph(&SequenceSpec::Natural, 8).unwrap();
    let (_, sim) = assert_agrees(&g);
    assert_eq!(sim.dissipated_xi, ratio(7, 8));
    assert_eq!(sim.dissipated_mass, 7);
    assert_eq!(sim.sinks[&8], (ratio(1, 8), 1));
    assert_eq!(sim.resting_mass, 8);
}

#[test]
fn fibonacci_graph_simulated_values() {
    let g = jaco_graph(&SequenceSpec::Fibonacci, 12).unwrap();
    let (_, sim) = assert_agrees(&g);
    assert_eq!(sim.sinks[&12], (ratio(371, 1800), 5));
    assert_eq!(sim.dissipated_xi, ratio(1429, 1800));
    assert_eq!(sim.dissipated_mass, 12);
    assert_eq!(sim.arrivals[&12], [5, 5, 5, 5, 5, 6]);
}

#[test]
fn mod_five_graph_simulated_values() {
    let g = jaco_graph(&SequenceSpec::Modulo(5), 12).unwrap();
    let (_, sim) = assert_agrees(&g);
    assert_eq!(sim.sinks[&5], (ratio(7, 24), 2));
    assert_eq!(sim.sinks[&10], (ratio(1, 24), 1));
    assert_eq!(sim.sinks[&12], (ratio(11, 144), 2));
    assert_eq!(sim.dissipated_xi, ratio(85, 144));
    assert_eq!(sim.dissipated_mass, 5);
}

#[test]
fn odd_cycle_simulated_values() {
    for n in [3, 5, 7, 9] {
        let g = orient_topologically(&UndirectedGraph::cycle(n), &[1]).unwrap();
        let (_, sim) = assert_agrees(&g);
        assert_eq!(sim.dissipated_xi, ratio(1, 2), "C{n}");
        assert_eq!(sim.dissipated_mass, 1);
    }
}

#[test]
fn sequence_families_match_simulation() {
    for n in 1..=30 {
        for spec in [
            SequenceSpec::Natural,
            SequenceSpec::Fibonacci,
            SequenceSpec::Modulo(3),
            SequenceSpec::Modulo(6),
        ] {
            assert_agrees(&jaco_graph(&spec, n).unwrap());
        }
    }
}

#[test]
fn random_graphs_match_simulation() {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for _ in 0..300 {
        let n = rng.gen_range(1..=18);
        let p = rng.gen_range(0.05..0.7);
        assert_agrees(&random_dag(&mut rng, n, p));
    }
}

#[test]
fn arcless_graph_has_only_sources() {
    let g = EnergyGraph::empty(3);
    let (rep, sim) = assert_agrees(&g);
    assert_eq!(rep.sources.len(), 3);
    assert_eq!(sim.sinks.len(), 3);
    assert!(rep.total_black_energy.is_zero());
}
