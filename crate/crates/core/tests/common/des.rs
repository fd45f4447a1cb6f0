//! Time-stepped discrete-event particle simulation.
//!
//! Independent of the library's level-based propagation: it works on raw
//! `(tail, head)` pairs, schedules every particle as an arrival event on a
//! priority queue, and decides "first" versus "late" purely from the clock.
//! Used as the oracle for the energy ledger.

use std::cmp::Reverse;
use std::collections::{BTreeMap, BTreeSet, BinaryHeap};

use num_rational::BigRational;
use num_traits::{One, Zero};

#[derive(Debug, Clone, PartialEq)]
pub struct SimOutcome {
    pub black_arcs: BTreeSet<(usize, usize)>,
    pub dissipated_xi: BigRational,
    pub dissipated_mass: u64,
    /// sink -> (xi coefficient, mass units)
    pub sinks: BTreeMap<usize, (BigRational, u64)>,
    /// head -> arrival times, sorted
    pub arrivals: BTreeMap<usize, Vec<u64>>,
    /// particles resting at non-sink vertices
    pub resting_mass: u64,
    pub sources: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
struct Arrival {
    time: u64,
    seq: u64,
    tail: usize,
    head: usize,
}

pub fn simulate(n: usize, arcs: &[(usize, usize)]) -> SimOutcome {
    let mut out: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    let mut indeg = vec![0usize; n + 1];
    for &(u, v) in arcs {
        out[u].push(v);
        indeg[v] += 1;
    }

    let mut ke: BTreeMap<(usize, usize), BigRational> = BTreeMap::new();
    let mut reached_at: Vec<Option<u64>> = vec![None; n + 1];
    let mut queue: BinaryHeap<Reverse<Arrival>> = BinaryHeap::new();
    let mut seq = 0u64;

    let mut outcome = SimOutcome {
        black_arcs: BTreeSet::new(),
        dissipated_xi: BigRational::zero(),
        dissipated_mass: 0,
        sinks: BTreeMap::new(),
        arrivals: BTreeMap::new(),
        resting_mass: 0,
        sources: 0,
    };

    let mut fire = |v: usize,
                    t: u64,
                    pool: BigRational,
                    merged: u64,
                    queue: &mut BinaryHeap<Reverse<Arrival>>,
                    ke: &mut BTreeMap<(usize, usize), BigRational>,
                    outcome: &mut SimOutcome| {
        if out[v].is_empty() {
            outcome.sinks.insert(v, (pool, merged));
            return;
        }
        outcome.resting_mass += merged;
        let share = pool / BigRational::from_integer(out[v].len().into());
        for &w in &out[v] {
            ke.insert((v, w), share.clone());
            seq += 1;
            queue.push(Reverse(Arrival {
                time: t + 1,
                seq,
                tail: v,
                head: w,
            }));
        }
    };

    for v in 1..=n {
        if indeg[v] == 0 {
            outcome.sources += 1;
            reached_at[v] = Some(0);
            outcome.arrivals.insert(v, vec![0]);
            fire(
                v,
                0,
                BigRational::one(),
                0,
                &mut queue,
                &mut ke,
                &mut outcome,
            );
        }
    }

    while let Some(Reverse(first)) = queue.pop() {
        let t = first.time;
        let mut batch = vec![first];
        while queue.peek().is_some_and(|Reverse(a)| a.time == t) {
            batch.push(queue.pop().unwrap().0);
        }
        let mut by_head: BTreeMap<usize, Vec<Arrival>> = BTreeMap::new();
        for a in batch {
            by_head.entry(a.head).or_default().push(a);
        }
        for (v, particles) in by_head {
            let times = outcome.arrivals.entry(v).or_default();
            times.extend(particles.iter().map(|_| t));
            times.sort_unstable();
            if reached_at[v].is_some() {
                for p in particles {
                    outcome.black_arcs.insert((p.tail, p.head));
                    outcome.dissipated_xi += &ke[&(p.tail, p.head)];
                    outcome.dissipated_mass += 1;
                }
            } else {
                reached_at[v] = Some(t);
                let mut pool = BigRational::zero();
                for p in &particles {
                    pool += &ke[&(p.tail, p.head)];
                }
                let merged = particles.len() as u64;
                fire(v, t, pool, merged, &mut queue, &mut ke, &mut outcome);
            }
        }
    }
    outcome
}

pub fn ratio(p: i64, q: i64) -> BigRational {
    BigRational::new(p.into(), q.into())
}
