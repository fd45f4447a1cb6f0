//! Reference fixtures: published values for the named example graphs,
//! checked against the library.
//!
//! Figures that are known to contradict energy conservation are reported
//! as [`FixtureStatus::Warn`] with both the reference and the computed
//! value. Their mass-energy counts are still checked exactly.

use std::fmt;

use crate::blackarc::{jaco_black_arc_algorithm, mod4_closed_form, primitive_degree_sum};
use crate::codes::{binary_code_graph, code_table_graph, gray_code_table, union_copies};
use crate::energy::{Energy, Rational};
use crate::error::Result;
use crate::graph::{Arc, EnergyGraph, UndirectedGraph, VertexId};
use crate::number::black_arc_number_min;
use crate::orient::orient_topologically;
use crate::propagation::{
    arrival_strings, black_arcs_by_arrival, check_conservation, levels, propagate,
    total_black_energy,
};
use crate::sequence::{jaco_graph, SequenceSpec};

/// Printed b• values of the mod-5 graphs for `n = 4..=35`.
pub const MOD5_TABLE: [usize; 32] = [
    1, 1, 1, 2, 3, 3, 4, 5, 5, 6, 6, 7, 7, 8, 8, 9, 10, 11, 11, 12, 12, 13, 14, 14, 15, 15, 16, 16,
    17, 18, 18, 19,
];

/// Printed black cloud of the mod-5 graph of order 35. The printed cloud of
/// order `n` is exactly the arcs of this list whose head is at most `n`.
pub const MOD5_CLOUD_35: [(usize, usize); 19] = [
    (3, 4),
    (6, 7),
    (7, 8),
    (9, 10),
    (9, 11),
    (12, 13),
    (14, 15),
    (14, 16),
    (17, 18),
    (19, 20),
    (19, 21),
    (22, 23),
    (24, 25),
    (24, 26),
    (27, 28),
    (29, 30),
    (31, 32),
    (32, 33),
    (34, 35),
];

pub fn printed_mod5_cloud(n: usize) -> Vec<Arc> {
    MOD5_CLOUD_35
        .iter()
        .filter(|&&(_, h)| h <= n)
        .map(|&p| Arc::from(p))
        .collect()
}

pub const NATURAL_CLOUD_8: [(usize, usize); 7] =
    [(3, 4), (5, 6), (5, 7), (5, 8), (6, 7), (6, 8), (7, 8)];

pub const FIBONACCI_CLOUD_12: [(usize, usize); 12] = [
    (4, 5),
    (6, 7),
    (6, 8),
    (6, 9),
    (6, 10),
    (7, 8),
    (7, 9),
    (7, 10),
    (8, 9),
    (8, 10),
    (9, 10),
    (11, 12),
];

pub const NATURAL_ARRIVALS_8: [&[u32]; 8] = [
    &[0],
    &[1],
    &[2],
    &[2, 3],
    &[3, 3],
    &[3, 3, 4],
    &[3, 4, 4],
    &[3, 4, 4, 4],
];

pub const FIBONACCI_ARRIVALS_12: [&[u32]; 12] = [
    &[0],
    &[1],
    &[2],
    &[3],
    &[3, 4],
    &[4, 4],
    &[4, 4, 5],
    &[4, 5, 5],
    &[4, 5, 5, 5],
    &[4, 5, 5, 5, 5],
    &[5, 5, 5, 5, 5],
    &[5, 5, 5, 5, 5, 6],
];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FixtureStatus {
    Pass,
    Warn,
    Fail,
}

impl fmt::Display for FixtureStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FixtureStatus::Pass => "PASS",
            FixtureStatus::Warn => "WARN",
            FixtureStatus::Fail => "FAIL",
        })
    }
}

#[derive(Clone, Debug)]
pub struct FixtureOutcome {
    pub name: String,
    pub topic: &'static str,
    pub status: FixtureStatus,
    pub detail: String,
}

impl fmt::Display for FixtureOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {} ({})", self.status, self.name, self.topic)?;
        if !self.detail.is_empty() {
            write!(f, ": {}", self.detail)?;
        }
        Ok(())
    }
}

/// Where the fixtures get their Jaco-type graphs from.
pub trait GraphSource {
    fn jaco(&self, spec: &SequenceSpec, n: usize) -> Result<EnergyGraph>;
}

/// The library's own generator.
#[derive(Debug, Default, Clone, Copy)]
pub struct StandardSource;

impl GraphSource for StandardSource {
    fn jaco(&self, spec: &SequenceSpec, n: usize) -> Result<EnergyGraph> {
        jaco_graph(spec, n)
    }
}

/// Drops the last arc of every generated graph; exercises the failure path.
#[derive(Debug, Default, Clone, Copy)]
pub struct FaultySource;

impl GraphSource for FaultySource {
    fn jaco(&self, spec: &SequenceSpec, n: usize) -> Result<EnergyGraph> {
        let g = jaco_graph(spec, n)?;
        let keep = g.arc_count().saturating_sub(1);
        EnergyGraph::new(n, g.arcs()[..keep].iter().copied())
    }
}

/// Compact rendering of fixture values for report lines.
trait Show {
    fn show(&self) -> String;
}

macro_rules! show_via_display {
    ($($t:ty),*) => {$(
        impl Show for $t {
            fn show(&self) -> String {
                self.to_string()
            }
        }
    )*};
}

show_via_display!(bool, u64, usize, Energy, VertexId);

impl<T: Show> Show for Option<T> {
    fn show(&self) -> String {
        self.as_ref().map_or_else(|| "none".into(), Show::show)
    }
}

impl<T: Show> Show for Vec<T> {
    fn show(&self) -> String {
        let items: Vec<String> = self.iter().map(Show::show).collect();
        format!("[{}]", items.join(", "))
    }
}

impl Show for Vec<u32> {
    fn show(&self) -> String {
        let items: Vec<String> = self.iter().map(u32::to_string).collect();
        format!("<{}>", items.join(","))
    }
}

impl Show for Vec<Arc> {
    fn show(&self) -> String {
        let items: Vec<String> = self.iter().map(Arc::to_string).collect();
        format!("{{{}}}", items.join(", "))
    }
}

fn mismatch<T: Show + PartialEq>(expected: &T, actual: &T) -> String {
    format!("expected {}, got {}", expected.show(), actual.show())
}

fn arc_set_mismatch(expected: &[Arc], actual: &[Arc]) -> String {
    let missing: Vec<Arc> = expected
        .iter()
        .filter(|a| !actual.contains(a))
        .copied()
        .collect();
    let extra: Vec<Arc> = actual
        .iter()
        .filter(|a| !expected.contains(a))
        .copied()
        .collect();
    format!("missing {}, unexpected {}", missing.show(), extra.show())
}

struct Recorder {
    outcomes: Vec<FixtureOutcome>,
}

impl Recorder {
    fn check<T: PartialEq + Show>(
        &mut self,
        name: impl Into<String>,
        topic: &'static str,
        expected: T,
        actual: Result<T>,
    ) {
        self.judge(name, topic, expected, actual, mismatch);
    }

    fn check_arcs(
        &mut self,
        name: impl Into<String>,
        topic: &'static str,
        expected: Vec<Arc>,
        actual: Result<Vec<Arc>>,
    ) {
        self.judge(name, topic, expected, actual, |e, a| arc_set_mismatch(e, a));
    }

    fn judge<T: PartialEq>(
        &mut self,
        name: impl Into<String>,
        topic: &'static str,
        expected: T,
        actual: Result<T>,
        describe: impl Fn(&T, &T) -> String,
    ) {
        let (status, detail) = match actual {
            Ok(a) if a == expected => (FixtureStatus::Pass, String::new()),
            Ok(a) => (FixtureStatus::Fail, describe(&expected, &a)),
            Err(e) => (FixtureStatus::Fail, format!("error: {e}")),
        };
        self.outcomes.push(FixtureOutcome {
            name: name.into(),
            topic,
            status,
            detail,
        });
    }

    /// Reference value known to be irreproducible; always a warning with both values.
    fn discrepancy(
        &mut self,
        name: &str,
        topic: &'static str,
        reference: &str,
        computed: Result<String>,
    ) {
        let (status, detail) = match computed {
            Ok(c) => (
                FixtureStatus::Warn,
                format!("reference {reference} is irreproducible under the propagation model; computed {c}"),
            ),
            Err(e) => (FixtureStatus::Fail, format!("error: {e}")),
        };
        self.outcomes.push(FixtureOutcome {
            name: name.into(),
            topic,
            status,
            detail,
        });
    }
}

fn v(i: usize) -> VertexId {
    VertexId::new(i).expect("1-based")
}

fn vs(ids: &[usize]) -> Vec<VertexId> {
    ids.iter().map(|&i| v(i)).collect()
}

fn arcs(pairs: &[(usize, usize)]) -> Vec<Arc> {
    pairs.iter().map(|&p| Arc::from(p)).collect()
}

fn e(p: i64, q: i64, mass: u64) -> Energy {
    Energy::new(Rational::new(p, q), mass)
}

pub fn run_fixtures() -> Vec<FixtureOutcome> {
    run_fixtures_with(&StandardSource)
}

pub fn run_fixtures_with(src: &dyn GraphSource) -> Vec<FixtureOutcome> {
    let mut r = Recorder {
        outcomes: Vec::new(),
    };
    let s1 = SequenceSpec::Natural;
    let s2 = SequenceSpec::Fibonacci;
    let m5 = SequenceSpec::Modulo(5);
    let m4 = SequenceSpec::Modulo(4);

    const CORE: &str = "energy graph basics";
    const NAT: &str = "natural-number graph J8";
    const FIB: &str = "Fibonacci graph J12";
    const FAM: &str = "stars, paths and cycles";
    const CODES: &str = "binary and Gray code graphs";
    const MODK: &str = "mod-k graphs";

    // graph construction
    r.check(
        "J8(s1) sources",
        CORE,
        vs(&[1]),
        src.jaco(&s1, 8).map(|g| g.sources()),
    );
    r.check(
        "J8(s1) sinks",
        CORE,
        vs(&[8]),
        src.jaco(&s1, 8).map(|g| g.sinks()),
    );
    r.check(
        "J12(s3), k=5 sinks",
        MODK,
        vs(&[5, 10, 12]),
        src.jaco(&m5, 12).map(|g| g.sinks()),
    );
    r.check("f6 = 8", FIB, 8, s2.term(6));
    r.check(
        "|A(J8(s1))| = 16",
        NAT,
        16,
        src.jaco(&s1, 8).map(|g| g.arc_count()),
    );
    r.check(
        "J8(s1) out-degree profile",
        NAT,
        vec![1, 2, 3, 4, 3, 2, 1, 0],
        src.jaco(&s1, 8).map(|g| g.out_degrees()),
    );
    r.check(
        "|A(J12(s2))| = 33",
        FIB,
        33,
        src.jaco(&s2, 12).map(|g| g.arc_count()),
    );
    r.check(
        "G2 equals J8(s1)",
        CODES,
        true,
        binary_code_graph(2).and_then(|g| Ok(g == src.jaco(&s1, 8)?)),
    );
    r.check(
        "Gray-table graph equals G2",
        CODES,
        true,
        gray_code_table(2).and_then(|t| Ok(code_table_graph(&t) == binary_code_graph(2)?)),
    );
    for t in 1..=4 {
        r.check(
            format!("b*(union of {t} copies of G2) = {t}*7"),
            CODES,
            7 * t,
            src.jaco(&s1, 8)
                .and_then(|g| jaco_black_arc_algorithm(&union_copies(&g, t)))
                .map(|o| o.black_arc_count),
        );
    }

    // propagation
    r.check(
        "P4 levels",
        FAM,
        vec![0, 1, 2, 3],
        orient_topologically(&UndirectedGraph::path(4), &[1]).map(|g| levels(&g).into_vec()),
    );
    r.check(
        "star with reversed arcs: centre level 1",
        FAM,
        1,
        EnergyGraph::new(5, [(1, 3), (2, 3), (3, 4), (3, 5)]).map(|g| levels(&g)[v(3)] as usize),
    );
    r.check(
        "J8(s1) arrival strings",
        NAT,
        NATURAL_ARRIVALS_8
            .iter()
            .map(|t| t.to_vec())
            .collect::<Vec<_>>(),
        src.jaco(&s1, 8).map(|g| {
            arrival_strings(&g)
                .into_vec()
                .into_iter()
                .map(|s| s.times)
                .collect()
        }),
    );
    r.check(
        "J12(s2) arrival strings",
        FIB,
        FIBONACCI_ARRIVALS_12
            .iter()
            .map(|t| t.to_vec())
            .collect::<Vec<_>>(),
        src.jaco(&s2, 12).map(|g| {
            arrival_strings(&g)
                .into_vec()
                .into_iter()
                .map(|s| s.times)
                .collect()
        }),
    );
    r.check_arcs(
        "J8(s1) black arcs by arrival",
        NAT,
        arcs(&NATURAL_CLOUD_8),
        src.jaco(&s1, 8).map(|g| black_arcs_by_arrival(&g)),
    );
    r.check(
        "directed path has no black arcs",
        FAM,
        0,
        orient_topologically(&UndirectedGraph::path(7), &[1])
            .map(|g| black_arcs_by_arrival(&g).len()),
    );
    r.check_arcs(
        "C5 canonical black arc",
        FAM,
        arcs(&[(4, 5)]),
        orient_topologically(&UndirectedGraph::cycle(5), &[1]).map(|g| black_arcs_by_arrival(&g)),
    );

    let j8 = src.jaco(&s1, 8).and_then(|g| propagate(&g));
    let dissipation = |arc: (usize, usize)| {
        j8.as_ref()
            .map_err(Clone::clone)
            .map(|rep| rep.dissipation_on(arc.into()).cloned())
    };
    r.check(
        "J8(s1) dissipation on (u3,u4)",
        NAT,
        Some(e(1, 6, 1)),
        dissipation((3, 4)),
    );
    r.check(
        "J8(s1) dissipation on (u5,u6)",
        NAT,
        Some(e(7, 72, 1)),
        dissipation((5, 6)),
    );
    let into = |i: usize| {
        j8.as_ref()
            .map_err(Clone::clone)
            .map(|rep| rep.dissipated_into(v(i)))
    };
    r.check(
        "J8(s1) dissipation at u7",
        NAT,
        e(7 * 2 + 7 * 3, 144, 2),
        into(7),
    );
    r.check(
        "J8(s1) dissipation at u8",
        NAT,
        e(14 + 21 + 18, 144, 3),
        into(8),
    );
    r.check(
        "J8(s1) sink u8 capacitates 1/8 xi + mc2",
        NAT,
        Some(e(1, 8, 1)),
        j8.as_ref()
            .map_err(Clone::clone)
            .map(|rep| rep.capacitation_at(v(8)).cloned()),
    );
    r.check(
        "J8(s1) total black energy",
        NAT,
        e(7, 8, 7),
        j8.as_ref()
            .map_err(Clone::clone)
            .map(|rep| rep.total_black_energy.clone()),
    );
    r.check(
        "J8(s1) total capacitated",
        NAT,
        e(1, 8, 9),
        j8.as_ref()
            .map_err(Clone::clone)
            .map(|rep| rep.total_capacitated.clone()),
    );
    r.check(
        "J8(s1) conservation",
        NAT,
        true,
        src.jaco(&s1, 8)
            .and_then(|g| Ok(check_conservation(&propagate(&g)?, &g))),
    );
    r.check(
        "P7 black energy is zero",
        FAM,
        Energy::zero(),
        orient_topologically(&UndirectedGraph::path(7), &[1]).and_then(|g| total_black_energy(&g)),
    );
    r.check(
        "P7 sink capacitates xi + mc2",
        FAM,
        e(1, 1, 1),
        orient_topologically(&UndirectedGraph::path(7), &[1])
            .and_then(|g| propagate(&g))
            .map(|rep| rep.capacitated_per_sink[0].energy.clone()),
    );
    r.check(
        "C6 black energy is zero",
        FAM,
        Energy::zero(),
        orient_topologically(&UndirectedGraph::cycle(6), &[1]).and_then(|g| total_black_energy(&g)),
    );
    r.check(
        "C5 black energy = 1/2 xi + mc2",
        FAM,
        e(1, 2, 1),
        orient_topologically(&UndirectedGraph::cycle(5), &[1]).and_then(|g| total_black_energy(&g)),
    );
    r.check(
        "S1,4 black energy is zero",
        FAM,
        Energy::zero(),
        orient_topologically(&UndirectedGraph::star(4), &[1]).and_then(|g| total_black_energy(&g)),
    );

    let j12m5 = src.jaco(&m5, 12).and_then(|g| propagate(&g));
    let cap = |i: usize| {
        j12m5
            .as_ref()
            .map_err(Clone::clone)
            .map(|rep| rep.capacitation_at(v(i)).cloned())
    };
    r.check(
        "J12(s3), k=5 sink u5 capacitates 7/24 xi + 2mc2",
        MODK,
        Some(e(7, 24, 2)),
        cap(5),
    );
    r.check(
        "J12(s3), k=5 sink u10 capacitates 1/24 xi + mc2",
        MODK,
        Some(e(1, 24, 1)),
        cap(10),
    );
    r.check(
        "J12(s3), k=5 black arc count",
        MODK,
        5,
        j12m5
            .as_ref()
            .map_err(Clone::clone)
            .map(|rep| rep.black_arcs.len()),
    );
    r.discrepancy(
        "J12(s3), k=5 sink u12",
        MODK,
        "1/12 xi + 2 mc2",
        cap(12).map(|c| c.map_or("none".into(), |c| c.to_string())),
    );
    r.discrepancy(
        "J12(s3), k=5 total black energy",
        MODK,
        "47/72 xi + 6 mc2",
        j12m5
            .as_ref()
            .map_err(Clone::clone)
            .map(|rep| rep.total_black_energy.to_string()),
    );
    r.discrepancy(
        "J12(s3), k=5 total capacitated",
        MODK,
        "1/12 xi + 14 mc2",
        j12m5
            .as_ref()
            .map_err(Clone::clone)
            .map(|rep| rep.total_capacitated.to_string()),
    );

    let j12 = src.jaco(&s2, 12).and_then(|g| propagate(&g));
    r.check(
        "J12(s2) sink u12 mass units",
        FIB,
        Some(5),
        j12.as_ref()
            .map_err(Clone::clone)
            .map(|rep| rep.capacitation_at(v(12)).map(|c| c.mass_units)),
    );
    r.check(
        "J12(s2) dissipated mass units",
        FIB,
        12,
        j12.as_ref()
            .map_err(Clone::clone)
            .map(|rep| rep.total_black_energy.mass_units),
    );
    r.check(
        "J12(s2) retained mass units",
        FIB,
        21,
        j12.as_ref()
            .map_err(Clone::clone)
            .map(|rep| rep.total_capacitated.mass_units),
    );
    r.discrepancy(
        "J12(s2) sink u12",
        FIB,
        "163/450 xi + 5 mc2",
        j12.as_ref().map_err(Clone::clone).map(|rep| {
            rep.capacitation_at(v(12))
                .map_or("none".into(), |c| c.to_string())
        }),
    );
    r.discrepancy(
        "J12(s2) total black energy",
        FIB,
        "287/450 xi + 12 mc2",
        j12.as_ref()
            .map_err(Clone::clone)
            .map(|rep| rep.total_black_energy.to_string()),
    );

    // black arc algorithm
    let outcome = |spec: &SequenceSpec, n: usize| {
        src.jaco(spec, n).and_then(|g| jaco_black_arc_algorithm(&g))
    };
    r.check(
        "b*(J8(s1)) = 7",
        NAT,
        7,
        outcome(&s1, 8).map(|o| o.black_arc_count),
    );
    r.check_arcs(
        "J8(s1) black cloud",
        NAT,
        arcs(&NATURAL_CLOUD_8),
        outcome(&s1, 8).map(|o| o.cloud.cumulative),
    );
    r.check(
        "b*(J12(s2)) = 12",
        FIB,
        12,
        outcome(&s2, 12).map(|o| o.black_arc_count),
    );
    r.check_arcs(
        "J12(s2) black cloud",
        FIB,
        arcs(&FIBONACCI_CLOUD_12),
        outcome(&s2, 12).map(|o| o.cloud.cumulative),
    );
    r.check(
        "|A(J8(s1) solid)| = 9",
        NAT,
        9,
        outcome(&s1, 8).map(|o| o.solid.graph.arc_count()),
    );
    r.check(
        "|A(J12(s2) solid)| = 21",
        FIB,
        21,
        outcome(&s2, 12).map(|o| o.solid.graph.arc_count()),
    );
    r.check(
        "J8(s1) primitive degree sum",
        NAT,
        7,
        src.jaco(&s1, 8).and_then(|g| primitive_degree_sum(&g)),
    );
    r.check(
        "mod-3 graphs have no primitive holes",
        MODK,
        0,
        src.jaco(&SequenceSpec::Modulo(3), 30)
            .and_then(|g| primitive_degree_sum(&g)),
    );
    r.check(
        "J4(s3), k=4 primitive degree sum",
        MODK,
        1,
        src.jaco(&m4, 4).and_then(|g| primitive_degree_sum(&g)),
    );
    r.check(
        "b*(C6) = 0",
        FAM,
        0,
        black_arc_number_min(&UndirectedGraph::cycle(6)),
    );
    r.check(
        "b*(C5) = 1",
        FAM,
        1,
        black_arc_number_min(&UndirectedGraph::cycle(5)),
    );
    r.check(
        "b*(S1,5) = 0",
        FAM,
        0,
        black_arc_number_min(&UndirectedGraph::star(5)),
    );
    r.check(
        "b*(P7) = 0",
        FAM,
        0,
        black_arc_number_min(&UndirectedGraph::path(7)),
    );
    for n in [4, 5, 9] {
        r.check(
            format!("b*(J{n}(s3)), k=4 closed form"),
            MODK,
            mod4_closed_form(n).unwrap_or(usize::MAX),
            outcome(&m4, n).map(|o| o.black_arc_count),
        );
    }
    for (n, &expected) in (4..=35).zip(MOD5_TABLE.iter()) {
        r.check(
            format!("mod-5 table b*(J{n}(s3))"),
            MODK,
            expected,
            outcome(&m5, n).map(|o| o.black_arc_count),
        );
    }
    for n in 4..=35 {
        r.check_arcs(
            format!("mod-5 black cloud of J{n}(s3)"),
            MODK,
            printed_mod5_cloud(n),
            outcome(&m5, n).map(|o| o.cloud.cumulative),
        );
    }
    r.check(
        "J35(s3), k=5 black cloud size",
        MODK,
        19,
        outcome(&m5, 35).map(|o| o.black_arc_count),
    );

    r.outcomes
}

/// Exit status for a fixture run: success iff nothing failed.
pub fn all_passed(outcomes: &[FixtureOutcome]) -> bool {
    outcomes.iter().all(|o| o.status != FixtureStatus::Fail)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn printed_clouds_grow_with_n() {
        assert_eq!(printed_mod5_cloud(4), arcs(&[(3, 4)]));
        assert_eq!(printed_mod5_cloud(16).len(), 8);
        assert_eq!(printed_mod5_cloud(35).len(), 19);
    }

    #[test]
    fn warnings_carry_both_values() {
        let out = run_fixtures();
        let warn: Vec<_> = out
            .iter()
            .filter(|o| o.status == FixtureStatus::Warn)
            .collect();
        assert_eq!(warn.len(), 5);
        let fib = warn.iter().find(|o| o.name == "J12(s2) sink u12").unwrap();
        assert!(fib.detail.contains("163/450"));
        assert!(fib.detail.contains("371/1800 xi + 5 mc2"));
    }

    #[test]
    fn failures_are_exactly_the_misprinted_table_entries() {
        let failed: Vec<String> = run_fixtures()
            .into_iter()
            .filter(|o| o.status == FixtureStatus::Fail)
            .map(|o| o.name)
            .collect();
        let mut expected: Vec<String> = [16, 18, 31]
            .iter()
            .map(|n| format!("mod-5 table b*(J{n}(s3))"))
            .collect();
        expected.extend((31..=35).map(|n| format!("mod-5 black cloud of J{n}(s3)")));
        assert_eq!(failed, expected);
    }

    #[test]
    fn faulty_generator_is_caught() {
        let out = run_fixtures_with(&FaultySource);
        assert!(!all_passed(&out));
        let failures = out
            .iter()
            .filter(|o| o.status == FixtureStatus::Fail)
            .count();
        assert!(failures > 20, "{failures}");
    }
}
