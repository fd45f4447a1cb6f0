//! Graphviz rendering of a propagation run.

use std::fmt::Write;

use crate::graph::EnergyGraph;
use crate::propagation::PropagationReport;

/// DOT digraph: vertices carry their arrival strings, black arcs are dashed
/// and labelled with the energy they dissipate.
pub fn to_dot(graph: &EnergyGraph, report: &PropagationReport) -> String {
    let mut out = String::from("digraph energy {\n  rankdir=LR;\n  node [shape=circle];\n");
    for (v, s) in report.arrival_strings.iter() {
        let times: Vec<String> = s.times.iter().map(u32::to_string).collect();
        let _ = writeln!(
            out,
            "  {} [label=\"{}\\n<{}>\"];",
            v.index(),
            v,
            times.join(",")
        );
    }
    for arc in graph.arcs() {
        let (t, h) = (arc.tail.index(), arc.head.index());
        match report.dissipation_on(*arc) {
            Some(e) => {
                let _ = writeln!(out, "  {t} -> {h} [style=dashed, label=\"{e}\"];");
            }
            None => {
                let _ = writeln!(out, "  {t} -> {h};");
            }
        }
    }
    out.push_str("}\n");
    out
}
