use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use energy_graph::fixtures::{all_passed, run_fixtures_with, FaultySource, StandardSource};
use energy_graph::{
    binary_code_table, black_arc_number_min_with_limit, black_arc_table, block_black_counts,
    gray_code_table, jaco_black_arc_algorithm, jaco_graph, propagate, to_dot, EnergyGraph,
    SequenceSpec, UndirectedGraph, VertexId, DEFAULT_MIN_ORIENT_LIMIT,
};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "egraph",
    version,
    about = "Energy graphs, black arcs and black energy"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a Jaco-type graph and write it as JSON.
    Gen {
        /// s1 | fib | mod:<k> | list:a,b,...
        #[arg(long)]
        seq: SequenceSpec,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Run the propagation model and write the energy report.
    Propagate {
        #[arg(long = "in")]
        input: PathBuf,
        /// Report path; standard output when omitted.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Run the black arc algorithm on a Jaco-type graph.
    Blackarc {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Black arc numbers for a range of orders, as CSV.
    Table {
        #[arg(long)]
        seq: SequenceSpec,
        #[arg(long)]
        from: usize,
        #[arg(long)]
        to: usize,
    },
    /// Minimum black arc count over all acyclic orientations.
    MinOrient {
        /// Undirected `{"n","edges"}` or directed `{"n","arcs"}` JSON.
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, default_value_t = DEFAULT_MIN_ORIENT_LIMIT)]
        limit: usize,
    },
    /// Split into blocks and count black arcs per block.
    Decompose {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Render the propagation run as Graphviz DOT.
    Dot {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Check the library against the reference fixtures.
    Fixtures {
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
    /// Binary or Gray code table as CSV.
    Codes {
        #[arg(long)]
        bits: u32,
        #[arg(long)]
        gray: bool,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse().command) {
        Ok(code) => code,
        Err(e) if is_broken_pipe(&e) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<ExitCode> {
    let mut stdout = io::stdout().lock();
    match command {
        Command::Gen { seq, n, out } => {
            check_output(&out)?;
            if n == 0 {
                bail!("n must be at least 1");
            }
            let g = jaco_graph(&seq, n)?;
            write_json(&out, &serde_json::to_value(&g)?)?;
            writeln!(stdout, "n = {}", g.n())?;
            writeln!(stdout, "arcs = {}", g.arc_count())?;
            writeln!(stdout, "sources = {}", join(g.sources()))?;
            writeln!(stdout, "sinks = {}", join(g.sinks()))?;
        }
        Command::Propagate { input, report } => {
            check_optional_output(report.as_deref())?;
            let g = read_energy_graph(&input)?;
            let rep = propagate(&g)?;
            emit(&mut stdout, report.as_deref(), &serde_json::to_value(&rep)?)?;
            if report.is_some() {
                writeln!(stdout, "black energy = {}", rep.total_black_energy)?;
                writeln!(stdout, "capacitated = {}", rep.total_capacitated)?;
            }
        }
        Command::Blackarc { input, report } => {
            check_optional_output(report.as_deref())?;
            let g = read_energy_graph(&input)?;
            let outcome = jaco_black_arc_algorithm(&g)?;
            emit(
                &mut stdout,
                report.as_deref(),
                &serde_json::to_value(&outcome)?,
            )?;
            if report.is_some() {
                writeln!(stdout, "b = {}", outcome.black_arc_count)?;
            }
        }
        Command::Table { seq, from, to } => {
            if from > to {
                bail!("--from ({from}) must not exceed --to ({to})");
            }
            let mut w = csv::Writer::from_writer(&mut stdout);
            w.write_record(["n", "b_count"])?;
            for (n, b) in black_arc_table(&seq, from, to)? {
                w.write_record([n.to_string(), b.to_string()])?;
            }
            w.flush()?;
        }
        Command::MinOrient { input, limit } => {
            let g = read_undirected(&input)?;
            let b = black_arc_number_min_with_limit(&g, limit)?;
            writeln!(
                stdout,
                "{}",
                json!({ "n": g.n(), "edges": g.edge_count(), "min_black_arcs": b })
            )?;
        }
        Command::Decompose { input } => {
            let g = read_energy_graph(&input)?;
            let blocks: Vec<Value> = block_black_counts(&g)
                .into_iter()
                .map(|(arcs, count)| json!({ "arcs": arcs, "black_arcs": count }))
                .collect();
            let total: u64 = blocks.iter().filter_map(|b| b["black_arcs"].as_u64()).sum();
            let value = json!({ "blocks": blocks, "sum": total });
            writeln!(stdout, "{}", serde_json::to_string_pretty(&value)?)?;
        }
        Command::Dot { input, out } => {
            check_output(&out)?;
            let g = read_energy_graph(&input)?;
            let rep = propagate(&g)?;
            fs::write(&out, to_dot(&g, &rep))
                .with_context(|| format!("writing {}", out.display()))?;
        }
        Command::Fixtures { inject_fault } => {
            let outcomes = if inject_fault {
                run_fixtures_with(&FaultySource)
            } else {
                run_fixtures_with(&StandardSource)
            };
            for o in &outcomes {
                writeln!(stdout, "{o}")?;
            }
            let count = |s| outcomes.iter().filter(|o| o.status == s).count();
            use energy_graph::fixtures::FixtureStatus::*;
            writeln!(
                stdout,
                "{} passed, {} warned, {} failed",
                count(Pass),
                count(Warn),
                count(Fail)
            )?;
            if !all_passed(&outcomes) {
                return Ok(ExitCode::FAILURE);
            }
        }
        Command::Codes { bits, gray } => {
            let table = if gray {
                gray_code_table(bits)?
            } else {
                binary_code_table(bits)?
            };
            let mut w = csv::Writer::from_writer(&mut stdout);
            w.write_record(["bits", "decimal"])?;
            for row in &table.rows {
                w.write_record([row.bits.clone(), row.decimal.to_string()])?;
            }
            w.flush()?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn is_broken_pipe(e: &anyhow::Error) -> bool {
    e.chain().any(|c| {
        c.downcast_ref::<io::Error>().is_some_and(|io| io.kind() == io::ErrorKind::BrokenPipe)
            || c.downcast_ref::<csv::Error>().is_some_and(|c| {
                matches!(c.kind(), csv::ErrorKind::Io(io) if io.kind() == io::ErrorKind::BrokenPipe)
            })
    })
}

fn join(vs: Vec<VertexId>) -> String {
    vs.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn check_output(path: &Path) -> Result<()> {
    match path.parent() {
        Some(dir) if !dir.as_os_str().is_empty() && !dir.is_dir() => {
            bail!("output directory {} does not exist", dir.display())
        }
        _ => Ok(()),
    }
}

fn check_optional_output(path: Option<&Path>) -> Result<()> {
    path.map_or(Ok(()), check_output)
}

fn parse<T: serde::de::DeserializeOwned>(path: &Path, text: &str) -> Result<T> {
    serde_json::from_str(text).with_context(|| format!("parsing {}", path.display()))
}

fn read_energy_graph(path: &Path) -> Result<EnergyGraph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse(path, &text)
}

fn read_undirected(path: &Path) -> Result<UndirectedGraph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let value: Value = parse(path, &text)?;
    if value.get("edges").is_some() {
        return parse(path, &text);
    }
    let g: EnergyGraph = parse(path, &text)?;
    Ok(g.underlying())
}

fn write_json(path: &Path, value: &Value) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

fn emit(stdout: &mut impl Write, path: Option<&Path>, value: &Value) -> Result<()> {
    match path {
        Some(p) => write_json(p, value),
        None => Ok(writeln!(
            stdout,
            "{}",
            serde_json::to_string_pretty(value)?
        )?),
    }
}
