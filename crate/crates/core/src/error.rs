use thiserror::Error;

use crate::graph::{Arc, VertexId, Violation};

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not an energy graph: {}", format_violations(.0))]
    InvalidGraph(Vec<Violation>),

    #[error("invalid undirected graph: {0}")]
    InvalidUndirected(String),

    #[error("start set is not independent: {0} and {1} are adjacent")]
    StartSetNotIndependent(VertexId, VertexId),

    #[error("start set is empty or names a vertex outside 1..={n}")]
    InvalidStartSet { n: usize },

    #[error("{count} vertices are not reachable from the start set")]
    UncoveredVertices { count: usize },

    #[error("graph is not connected")]
    NotConnected,

    #[error("size guard exceeded: {n} vertices, limit is {limit}")]
    SizeGuard { n: usize, limit: usize },

    #[error("sequence term a_{index} is out of range for a list of {len} terms")]
    TermOutOfRange { index: usize, len: usize },

    #[error("sequence term a_{0} does not fit in 64 bits")]
    TermOverflow(usize),

    #[error(
        "invalid sequence spec {spec:?}: {reason} (expected s1 | fib | mod:<k> | list:<a1,a2,...>)"
    )]
    SequenceSyntax { spec: String, reason: String },

    #[error("graph needs at least {min} vertices, got {n}")]
    TooSmall { n: usize, min: usize },

    #[error("bit width {0} is outside 1..=20")]
    BitWidth(u32),

    #[error("out-neighbourhood of {0} is not a consecutive interval starting at the next vertex")]
    NotJacoType(VertexId),

    #[error("cloud arc {0} is not an arc of the graph")]
    ForeignArc(Arc),

    #[error("graph has no source vertex")]
    NoSources,

    #[error("invalid rational {0:?}")]
    RationalSyntax(String),
}

fn format_violations(v: &[Violation]) -> String {
    v.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("; ")
}
