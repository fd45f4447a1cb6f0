//! Energy graphs and their undirected counterparts.
//!
//! An [`EnergyGraph`] is a simple digraph on `u1..un` in which every arc
//! `(ui, uj)` satisfies `i < j`. The labeling is therefore a topological
//! order, `u1` is always a source and `un` is always a sink.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::ops::{Index, IndexMut};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// 1-based vertex label `u_i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexId(usize);

impl VertexId {
    pub fn new(index: usize) -> Option<Self> {
        (index >= 1).then_some(Self(index))
    }

    pub fn index(self) -> usize {
        self.0
    }

    pub(crate) fn slot(self) -> usize {
        self.0 - 1
    }

    pub(crate) fn from_slot(slot: usize) -> Self {
        Self(slot + 1)
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "u{}", self.0)
    }
}

/// Directed arc `(tail, head)`. Serialized as `[tail, head]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "[usize; 2]", into = "[usize; 2]")]
pub struct Arc {
    pub tail: VertexId,
    pub head: VertexId,
}

impl Arc {
    /// Panics if either index is zero.
    pub fn new(tail: usize, head: usize) -> Self {
        Self {
            tail: VertexId::new(tail).expect("vertex labels are 1-based"),
            head: VertexId::new(head).expect("vertex labels are 1-based"),
        }
    }
}

impl From<(usize, usize)> for Arc {
    fn from((t, h): (usize, usize)) -> Self {
        Self::new(t, h)
    }
}

impl From<[usize; 2]> for Arc {
    fn from([t, h]: [usize; 2]) -> Self {
        // Zero labels survive deserialization so that validation can report them.
        Self {
            tail: VertexId(t),
            head: VertexId(h),
        }
    }
}

impl From<Arc> for [usize; 2] {
    fn from(a: Arc) -> Self {
        [a.tail.0, a.head.0]
    }
}

impl fmt::Display for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.tail, self.head)
    }
}

/// Dense per-vertex storage indexed by [`VertexId`]. Serialized as a plain array.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexMap<T>(Vec<T>);

impl<T> VertexMap<T> {
    pub fn from_vec(values: Vec<T>) -> Self {
        Self(values)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (VertexId, &T)> {
        self.0
            .iter()
            .enumerate()
            .map(|(i, t)| (VertexId::from_slot(i), t))
    }

    pub fn values(&self) -> &[T] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<T> {
        self.0
    }
}

impl<T> Index<VertexId> for VertexMap<T> {
    type Output = T;

    fn index(&self, v: VertexId) -> &T {
        &self.0[v.slot()]
    }
}

impl<T> IndexMut<VertexId> for VertexMap<T> {
    fn index_mut(&mut self, v: VertexId) -> &mut T {
        &mut self.0[v.slot()]
    }
}

/// A broken energy-graph invariant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    OutOfRange { arc: [usize; 2], n: usize },
    SelfLoop(usize),
    Backward { arc: [usize; 2] },
    Duplicate { arc: [usize; 2] },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::OutOfRange { arc: [i, j], n } => {
                write!(f, "arc ({i},{j}) leaves the vertex range 1..={n}")
            }
            Violation::SelfLoop(i) => write!(f, "self-loop at u{i}"),
            Violation::Backward { arc: [i, j] } => write!(f, "arc ({i},{j}) has tail > head"),
            Violation::Duplicate { arc: [i, j] } => write!(f, "arc ({i},{j}) appears twice"),
        }
    }
}

/// Unvalidated JSON form: `{"n": int, "arcs": [[i, j], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArcList {
    pub n: usize,
    pub arcs: Vec<[usize; 2]>,
}

/// Checks every energy-graph invariant and lists the ones that fail.
pub fn validate(list: &ArcList) -> Vec<Violation> {
    let mut violations = Vec::new();
    let mut seen = BTreeSet::new();
    for &[i, j] in &list.arcs {
        if i == 0 || j == 0 || i > list.n || j > list.n {
            violations.push(Violation::OutOfRange {
                arc: [i, j],
                n: list.n,
            });
        } else if i == j {
            violations.push(Violation::SelfLoop(i));
        } else if i > j {
            violations.push(Violation::Backward { arc: [i, j] });
        } else if !seen.insert((i, j)) {
            violations.push(Violation::Duplicate { arc: [i, j] });
        }
    }
    violations
}

/// Simple DAG on `u1..un` with every arc pointing from a lower to a higher label.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "ArcList", into = "ArcList")]
pub struct EnergyGraph {
    n: usize,
    arcs: Vec<Arc>,
    out: Vec<Vec<VertexId>>,
    inc: Vec<Vec<VertexId>>,
}

impl EnergyGraph {
    pub fn new<A: Into<Arc>>(n: usize, arcs: impl IntoIterator<Item = A>) -> Result<Self> {
        let list = ArcList {
            n,
            arcs: arcs
                .into_iter()
                .map(|a| <[usize; 2]>::from(a.into()))
                .collect(),
        };
        Self::try_from(list)
    }

    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Self::from_sorted_unchecked(n, Vec::new())
    }

    /// Arcs must already satisfy the invariants and be sorted.
    pub(crate) fn from_sorted_unchecked(n: usize, arcs: Vec<Arc>) -> Self {
        debug_assert!(validate(&ArcList {
            n,
            arcs: arcs.iter().map(|&a| a.into()).collect()
        })
        .is_empty());
        debug_assert!(arcs.windows(2).all(|w| w[0] < w[1]));
        let mut out = vec![Vec::new(); n];
        let mut inc = vec![Vec::new(); n];
        for a in &arcs {
            out[a.tail.slot()].push(a.head);
            inc[a.head.slot()].push(a.tail);
        }
        Self { n, arcs, out, inc }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Arcs sorted by `(tail, head)`.
    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        (1..=self.n).map(VertexId)
    }

    pub fn contains(&self, v: VertexId) -> bool {
        (1..=self.n).contains(&v.0)
    }

    /// Heads of `v`, ascending.
    pub fn out_neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.out[v.slot()]
    }

    /// Tails of `v`, ascending.
    pub fn in_neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.inc[v.slot()]
    }

    pub fn out_degree(&self, v: VertexId) -> usize {
        self.out[v.slot()].len()
    }

    pub fn in_degree(&self, v: VertexId) -> usize {
        self.inc[v.slot()].len()
    }

    pub fn has_arc(&self, arc: Arc) -> bool {
        self.contains(arc.tail) && self.out[arc.tail.slot()].binary_search(&arc.head).is_ok()
    }

    pub fn out_degrees(&self) -> Vec<usize> {
        self.out.iter().map(Vec::len).collect()
    }

    /// Vertices with in-degree 0, ascending. Nonempty when `n >= 1`.
    pub fn sources(&self) -> Vec<VertexId> {
        self.vertices()
            .filter(|&v| self.in_degree(v) == 0)
            .collect()
    }

    /// Vertices with out-degree 0, ascending. Nonempty when `n >= 1`.
    pub fn sinks(&self) -> Vec<VertexId> {
        self.vertices()
            .filter(|&v| self.out_degree(v) == 0)
            .collect()
    }

    /// Re-checks the invariants on the stored arcs.
    pub fn validate(&self) -> Vec<Violation> {
        validate(&self.to_arc_list())
    }

    pub fn to_arc_list(&self) -> ArcList {
        ArcList {
            n: self.n,
            arcs: self.arcs.iter().map(|&a| a.into()).collect(),
        }
    }

    pub fn underlying(&self) -> UndirectedGraph {
        UndirectedGraph::from_sorted_unchecked(
            self.n,
            self.arcs.iter().map(|a| (a.tail.0, a.head.0)).collect(),
        )
    }

    /// Copy of the graph without the given arcs.
    pub fn without_arcs(&self, removed: &BTreeSet<Arc>) -> Self {
        let arcs = self
            .arcs
            .iter()
            .copied()
            .filter(|a| !removed.contains(a))
            .collect();
        Self::from_sorted_unchecked(self.n, arcs)
    }

    /// True when every out-neighbourhood is `u_{i+1}..u_{i+d}`, the arc
    /// shape produced by an integer sequence.
    pub fn jaco_violation(&self) -> Option<VertexId> {
        self.vertices().find(|&v| {
            self.out_neighbors(v)
                .iter()
                .enumerate()
                .any(|(k, h)| h.0 != v.0 + k + 1)
        })
    }
}

impl TryFrom<ArcList> for EnergyGraph {
    type Error = Error;

    fn try_from(list: ArcList) -> Result<Self> {
        let violations = validate(&list);
        if !violations.is_empty() {
            return Err(Error::InvalidGraph(violations));
        }
        let mut arcs: Vec<Arc> = list.arcs.into_iter().map(Arc::from).collect();
        arcs.sort_unstable();
        Ok(Self::from_sorted_unchecked(list.n, arcs))
    }
}

impl From<EnergyGraph> for ArcList {
    fn from(g: EnergyGraph) -> Self {
        g.to_arc_list()
    }
}

/// Unvalidated JSON form: `{"n": int, "edges": [[i, j], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeList {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

/// Simple undirected graph on vertices `1..=n`. Edges are stored as `(i, j)` with `i < j`, sorted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "EdgeList", into = "EdgeList")]
pub struct UndirectedGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl UndirectedGraph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut norm = Vec::new();
        for (a, b) in edges {
            if a == 0 || b == 0 || a > n || b > n {
                return Err(Error::InvalidUndirected(format!(
                    "edge {{{a},{b}}} leaves the vertex range 1..={n}"
                )));
            }
            if a == b {
                return Err(Error::InvalidUndirected(format!("loop at vertex {a}")));
            }
            norm.push((a.min(b), a.max(b)));
        }
        norm.sort_unstable();
        if let Some(w) = norm.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidUndirected(format!(
                "edge {{{},{}}} appears twice",
                w[0].0, w[0].1
            )));
        }
        Ok(Self::from_sorted_unchecked(n, norm))
    }

    pub(crate) fn from_sorted_unchecked(n: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in &edges {
            adj[a - 1].push(b);
            adj[b - 1].push(a);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Self { n, edges, adj }
    }

    /// Path `1 - 2 - ... - n`.
    pub fn path(n: usize) -> Self {
        Self::from_sorted_unchecked(n, (1..n).map(|i| (i, i + 1)).collect())
    }

    /// Cycle `1 - 2 - ... - n - 1`, `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a simple cycle needs at least 3 vertices");
        let mut edges: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
        edges.push((1, n));
        edges.sort_unstable();
        Self::from_sorted_unchecked(n, edges)
    }

    /// Star `S_{1,leaves}` with centre 1.
    pub fn star(leaves: usize) -> Self {
        Self::from_sorted_unchecked(leaves + 1, (2..=leaves + 1).map(|j| (1, j)).collect())
    }

    pub fn complete(n: usize) -> Self {
        let edges = (1..=n)
            .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
            .collect();
        Self::from_sorted_unchecked(n, edges)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v - 1]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v - 1].len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        (1..=self.n).contains(&a) && self.adj[a - 1].binary_search(&b).is_ok()
    }

    /// Component index per vertex (0-based slots), components numbered by smallest member.
    pub fn components(&self) -> Vec<usize> {
        let mut comp = vec![usize::MAX; self.n];
        let mut next = 0;
        for s in 0..self.n {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = next;
            let mut queue = VecDeque::from([s + 1]);
            while let Some(v) = queue.pop_front() {
                for &w in self.neighbors(v) {
                    if comp[w - 1] == usize::MAX {
                        comp[w - 1] = next;
                        queue.push_back(w);
                    }
                }
            }
            next += 1;
        }
        comp
    }

    pub fn is_connected(&self) -> bool {
        self.components().iter().all(|&c| c == 0)
    }

    /// Two-colouring by BFS parity.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let mut side: Vec<Option<bool>> = vec![None; self.n];
        for s in 1..=self.n {
            if side[s - 1].is_some() {
                continue;
            }
            side[s - 1] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                let here = side[v - 1].unwrap();
                for &w in self.neighbors(v) {
                    match side[w - 1] {
                        None => {
                            side[w - 1] = Some(!here);
                            queue.push_back(w);
                        }
                        Some(s) if s == here => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(side.into_iter().map(Option::unwrap).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }
}

impl TryFrom<EdgeList> for UndirectedGraph {
    type Error = Error;

    fn try_from(list: EdgeList) -> Result<Self> {
        Self::new(list.n, list.edges.into_iter().map(|[a, b]| (a, b)))
    }
}

impl From<UndirectedGraph> for EdgeList {
    fn from(g: UndirectedGraph) -> Self {
        EdgeList {
            n: g.n,
            edges: g.edges.iter().map(|&(a, b)| [a, b]).collect(),
        }
    }
}
