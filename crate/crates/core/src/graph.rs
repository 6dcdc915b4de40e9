//! Simple, finite, undirected graphs over `v_{i,j}` vertex labels.
//!
//! Graphs are values: every mutating operation returns a new graph.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The vertex `v_{class, ordinal}`.
///
/// Ordering is lexicographic on `(class, ordinal)`, which fixes the canonical
/// orientation of every stored edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct VertexLabel {
    #[serde(rename = "class")]
    pub class_index: u32,
    pub ordinal: u32,
}

impl VertexLabel {
    pub const fn new(class_index: u32, ordinal: u32) -> Self {
        Self {
            class_index,
            ordinal,
        }
    }

    /// Identifier used in DOT and JSON output, e.g. `v_2_1`.
    pub fn id(&self) -> String {
        format!("v_{}_{}", self.class_index, self.ordinal)
    }

    pub fn parse_id(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad vertex id {s:?}"));
        let rest = s.strip_prefix("v_").ok_or_else(bad)?;
        let (i, j) = rest.split_once('_').ok_or_else(bad)?;
        let class_index = i.parse().map_err(|_| bad())?;
        let ordinal = j.parse().map_err(|_| bad())?;
        Ok(Self::new(class_index, ordinal))
    }
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v_{}_{}", self.class_index, self.ordinal)
    }
}

/// Shorthand for `VertexLabel::new`.
pub const fn v(class_index: u32, ordinal: u32) -> VertexLabel {
    VertexLabel::new(class_index, ordinal)
}

/// An undirected edge with endpoints stored in ascending order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge(VertexLabel, VertexLabel);

impl Edge {
    /// Returns `None` for a self-loop.
    pub fn new(a: VertexLabel, b: VertexLabel) -> Option<Self> {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => Some(Edge(a, b)),
            std::cmp::Ordering::Greater => Some(Edge(b, a)),
            std::cmp::Ordering::Equal => None,
        }
    }

    pub fn endpoints(&self) -> (VertexLabel, VertexLabel) {
        (self.0, self.1)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Graph {
    vertices: BTreeSet<VertexLabel>,
    edges: BTreeSet<Edge>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphStats {
    pub order: usize,
    pub size: usize,
    /// Ascending.
    pub degree_sequence: Vec<usize>,
    pub connected: bool,
    pub acyclic: bool,
}

impl Graph {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Edgeless graph on the given vertices.
    pub fn with_vertices<I: IntoIterator<Item = VertexLabel>>(vertices: I) -> Self {
        Self {
            vertices: vertices.into_iter().collect(),
            edges: BTreeSet::new(),
        }
    }

    pub fn from_edges<I, E>(vertices: I, edges: E) -> Result<Self>
    where
        I: IntoIterator<Item = VertexLabel>,
        E: IntoIterator<Item = (VertexLabel, VertexLabel)>,
    {
        let pairs: Vec<_> = edges.into_iter().collect();
        Self::with_vertices(vertices).add_edges(&pairs)
    }

    /// Returns a new graph with the given edges added. Re-adding an edge is a no-op.
    pub fn add_edges(&self, pairs: &[(VertexLabel, VertexLabel)]) -> Result<Self> {
        let mut out = self.clone();
        for &(a, b) in pairs {
            for x in [a, b] {
                if !out.vertices.contains(&x) {
                    return Err(Error::UnknownVertex(x));
                }
            }
            let e = Edge::new(a, b).ok_or(Error::LoopForbidden(a))?;
            out.edges.insert(e);
        }
        Ok(out)
    }

    pub fn remove_edge(&self, a: VertexLabel, b: VertexLabel) -> Self {
        let mut out = self.clone();
        if let Some(e) = Edge::new(a, b) {
            out.edges.remove(&e);
        }
        out
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexLabel> + '_ {
        self.vertices.iter().copied()
    }

    pub fn edges(&self) -> impl Iterator<Item = (VertexLabel, VertexLabel)> + '_ {
        self.edges.iter().map(Edge::endpoints)
    }

    pub fn contains_vertex(&self, x: VertexLabel) -> bool {
        self.vertices.contains(&x)
    }

    pub fn has_edge(&self, a: VertexLabel, b: VertexLabel) -> bool {
        Edge::new(a, b).is_some_and(|e| self.edges.contains(&e))
    }

    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn adjacency(&self) -> BTreeMap<VertexLabel, Vec<VertexLabel>> {
        let mut adj: BTreeMap<_, Vec<_>> = self.vertices.iter().map(|&x| (x, Vec::new())).collect();
        for (a, b) in self.edges() {
            adj.get_mut(&a).expect("endpoint in vertex set").push(b);
            adj.get_mut(&b).expect("endpoint in vertex set").push(a);
        }
        adj
    }

    pub fn degree(&self, x: VertexLabel) -> usize {
        self.edges().filter(|&(a, b)| a == x || b == x).count()
    }

    pub fn degrees(&self) -> BTreeMap<VertexLabel, usize> {
        let mut deg: BTreeMap<_, _> = self.vertices.iter().map(|&x| (x, 0usize)).collect();
        for (a, b) in self.edges() {
            *deg.get_mut(&a).unwrap() += 1;
            *deg.get_mut(&b).unwrap() += 1;
        }
        deg
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().values().copied().max().unwrap_or(0)
    }

    pub fn component_count(&self) -> usize {
        let adj = self.adjacency();
        let mut seen = BTreeSet::new();
        let mut count = 0;
        for &start in &self.vertices {
            if seen.insert(start) {
                count += 1;
                let mut queue = VecDeque::from([start]);
                while let Some(x) = queue.pop_front() {
                    for &y in &adj[&x] {
                        if seen.insert(y) {
                            queue.push_back(y);
                        }
                    }
                }
            }
        }
        count
    }

    /// Order ≤ 1 counts as connected.
    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    pub fn is_acyclic(&self) -> bool {
        self.size() + self.component_count() == self.order()
    }

    pub fn is_tree(&self) -> bool {
        self.order() >= 1 && self.is_connected() && self.is_acyclic()
    }

    pub fn stats(&self) -> GraphStats {
        let mut degree_sequence: Vec<usize> = self.degrees().into_values().collect();
        degree_sequence.sort_unstable();
        GraphStats {
            order: self.order(),
            size: self.size(),
            degree_sequence,
            connected: self.is_connected(),
            acyclic: self.is_acyclic(),
        }
    }

    pub fn has_triangle(&self) -> bool {
        let adj = self.adjacency();
        self.edges()
            .any(|(a, b)| adj[&a].iter().any(|c| *c != b && self.has_edge(*c, b)))
    }

    /// Whether the subgraph induced by `subset` is connected.
    pub fn induces_connected(&self, subset: &[VertexLabel]) -> bool {
        let Some(&start) = subset.first() else {
            return true;
        };
        let inside: BTreeSet<_> = subset.iter().copied().collect();
        let mut seen = BTreeSet::from([start]);
        let mut stack = vec![start];
        while let Some(x) = stack.pop() {
            for &y in &inside {
                if !seen.contains(&y) && self.has_edge(x, y) {
                    seen.insert(y);
                    stack.push(y);
                }
            }
        }
        seen.len() == inside.len()
    }

    /// Whether every edge of `self` is an edge of `other`.
    pub fn is_edge_subgraph_of(&self, other: &Graph) -> bool {
        self.vertices.is_subset(&other.vertices) && self.edges.is_subset(&other.edges)
    }
}

/// Decodes a Prüfer sequence over `1..=n` (with `n = seq.len() + 2`) into a
/// labelled tree on vertices `v_{1,1}..v_{1,n}`.
pub fn tree_from_prufer(seq: &[u32]) -> Result<Graph> {
    let n = seq.len() + 2;
    if let Some(&bad) = seq.iter().find(|&&x| x == 0 || x as usize > n) {
        return Err(Error::Parse(format!("Prüfer entry {bad} outside 1..={n}")));
    }
    let mut degree = vec![1usize; n + 1];
    for &x in seq {
        degree[x as usize] += 1;
    }
    let mut leaves: BTreeSet<usize> = (1..=n).filter(|&i| degree[i] == 1).collect();
    let mut pairs = Vec::with_capacity(n - 1);
    for &x in seq {
        let leaf = leaves.pop_first().expect("a leaf always exists");
        pairs.push((v(1, leaf as u32), v(1, x)));
        degree[x as usize] -= 1;
        if degree[x as usize] == 1 {
            leaves.insert(x as usize);
        }
    }
    let last: Vec<usize> = leaves.into_iter().collect();
    pairs.push((v(1, last[0] as u32), v(1, last[1] as u32)));
    Graph::from_edges((1..=n as u32).map(|j| v(1, j)), pairs)
}
