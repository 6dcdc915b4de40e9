//! Graph constructions realising a colour cluster as a proper colouring.
//!
//! Every constructor labels the vertices of class `i` as `v_{i,1}..v_{i,r_i}`
//! and colours them `i`. The first vertex of each class, `v_{i,1}`, is the
//! class representative.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::cluster::{ColourCluster, ColouredGraph};
use crate::error::{Error, Result};
use crate::graph::{v, Graph, VertexLabel};

pub const DEFAULT_RAINBOW_MAX_ORDER: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EmbodimentKind {
    Type1Tree,
    Type2Tree,
    Type1Complete,
    Type2Complete,
    Thorn,
    MultipartiteMax,
    OddCycle,
    PathType,
    Null,
}

impl EmbodimentKind {
    pub const ALL: [EmbodimentKind; 9] = [
        Self::Type1Tree,
        Self::Type2Tree,
        Self::Type1Complete,
        Self::Type2Complete,
        Self::Thorn,
        Self::MultipartiteMax,
        Self::OddCycle,
        Self::PathType,
        Self::Null,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            Self::Type1Tree => "type1_tree",
            Self::Type2Tree => "type2_tree",
            Self::Type1Complete => "type1_complete",
            Self::Type2Complete => "type2_complete",
            Self::Thorn => "thorn",
            Self::MultipartiteMax => "multipartite_max",
            Self::OddCycle => "odd_cycle",
            Self::PathType => "path_type",
            Self::Null => "null",
        }
    }
}

impl fmt::Display for EmbodimentKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for EmbodimentKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| Error::UnknownName {
                what: "embodiment kind",
                value: s.to_string(),
            })
    }
}

/// Which tree construction a completion starts from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum TreeType {
    TypeI,
    TypeII,
}

impl TreeType {
    fn name(self) -> &'static str {
        match self {
            TreeType::TypeI => "Type-I",
            TreeType::TypeII => "Type-II",
        }
    }
}

/// Builds any kind from a cluster. `OddCycle` expects the cluster `[t, t, 1]`.
pub fn build(kind: EmbodimentKind, c: &ColourCluster) -> Result<ColouredGraph> {
    match kind {
        EmbodimentKind::Type1Tree => type1_tree(c),
        EmbodimentKind::Type2Tree => type2_tree(c),
        EmbodimentKind::Type1Complete => complete_embodiment(&type1_tree(c)?, TreeType::TypeI),
        EmbodimentKind::Type2Complete => complete_embodiment(&type2_tree(c)?, TreeType::TypeII),
        EmbodimentKind::Thorn => thorn_embodiment(c),
        EmbodimentKind::MultipartiteMax => multipartite_max(c),
        EmbodimentKind::OddCycle => match c.sizes() {
            &[a, b, 1] if a == b => odd_cycle_embodiment(a),
            _ => Err(Error::InvalidColouring(format!(
                "odd cycle needs a cluster of the form [t,t,1], got {c}"
            ))),
        },
        EmbodimentKind::PathType => path_type_tree(c),
        EmbodimentKind::Null => null_embodiment(c),
    }
}

fn require_two(c: &ColourCluster, what: &'static str) -> Result<()> {
    if c.len() < 2 {
        Err(Error::TooFewClasses(what))
    } else {
        Ok(())
    }
}

fn from_pairs(c: &ColourCluster, pairs: Vec<(VertexLabel, VertexLabel)>) -> Result<ColouredGraph> {
    let g = Graph::from_edges(c.labels(), pairs)?;
    ColouredGraph::by_class(g, c.clone())
}

fn ell(c: &ColourCluster) -> u32 {
    c.len() as u32
}

/// `v_{1,1}` joined to every vertex of classes 2..ℓ, and `v_{2,1}` joined to
/// the remaining vertices of class 1.
pub fn type1_tree(c: &ColourCluster) -> Result<ColouredGraph> {
    require_two(c, "Type-I")?;
    let mut pairs = Vec::new();
    for j in 2..=ell(c) {
        for k in 1..=c.size_of(j) {
            pairs.push((v(1, 1), v(j, k)));
        }
    }
    for i in 2..=c.size_of(1) {
        pairs.push((v(1, i), v(2, 1)));
    }
    from_pairs(c, pairs)
}

/// `v_{i,1}` joined to all of class `i+1`, and `v_{2,1}` joined to the rest of
/// class 1; the representatives form the path `v_{1,1} v_{2,1} … v_{ℓ,1}`.
pub fn type2_tree(c: &ColourCluster) -> Result<ColouredGraph> {
    require_two(c, "Type-II")?;
    let mut pairs = Vec::new();
    for i in 1..ell(c) {
        for j in 1..=c.size_of(i + 1) {
            pairs.push((v(i, 1), v(i + 1, j)));
        }
    }
    for j in 2..=c.size_of(1) {
        pairs.push((v(2, 1), v(1, j)));
    }
    from_pairs(c, pairs)
}

fn representatives(c: &ColourCluster) -> Vec<VertexLabel> {
    (1..=ell(c)).map(|i| v(i, 1)).collect()
}

/// Closes the representatives `v_{1,1}..v_{ℓ,1}` into a clique, adding
/// ½(ℓ−1)(ℓ−2) edges. For ℓ = 2 the tree is returned unchanged.
pub fn complete_embodiment(cg: &ColouredGraph, kind: TreeType) -> Result<ColouredGraph> {
    let c = cg.cluster();
    require_two(c, kind.name())?;
    let reps = representatives(c);
    let g = cg.graph();
    if let Some(missing) = reps.iter().find(|&&x| !g.contains_vertex(x)) {
        return Err(Error::NotEmbodimentTree(
            kind.name(),
            format!("representative {missing} missing"),
        ));
    }
    if !g.is_tree() {
        return Err(Error::NotEmbodimentTree(
            kind.name(),
            "input is not a tree".into(),
        ));
    }
    // The representatives must already induce the star (Type-I) or the path (Type-II).
    let l = reps.len();
    let induced_ok = (0..l).all(|a| {
        (a + 1..l).all(|b| {
            let expected = match kind {
                TreeType::TypeI => a == 0,
                TreeType::TypeII => b == a + 1,
            };
            g.has_edge(reps[a], reps[b]) == expected
        })
    });
    if !induced_ok {
        let shape = match kind {
            TreeType::TypeI => "star",
            TreeType::TypeII => "path",
        };
        return Err(Error::NotEmbodimentTree(
            kind.name(),
            format!("representatives do not induce the {shape}"),
        ));
    }
    let mut pairs = Vec::new();
    for a in 0..l {
        for b in a + 1..l {
            pairs.push((reps[a], reps[b]));
        }
    }
    cg.with_edges(&pairs)
}

/// The edgeless graph on `r_1` vertices of colour 1.
pub fn null_embodiment(c: &ColourCluster) -> Result<ColouredGraph> {
    if c.len() != 1 {
        return Err(Error::NotSingleClass);
    }
    from_pairs(c, Vec::new())
}

/// The complete ℓ-partite graph with parts of sizes `r_1..r_ℓ`.
pub fn multipartite_max(c: &ColourCluster) -> Result<ColouredGraph> {
    require_two(c, "complete multipartite embodiment")?;
    let labels: Vec<_> = c.labels().collect();
    let mut pairs = Vec::new();
    for (i, &a) in labels.iter().enumerate() {
        for &b in &labels[i + 1..] {
            if a.class_index != b.class_index {
                pairs.push((a, b));
            }
        }
    }
    from_pairs(c, pairs)
}

/// Clique on the representatives with the `r_i − 1` remaining vertices of
/// colour `i` hung as pendants on `v_{1,1}` (or on `v_{2,1}` when `i = 1`).
pub fn thorn_embodiment(c: &ColourCluster) -> Result<ColouredGraph> {
    require_two(c, "thorn embodiment")?;
    let reps = representatives(c);
    let mut pairs = Vec::new();
    for a in 0..reps.len() {
        for b in a + 1..reps.len() {
            pairs.push((reps[a], reps[b]));
        }
    }
    for i in 1..=ell(c) {
        let anchor = if i == 1 { v(2, 1) } else { v(1, 1) };
        for j in 2..=c.size_of(i) {
            pairs.push((anchor, v(i, j)));
        }
    }
    from_pairs(c, pairs)
}

/// `C_{2t+1}` coloured 1,2,1,2,…,1,2,3 around the cycle.
pub fn odd_cycle_embodiment(t: u32) -> Result<ColouredGraph> {
    if t < 2 {
        return Err(Error::OddCycleTooShort(t));
    }
    let mut order = Vec::new();
    for j in 1..=t {
        order.push(v(1, j));
        order.push(v(2, j));
    }
    order.push(v(3, 1));
    let n = order.len();
    let pairs = (0..n).map(|i| (order[i], order[(i + 1) % n])).collect();
    from_pairs(&ColourCluster::new(vec![t, t, 1])?, pairs)
}

/// The path visiting `labels` in order. Labels must cover the cluster exactly.
pub fn labelled_path(c: &ColourCluster, labels: &[VertexLabel]) -> Result<ColouredGraph> {
    let pairs: Vec<_> = labels.windows(2).map(|w| (w[0], w[1])).collect();
    let g = Graph::from_edges(labels.iter().copied(), pairs)?;
    if g.order() != labels.len() {
        return Err(Error::InvalidColouring("path repeats a vertex".into()));
    }
    ColouredGraph::by_class(g, c.clone())
}

/// Hamiltonian path with a proper colour sequence, built by repeatedly taking
/// the class with the most remaining vertices (lowest index on ties) among
/// those whose colour differs from the last vertex placed.
pub fn path_type_tree(c: &ColourCluster) -> Result<ColouredGraph> {
    require_two(c, "path-type construction")?;
    let mut remaining: Vec<u32> = c.sizes().to_vec();
    let mut next_ordinal = vec![1u32; c.len()];
    let mut seq = Vec::with_capacity(c.total() as usize);
    let mut last: Option<usize> = None;
    for placed in 0..c.total() {
        let pick = (0..c.len())
            .filter(|&i| Some(i) != last && remaining[i] > 0)
            .max_by_key(|&i| (remaining[i], std::cmp::Reverse(i)));
        let Some(i) = pick else {
            return Err(Error::PathTypeFailed {
                last: last.map_or(0, |i| i as u32 + 1),
                remaining: c.total() - placed,
            });
        };
        seq.push(v(i as u32 + 1, next_ordinal[i]));
        next_ordinal[i] += 1;
        remaining[i] -= 1;
        last = Some(i);
    }
    labelled_path(c, &seq)
}

/// Whether some connected induced subgraph of order ℓ has exactly one vertex
/// of each colour. Exhaustive over one-vertex-per-colour selections.
pub fn has_rainbow_connected_subgraph(cg: &ColouredGraph, max_order: usize) -> Result<bool> {
    let g = cg.graph();
    if g.order() > max_order {
        return Err(Error::TooLarge(format!(
            "order {} exceeds rainbow search bound {max_order}",
            g.order()
        )));
    }
    let l = cg.num_colours();
    let mut classes: Vec<Vec<VertexLabel>> = vec![Vec::new(); l];
    for (&x, &c) in cg.colouring() {
        classes[c as usize - 1].push(x);
    }
    let mut choice = Vec::with_capacity(l);
    Ok(rainbow_search(g, &classes, &mut choice))
}

fn rainbow_search(g: &Graph, classes: &[Vec<VertexLabel>], choice: &mut Vec<VertexLabel>) -> bool {
    if choice.len() == classes.len() {
        return g.induces_connected(choice);
    }
    for &x in &classes[choice.len()] {
        choice.push(x);
        let found = rainbow_search(g, classes, choice);
        choice.pop();
        if found {
            return true;
        }
    }
    false
}

/// The explicit path for the cluster `[6,4,3,2]` used to show that a proper
/// path need not contain a rainbow subpath.
pub fn rainbow_free_example() -> (ColourCluster, Vec<VertexLabel>) {
    let cluster = ColourCluster::new(vec![6, 4, 3, 2]).expect("valid cluster");
    let order = vec![
        v(1, 1),
        v(2, 1),
        v(1, 2),
        v(2, 2),
        v(1, 3),
        v(2, 3),
        v(1, 4),
        v(2, 4),
        v(1, 5),
        v(3, 1),
        v(1, 6),
        v(3, 2),
        v(4, 1),
        v(3, 3),
        v(4, 2),
    ];
    (cluster, order)
}
