//! Colour clusters, colourings and colour permutations.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexLabel};

/// Ordered colour-class sizes `r_1..r_ℓ`, every entry at least 1.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "ClusterJson", into = "ClusterJson")]
pub struct ColourCluster {
    sizes: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
struct ClusterJson {
    classes: Vec<u32>,
}

impl TryFrom<ClusterJson> for ColourCluster {
    type Error = Error;
    fn try_from(j: ClusterJson) -> Result<Self> {
        ColourCluster::new(j.classes)
    }
}

impl From<ColourCluster> for ClusterJson {
    fn from(c: ColourCluster) -> Self {
        ClusterJson { classes: c.sizes }
    }
}

impl ColourCluster {
    pub fn new(sizes: Vec<u32>) -> Result<Self> {
        if sizes.is_empty() {
            return Err(Error::EmptyCluster);
        }
        if sizes.contains(&0) {
            return Err(Error::InvalidClassSize("0".into()));
        }
        Ok(Self { sizes })
    }

    /// Parses `"5,4,3,3"`, a JSON array `[5,4,3,3]`, or `{"classes":[5,4,3,3]}`.
    pub fn parse(spec: &str) -> Result<Self> {
        let spec = spec.trim();
        if spec.is_empty() {
            return Err(Error::EmptyCluster);
        }
        if spec.starts_with('{') {
            return serde_json::from_str::<ClusterJson>(spec)
                .map_err(|e| Error::Parse(e.to_string()))
                .and_then(Self::try_from);
        }
        let body = spec
            .strip_prefix('[')
            .and_then(|s| s.strip_suffix(']'))
            .unwrap_or(spec)
            .trim();
        if body.is_empty() {
            return Err(Error::EmptyCluster);
        }
        let sizes = body
            .split(',')
            .map(|tok| {
                let tok = tok.trim();
                match tok.parse::<u32>() {
                    Ok(r) if r >= 1 => Ok(r),
                    _ => Err(Error::InvalidClassSize(tok.to_string())),
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(sizes)
    }

    pub fn sizes(&self) -> &[u32] {
        &self.sizes
    }

    /// ℓ, the number of colour classes.
    pub fn len(&self) -> usize {
        self.sizes.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `r_i` for 1-based `i`.
    pub fn size_of(&self, class: u32) -> u32 {
        self.sizes[class as usize - 1]
    }

    pub fn total(&self) -> u32 {
        self.sizes.iter().sum()
    }

    pub fn is_non_increasing(&self) -> bool {
        self.sizes.windows(2).all(|w| w[0] >= w[1])
    }

    /// Sorts into non-increasing order. The returned map sends each original
    /// class index to its new index; ties keep their original order.
    pub fn canonicalize(&self) -> (ColourCluster, PermutationMap) {
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by(|&a, &b| self.sizes[b].cmp(&self.sizes[a]));
        let mut image = vec![0u32; self.len()];
        for (new_pos, &old) in order.iter().enumerate() {
            image[old] = new_pos as u32 + 1;
        }
        let sizes = order.iter().map(|&i| self.sizes[i]).collect();
        (ColourCluster { sizes }, PermutationMap { image })
    }

    /// Every vertex label `v_{i,j}` implied by the cluster, in label order.
    pub fn labels(&self) -> impl Iterator<Item = VertexLabel> + '_ {
        self.sizes
            .iter()
            .enumerate()
            .flat_map(|(i, &r)| (1..=r).map(move |j| VertexLabel::new(i as u32 + 1, j)))
    }
}

impl fmt::Display for ColourCluster {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.sizes.iter().map(u32::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// Bijection on `1..=ℓ`; `image[i-1]` is the colour that `c_i` maps to.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct PermutationMap {
    image: Vec<u32>,
}

impl PermutationMap {
    pub fn new(image: Vec<u32>) -> Result<Self> {
        let l = image.len();
        let mut seen = vec![false; l + 1];
        for &x in &image {
            if x == 0 || x as usize > l || seen[x as usize] {
                return Err(Error::InvalidPermutation(format!(
                    "{image:?} is not a bijection on 1..={l}"
                )));
            }
            seen[x as usize] = true;
        }
        Ok(Self { image })
    }

    pub fn identity(l: usize) -> Self {
        Self {
            image: (1..=l as u32).collect(),
        }
    }

    pub fn image(&self) -> &[u32] {
        &self.image
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    pub fn apply(&self, colour: u32) -> u32 {
        self.image[colour as usize - 1]
    }

    /// `self ∘ first`: apply `first`, then `self`.
    pub fn after(&self, first: &PermutationMap) -> Result<PermutationMap> {
        if self.len() != first.len() {
            return Err(Error::InvalidPermutation(
                "length mismatch in composition".into(),
            ));
        }
        Ok(PermutationMap {
            image: first.image.iter().map(|&c| self.apply(c)).collect(),
        })
    }

    pub fn is_identity(&self) -> bool {
        self.image
            .iter()
            .enumerate()
            .all(|(i, &c)| c as usize == i + 1)
    }
}

impl fmt::Display for PermutationMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .image
            .iter()
            .enumerate()
            .map(|(i, c)| format!("{}->{}", i + 1, c))
            .collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Vertex → colour index.
pub type Colouring = BTreeMap<VertexLabel, u32>;

/// A graph with a colouring whose class cardinalities match a cluster.
///
/// The colouring need not be proper; index computations check that separately.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColouredGraph {
    graph: Graph,
    colouring: Colouring,
    cluster: ColourCluster,
}

impl ColouredGraph {
    pub fn new(graph: Graph, colouring: Colouring, cluster: ColourCluster) -> Result<Self> {
        let l = cluster.len() as u32;
        let mut weights = vec![0u32; cluster.len()];
        for x in graph.vertices() {
            let c = *colouring.get(&x).ok_or(Error::IncompleteColouring(x))?;
            if c == 0 || c > l {
                return Err(Error::InvalidColouring(format!(
                    "{x} has colour {c} outside 1..={l}"
                )));
            }
            weights[c as usize - 1] += 1;
        }
        if colouring.len() != graph.order() {
            return Err(Error::InvalidColouring(
                "colouring names vertices outside the graph".into(),
            ));
        }
        if weights != cluster.sizes() {
            return Err(Error::InvalidColouring(format!(
                "class weights {weights:?} differ from cluster {cluster}"
            )));
        }
        Ok(Self {
            graph,
            colouring,
            cluster,
        })
    }

    /// Builds the cluster from the colour weights; colours must be exactly `1..=ℓ`.
    pub fn from_colouring(graph: Graph, colouring: Colouring) -> Result<Self> {
        let l = colouring.values().copied().max().unwrap_or(0);
        let mut weights = vec![0u32; l as usize];
        for &c in colouring.values() {
            if c == 0 {
                return Err(Error::InvalidColouring("colour 0".into()));
            }
            weights[c as usize - 1] += 1;
        }
        let cluster = ColourCluster::new(weights).map_err(|_| {
            Error::InvalidColouring("colours are not a contiguous range from 1".into())
        })?;
        Self::new(graph, colouring, cluster)
    }

    /// Colours every vertex by its class index.
    pub fn by_class(graph: Graph, cluster: ColourCluster) -> Result<Self> {
        let colouring = graph.vertices().map(|x| (x, x.class_index)).collect();
        Self::new(graph, colouring, cluster)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn colouring(&self) -> &Colouring {
        &self.colouring
    }

    pub fn cluster(&self) -> &ColourCluster {
        &self.cluster
    }

    pub fn colour(&self, x: VertexLabel) -> u32 {
        self.colouring[&x]
    }

    pub fn num_colours(&self) -> usize {
        self.cluster.len()
    }

    /// Adds edges, keeping the colouring.
    pub fn with_edges(&self, pairs: &[(VertexLabel, VertexLabel)]) -> Result<Self> {
        Ok(Self {
            graph: self.graph.add_edges(pairs)?,
            colouring: self.colouring.clone(),
            cluster: self.cluster.clone(),
        })
    }

    pub(crate) fn with_graph(&self, graph: Graph) -> Self {
        Self {
            graph,
            colouring: self.colouring.clone(),
            cluster: self.cluster.clone(),
        }
    }
}

/// Relabels colour `i` as `m(i)` on every vertex.
pub fn apply_colour_map(cg: &ColouredGraph, m: &PermutationMap) -> Result<ColouredGraph> {
    PermutationMap::new(m.image().to_vec())?;
    if m.len() != cg.num_colours() {
        return Err(Error::InvalidPermutation(format!(
            "map on {} colours applied to a {}-colour graph",
            m.len(),
            cg.num_colours()
        )));
    }
    let colouring = cg
        .colouring
        .iter()
        .map(|(&x, &c)| (x, m.apply(c)))
        .collect();
    let mut sizes = vec![0u32; m.len()];
    for (i, &r) in cg.cluster.sizes().iter().enumerate() {
        sizes[m.image()[i] as usize - 1] = r;
    }
    Ok(ColouredGraph {
        graph: cg.graph.clone(),
        colouring,
        cluster: ColourCluster { sizes },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::v;

    fn k3() -> ColouredGraph {
        let g = Graph::from_edges(
            [v(1, 1), v(2, 1), v(3, 1)],
            [(v(1, 1), v(2, 1)), (v(2, 1), v(3, 1)), (v(1, 1), v(3, 1))],
        )
        .unwrap();
        ColouredGraph::by_class(g, ColourCluster::new(vec![1, 1, 1]).unwrap()).unwrap()
    }

    #[test]
    fn parse_forms() {
        assert_eq!(
            ColourCluster::parse("5,4,3,3").unwrap().sizes(),
            &[5, 4, 3, 3]
        );
        assert_eq!(ColourCluster::parse("1").unwrap().sizes(), &[1]);
        assert_eq!(ColourCluster::parse("[2, 1]").unwrap().sizes(), &[2, 1]);
        assert_eq!(
            ColourCluster::parse(r#"{"classes":[5,4,3,3]}"#)
                .unwrap()
                .sizes(),
            &[5, 4, 3, 3]
        );
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            ColourCluster::parse("3,0"),
            Err(Error::InvalidClassSize(_))
        ));
        assert!(matches!(
            ColourCluster::parse("3,-1"),
            Err(Error::InvalidClassSize(_))
        ));
        assert!(matches!(
            ColourCluster::parse("2.5"),
            Err(Error::InvalidClassSize(_))
        ));
        assert_eq!(ColourCluster::parse(""), Err(Error::EmptyCluster));
        assert_eq!(ColourCluster::parse("[]"), Err(Error::EmptyCluster));
    }

    #[test]
    fn json_form() {
        let c = ColourCluster::new(vec![5, 4, 3, 3]).unwrap();
        assert_eq!(
            serde_json::to_string(&c).unwrap(),
            r#"{"classes":[5,4,3,3]}"#
        );
    }

    #[test]
    fn canonicalize_examples() {
        let (c, m) = ColourCluster::new(vec![3, 5, 4]).unwrap().canonicalize();
        assert_eq!(c.sizes(), &[5, 4, 3]);
        assert_eq!(m.image(), &[3, 1, 2]);

        let (c, m) = ColourCluster::new(vec![5, 4, 3, 3]).unwrap().canonicalize();
        assert_eq!(c.sizes(), &[5, 4, 3, 3]);
        assert!(m.is_identity());

        let (c, m) = ColourCluster::new(vec![2, 2]).unwrap().canonicalize();
        assert_eq!(c.sizes(), &[2, 2]);
        assert!(m.is_identity());
    }

    #[test]
    fn permutation_validation() {
        assert!(PermutationMap::new(vec![2, 1, 3]).is_ok());
        assert!(PermutationMap::new(vec![1, 1, 3]).is_err());
        assert!(PermutationMap::new(vec![0, 1]).is_err());
        assert!(PermutationMap::new(vec![1, 3]).is_err());
    }

    #[test]
    fn identity_map_is_noop() {
        let cg = k3();
        assert_eq!(
            apply_colour_map(&cg, &PermutationMap::identity(3)).unwrap(),
            cg
        );
    }

    #[test]
    fn reverse_map_on_triangle() {
        let cg = k3();
        let out = apply_colour_map(&cg, &PermutationMap::new(vec![3, 2, 1]).unwrap()).unwrap();
        assert_eq!(out.colour(v(1, 1)), 3);
        assert_eq!(out.colour(v(2, 1)), 2);
        assert_eq!(out.colour(v(3, 1)), 1);
    }

    #[test]
    fn swap_on_path_keeps_it_proper() {
        let g = Graph::from_edges(
            [v(1, 1), v(2, 1), v(1, 2)],
            [(v(1, 1), v(2, 1)), (v(2, 1), v(1, 2))],
        )
        .unwrap();
        let cg = ColouredGraph::by_class(g, ColourCluster::new(vec![2, 1]).unwrap()).unwrap();
        let out = apply_colour_map(&cg, &PermutationMap::new(vec![2, 1]).unwrap()).unwrap();
        assert_eq!(out.colour(v(2, 1)), 1);
        assert_eq!(out.colour(v(1, 1)), 2);
        assert_eq!(out.colour(v(1, 2)), 2);
        assert_eq!(out.cluster().sizes(), &[1, 2]);
        assert!(out
            .graph()
            .edges()
            .all(|(a, b)| out.colour(a) != out.colour(b)));
    }

    #[test]
    fn map_length_mismatch() {
        assert!(apply_colour_map(&k3(), &PermutationMap::identity(2)).is_err());
    }

    #[test]
    fn from_colouring_rejects_gaps() {
        let g = Graph::with_vertices([v(1, 1), v(1, 2)]);
        let colouring: Colouring = [(v(1, 1), 1), (v(1, 2), 3)].into_iter().collect();
        assert!(ColouredGraph::from_colouring(g, colouring).is_err());
    }

    #[test]
    fn new_rejects_missing_colour() {
        let g = Graph::with_vertices([v(1, 1), v(1, 2)]);
        let colouring: Colouring = [(v(1, 1), 1)].into_iter().collect();
        let cl = ColourCluster::new(vec![2]).unwrap();
        assert_eq!(
            ColouredGraph::new(g, colouring, cl),
            Err(Error::IncompleteColouring(v(1, 2)))
        );
    }
}
