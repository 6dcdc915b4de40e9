//! Proper-colouring checks and an exact chromatic number for small graphs.

use crate::cluster::{ColouredGraph, Colouring};
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const DEFAULT_MAX_ORDER: usize = 24;
pub const DEFAULT_NODE_BUDGET: u64 = 10_000_000;

/// Guards for [`chromatic_number_exact`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverLimits {
    pub max_order: usize,
    /// Maximum number of search-tree nodes expanded across all values of k.
    pub node_budget: u64,
}

impl Default for SolverLimits {
    fn default() -> Self {
        Self {
            max_order: DEFAULT_MAX_ORDER,
            node_budget: DEFAULT_NODE_BUDGET,
        }
    }
}

pub fn is_proper(g: &Graph, c: &Colouring) -> Result<bool> {
    for x in g.vertices() {
        if !c.contains_key(&x) {
            return Err(Error::IncompleteColouring(x));
        }
    }
    Ok(g.edges().all(|(a, b)| c[&a] != c[&b]))
}

/// Like [`is_proper`] but reports the first offending edge.
pub fn check_proper(cg: &ColouredGraph) -> Result<()> {
    match cg
        .graph()
        .edges()
        .find(|&(a, b)| cg.colour(a) == cg.colour(b))
    {
        Some((a, b)) => Err(Error::NotProper(a, b)),
        None => Ok(()),
    }
}

/// θ(c_i) for i = 1..=ℓ.
pub fn colour_weights(cg: &ColouredGraph) -> Vec<u32> {
    let mut w = vec![0u32; cg.num_colours()];
    for &c in cg.colouring().values() {
        w[c as usize - 1] += 1;
    }
    w
}

/// χ(G) by iterative deepening on k with a DSATUR-ordered backtracking search.
pub fn chromatic_number_exact(g: &Graph, limits: SolverLimits) -> Result<u32> {
    let n = g.order();
    if n > limits.max_order {
        return Err(Error::TooLarge(format!(
            "order {n} exceeds solver bound {}",
            limits.max_order
        )));
    }
    if n == 0 {
        return Ok(0);
    }
    if g.size() == 0 {
        return Ok(1);
    }
    let index: std::collections::BTreeMap<_, _> =
        g.vertices().enumerate().map(|(i, x)| (x, i)).collect();
    let mut adj = vec![Vec::new(); n];
    for (a, b) in g.edges() {
        adj[index[&a]].push(index[&b]);
        adj[index[&b]].push(index[&a]);
    }

    let lower = greedy_clique(&adj).max(2);
    let upper = dsatur_greedy(&adj);
    let mut search = Search {
        adj: &adj,
        nodes: 0,
        budget: limits.node_budget,
    };
    for k in lower..upper {
        if search.colourable(k)? {
            return Ok(k as u32);
        }
    }
    Ok(upper as u32)
}

fn greedy_clique(adj: &[Vec<usize>]) -> usize {
    let n = adj.len();
    let mut best = 1;
    for start in 0..n {
        let mut clique = vec![start];
        let mut candidates: Vec<usize> = adj[start].clone();
        candidates.sort_by_key(|&x| std::cmp::Reverse(adj[x].len()));
        for x in candidates {
            if clique.iter().all(|&y| adj[x].contains(&y)) {
                clique.push(x);
            }
        }
        best = best.max(clique.len());
    }
    best
}

fn pick_vertex(adj: &[Vec<usize>], colour: &[Option<usize>], seen: &[Vec<u32>]) -> Option<usize> {
    (0..adj.len())
        .filter(|&x| colour[x].is_none())
        .max_by_key(|&x| {
            let sat = seen[x].iter().filter(|&&cnt| cnt > 0).count();
            // ties: higher degree, then lower index
            (sat, adj[x].len(), std::cmp::Reverse(x))
        })
}

fn dsatur_greedy(adj: &[Vec<usize>]) -> usize {
    let n = adj.len();
    let mut colour = vec![None; n];
    let mut seen = vec![vec![0u32; n]; n];
    let mut used = 0;
    while let Some(x) = pick_vertex(adj, &colour, &seen) {
        let c = (0..n)
            .find(|&c| seen[x][c] == 0)
            .expect("n colours always suffice");
        colour[x] = Some(c);
        used = used.max(c + 1);
        for &y in &adj[x] {
            seen[y][c] += 1;
        }
    }
    used
}

struct Search<'a> {
    adj: &'a [Vec<usize>],
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    fn colourable(&mut self, k: usize) -> Result<bool> {
        let n = self.adj.len();
        let mut colour = vec![None; n];
        let mut seen = vec![vec![0u32; k]; n];
        self.extend(k, 0, &mut colour, &mut seen)
    }

    fn extend(
        &mut self,
        k: usize,
        used: usize,
        colour: &mut [Option<usize>],
        seen: &mut [Vec<u32>],
    ) -> Result<bool> {
        let Some(x) = pick_vertex(self.adj, colour, seen) else {
            return Ok(true);
        };
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::TooLarge(format!(
                "node budget {} exhausted",
                self.budget
            )));
        }
        // A fresh colour is only ever introduced as colour `used`.
        for c in 0..k.min(used + 1) {
            if seen[x][c] > 0 {
                continue;
            }
            colour[x] = Some(c);
            for &y in &self.adj[x] {
                seen[y][c] += 1;
            }
            let ok = self.extend(k, used.max(c + 1), colour, seen)?;
            for &y in &self.adj[x] {
                seen[y][c] -= 1;
            }
            colour[x] = None;
            if ok {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{v, VertexLabel};

    fn cycle(n: u32) -> Graph {
        let vs: Vec<VertexLabel> = (1..=n).map(|j| v(1, j)).collect();
        let pairs: Vec<_> = (0..n as usize)
            .map(|i| (vs[i], vs[(i + 1) % n as usize]))
            .collect();
        Graph::from_edges(vs.clone(), pairs).unwrap()
    }

    fn path(n: u32) -> Graph {
        let vs: Vec<VertexLabel> = (1..=n).map(|j| v(1, j)).collect();
        let pairs: Vec<_> = vs.windows(2).map(|w| (w[0], w[1])).collect();
        Graph::from_edges(vs.clone(), pairs).unwrap()
    }

    fn complete(n: u32) -> Graph {
        let vs: Vec<VertexLabel> = (1..=n).map(|j| v(1, j)).collect();
        let mut pairs = Vec::new();
        for i in 0..vs.len() {
            for j in i + 1..vs.len() {
                pairs.push((vs[i], vs[j]));
            }
        }
        Graph::from_edges(vs.clone(), pairs).unwrap()
    }

    fn colouring(g: &Graph, colours: &[u32]) -> Colouring {
        g.vertices().zip(colours.iter().copied()).collect()
    }

    #[test]
    fn proper_checks() {
        let k3 = complete(3);
        assert!(is_proper(&k3, &colouring(&k3, &[1, 2, 3])).unwrap());
        assert!(!is_proper(&k3, &colouring(&k3, &[1, 1, 2])).unwrap());
        let c5 = cycle(5);
        assert!(is_proper(&c5, &colouring(&c5, &[1, 2, 1, 2, 3])).unwrap());
        assert!(matches!(
            is_proper(&k3, &colouring(&k3, &[1, 2])),
            Err(Error::IncompleteColouring(_))
        ));
    }

    #[test]
    fn small_chromatic_numbers() {
        let lim = SolverLimits::default();
        assert_eq!(chromatic_number_exact(&cycle(5), lim).unwrap(), 3);
        assert_eq!(chromatic_number_exact(&cycle(6), lim).unwrap(), 2);
        assert_eq!(chromatic_number_exact(&path(5), lim).unwrap(), 2);
        assert_eq!(chromatic_number_exact(&complete(6), lim).unwrap(), 6);
        assert_eq!(chromatic_number_exact(&Graph::empty(), lim).unwrap(), 0);
        assert_eq!(
            chromatic_number_exact(&Graph::with_vertices([v(1, 1), v(1, 2)]), lim).unwrap(),
            1
        );
    }

    #[test]
    fn petersen_is_three() {
        // outer 5-cycle, inner pentagram, spokes
        let outer: Vec<_> = (1..=5).map(|j| v(1, j)).collect();
        let inner: Vec<_> = (1..=5).map(|j| v(2, j)).collect();
        let mut pairs = Vec::new();
        for i in 0..5 {
            pairs.push((outer[i], outer[(i + 1) % 5]));
            pairs.push((inner[i], inner[(i + 2) % 5]));
            pairs.push((outer[i], inner[i]));
        }
        let g = Graph::from_edges(outer.iter().chain(&inner).copied(), pairs).unwrap();
        assert_eq!(
            chromatic_number_exact(&g, SolverLimits::default()).unwrap(),
            3
        );
    }

    #[test]
    fn order_guard() {
        let lim = SolverLimits {
            max_order: 4,
            ..Default::default()
        };
        assert!(matches!(
            chromatic_number_exact(&cycle(5), lim),
            Err(Error::TooLarge(_))
        ));
    }

    #[test]
    fn budget_guard() {
        // Proving K_6 minus nothing needs no search, so use C_7 with a tiny budget.
        let lim = SolverLimits {
            max_order: 24,
            node_budget: 1,
        };
        assert!(matches!(
            chromatic_number_exact(&cycle(7), lim),
            Err(Error::TooLarge(_))
        ));
    }
}
