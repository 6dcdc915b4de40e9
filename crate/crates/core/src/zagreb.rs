//! Classical and chromatic Zagreb indices, and their extrema over all ℓ!
//! relabellings of the colours.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::chromatic::check_proper;
use crate::cluster::{ColouredGraph, PermutationMap};
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const DEFAULT_FACTORIAL_LIMIT: usize = 8;

/// The stated convention for the third chromatic index of `K_1`. The computed
/// edge sum is 0; this value is only used when explicitly requested.
pub const STATED_K1_M3: u64 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ClassicalIndices {
    pub m1: u64,
    pub m2: u64,
    pub m3: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ChromaticIndices {
    pub m1: u64,
    pub m2: u64,
    pub m3: u64,
}

impl ChromaticIndices {
    pub fn get(&self, index: ZagrebIndex) -> u64 {
        match index {
            ZagrebIndex::M1 => self.m1,
            ZagrebIndex::M2 => self.m2,
            ZagrebIndex::M3 => self.m3,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum ZagrebIndex {
    M1,
    M2,
    M3,
}

impl ZagrebIndex {
    pub const ALL: [ZagrebIndex; 3] = [Self::M1, Self::M2, Self::M3];
}

/// Degree-based M1, M2, M3. `K_1` gives (0, 0, 0).
pub fn classical_indices(g: &Graph) -> ClassicalIndices {
    let deg = g.degrees();
    let m1 = deg.values().map(|&d| (d * d) as u64).sum();
    let (mut m2, mut m3) = (0u64, 0u64);
    for (a, b) in g.edges() {
        let (da, db) = (deg[&a] as u64, deg[&b] as u64);
        m2 += da * db;
        m3 += da.abs_diff(db);
    }
    ClassicalIndices { m1, m2, m3 }
}

/// Colour-subscript Zagreb indices of a properly coloured graph.
pub fn chromatic_indices(cg: &ColouredGraph) -> Result<ChromaticIndices> {
    check_proper(cg)?;
    let m1 = cg
        .colouring()
        .values()
        .map(|&c| u64::from(c) * u64::from(c))
        .sum();
    let (mut m2, mut m3) = (0u64, 0u64);
    for (a, b) in cg.graph().edges() {
        let (ca, cb) = (u64::from(cg.colour(a)), u64::from(cg.colour(b)));
        m2 += ca * cb;
        m3 += ca.abs_diff(cb);
    }
    Ok(ChromaticIndices { m1, m2, m3 })
}

/// Everything the chromatic indices depend on: class weights and the number
/// of edges between each pair of colour classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColourProfile {
    weights: Vec<u64>,
    /// `(a, b, count)` with `a < b`, 0-based colours.
    pairs: Vec<(usize, usize, u64)>,
}

impl ColourProfile {
    pub fn of(cg: &ColouredGraph) -> Result<Self> {
        check_proper(cg)?;
        let l = cg.num_colours();
        let weights = cg.cluster().sizes().iter().map(|&r| u64::from(r)).collect();
        let mut counts = vec![vec![0u64; l]; l];
        for (a, b) in cg.graph().edges() {
            let (ca, cb) = (cg.colour(a) as usize - 1, cg.colour(b) as usize - 1);
            counts[ca.min(cb)][ca.max(cb)] += 1;
        }
        let mut pairs = Vec::new();
        for (a, row) in counts.iter().enumerate() {
            for (b, &n) in row.iter().enumerate() {
                if n > 0 {
                    pairs.push((a, b, n));
                }
            }
        }
        Ok(Self { weights, pairs })
    }

    /// Indices after relabelling colour `i` as `image[i-1]`.
    pub fn evaluate(&self, image: &[u32]) -> ChromaticIndices {
        let m1 = self
            .weights
            .iter()
            .zip(image)
            .map(|(&w, &c)| w * u64::from(c) * u64::from(c))
            .sum();
        let (mut m2, mut m3) = (0u64, 0u64);
        for &(a, b, n) in &self.pairs {
            let (ca, cb) = (u64::from(image[a]), u64::from(image[b]));
            m2 += n * ca * cb;
            m3 += n * ca.abs_diff(cb);
        }
        ChromaticIndices { m1, m2, m3 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExtremalOptions {
    /// Largest ℓ for which the ℓ! search is attempted.
    pub limit: usize,
    /// Report the stated `K_1` default for M3 instead of the computed 0.
    pub stated_k1_m3: bool,
}

impl Default for ExtremalOptions {
    fn default() -> Self {
        Self {
            limit: DEFAULT_FACTORIAL_LIMIT,
            stated_k1_m3: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Extremum {
    pub value: u64,
    pub permutation: PermutationMap,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IndexExtrema {
    pub min: Extremum,
    pub max: Extremum,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ZagrebExtrema {
    pub m1: IndexExtrema,
    pub m2: IndexExtrema,
    pub m3: IndexExtrema,
    pub permutations_examined: u64,
}

impl ZagrebExtrema {
    pub fn get(&self, index: ZagrebIndex) -> &IndexExtrema {
        match index {
            ZagrebIndex::M1 => &self.m1,
            ZagrebIndex::M2 => &self.m2,
            ZagrebIndex::M3 => &self.m3,
        }
    }
}

fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// The `rank`-th permutation of `1..=l` in lexicographic order.
pub fn nth_permutation(l: usize, mut rank: u64) -> Vec<u32> {
    let mut pool: Vec<u32> = (1..=l as u32).collect();
    let mut out = Vec::with_capacity(l);
    for k in (0..l).rev() {
        let f = factorial(k);
        let idx = (rank / f) as usize;
        rank %= f;
        out.push(pool.remove(idx));
    }
    out
}

/// Best `(value, rank)` per slot: three minima then three maxima. Ties go to
/// the smaller rank, i.e. the lexicographically smallest image, so merging is
/// associative and commutative.
#[derive(Clone, Copy)]
struct Best([(u64, u64); 6]);

impl Best {
    fn single(rank: u64, idx: ChromaticIndices) -> Self {
        let v = [idx.m1, idx.m2, idx.m3];
        Best([
            (v[0], rank),
            (v[1], rank),
            (v[2], rank),
            (v[0], rank),
            (v[1], rank),
            (v[2], rank),
        ])
    }

    fn merge(self, other: Self) -> Self {
        let mut out = self.0;
        for (k, slot) in out.iter_mut().enumerate() {
            let (a, b) = (*slot, other.0[k]);
            *slot = if k < 3 {
                a.min(b)
            } else if b.0 > a.0 || (b.0 == a.0 && b.1 < a.1) {
                b
            } else {
                a
            };
        }
        Best(out)
    }
}

/// Exact minimum and maximum of each chromatic index over every relabelling
/// of the colours of `cg`.
pub fn extremal_indices(cg: &ColouredGraph, opts: ExtremalOptions) -> Result<ZagrebExtrema> {
    let l = cg.num_colours();
    if l > opts.limit {
        return Err(Error::FactorialRefused {
            classes: l,
            limit: opts.limit,
        });
    }
    let profile = ColourProfile::of(cg)?;
    let total = factorial(l);
    let best = (0..total)
        .into_par_iter()
        .map(|rank| Best::single(rank, profile.evaluate(&nth_permutation(l, rank))))
        .reduce_with(Best::merge)
        .expect("at least one permutation");

    let extremum = |(value, rank): (u64, u64)| Extremum {
        value,
        permutation: PermutationMap::new(nth_permutation(l, rank)).expect("generated permutation"),
    };
    let mut out = ZagrebExtrema {
        m1: IndexExtrema {
            min: extremum(best.0[0]),
            max: extremum(best.0[3]),
        },
        m2: IndexExtrema {
            min: extremum(best.0[1]),
            max: extremum(best.0[4]),
        },
        m3: IndexExtrema {
            min: extremum(best.0[2]),
            max: extremum(best.0[5]),
        },
        permutations_examined: total,
    };
    if opts.stated_k1_m3 && cg.graph().order() == 1 {
        out.m3.min.value = STATED_K1_M3;
        out.m3.max.value = STATED_K1_M3;
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum HeuristicKind {
    /// `c_i ↦ c_{ℓ−i+1}`
    Reverse,
    /// `c_ℓ ↦ c_1`, `c_i ↦ c_{i+1}` otherwise
    Shift,
    /// `c_1 ↦ c_ℓ, c_2 ↦ c_1, c_3 ↦ c_{ℓ−1}, c_4 ↦ c_2, …`
    Zigzag,
}

impl HeuristicKind {
    pub const ALL: [HeuristicKind; 3] = [Self::Reverse, Self::Shift, Self::Zigzag];

    pub fn as_str(&self) -> &'static str {
        match self {
            Self::Reverse => "reverse",
            Self::Shift => "shift",
            Self::Zigzag => "zigzag",
        }
    }
}

impl fmt::Display for HeuristicKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for HeuristicKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| Error::UnknownName {
                what: "heuristic map",
                value: s.into(),
            })
    }
}

pub fn heuristic_map(kind: HeuristicKind, l: usize) -> PermutationMap {
    let l32 = l as u32;
    let image = (1..=l32)
        .map(|i| match kind {
            HeuristicKind::Reverse => l32 - i + 1,
            HeuristicKind::Shift => {
                if i == l32 {
                    1
                } else {
                    i + 1
                }
            }
            HeuristicKind::Zigzag => {
                let k = i.div_ceil(2);
                if i % 2 == 1 {
                    l32 - (k - 1)
                } else {
                    k
                }
            }
        })
        .collect();
    PermutationMap::new(image).expect("heuristic maps are bijections")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HeuristicEvaluation {
    pub kind: HeuristicKind,
    pub permutation: PermutationMap,
    pub indices: ChromaticIndices,
}

/// Indices under each named heuristic map, for comparison with the exact extrema.
pub fn evaluate_heuristics(cg: &ColouredGraph) -> Result<Vec<HeuristicEvaluation>> {
    let profile = ColourProfile::of(cg)?;
    Ok(HeuristicKind::ALL
        .into_iter()
        .map(|kind| {
            let permutation = heuristic_map(kind, cg.num_colours());
            let indices = profile.evaluate(permutation.image());
            HeuristicEvaluation {
                kind,
                permutation,
                indices,
            }
        })
        .collect())
}
