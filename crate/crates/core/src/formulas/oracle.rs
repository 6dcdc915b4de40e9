//! Ground truth for each formula, computed on the graph it describes.

use std::collections::{BTreeMap, VecDeque};

use num_bigint::BigInt;
use num_rational::BigRational;

use super::ids::{Bound, Family, FormulaId};
use super::{bad, Params, Value};
use crate::cluster::{ColourCluster, ColouredGraph, Colouring};
use crate::embodiment::{self, complete_embodiment, null_embodiment, TreeType};
use crate::error::Result;
use crate::graph::tree_from_prufer;
use crate::sequences::{fibonacci, sequence_cluster};
use crate::zagreb::{
    chromatic_indices, extremal_indices, ExtremalOptions, ZagrebExtrema, ZagrebIndex,
};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct OracleOptions {
    pub extremal: ExtremalOptions,
}

fn int(x: u64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

fn pick(ex: &ZagrebExtrema, index: ZagrebIndex, bound: Bound) -> Value {
    let e = ex.get(index);
    Value::Exact(int(match bound {
        Bound::Min => e.min.value,
        Bound::Max => e.max.value,
    }))
}

/// Proper 2-colouring of a tree by BFS parity from its smallest vertex.
fn bipartition(g: &crate::graph::Graph) -> Colouring {
    let adj = g.adjacency();
    let mut colouring: Colouring = BTreeMap::new();
    for start in g.vertices() {
        if colouring.contains_key(&start) {
            continue;
        }
        colouring.insert(start, 1);
        let mut queue = VecDeque::from([start]);
        while let Some(x) = queue.pop_front() {
            let c = colouring[&x];
            for &y in &adj[&x] {
                colouring.entry(y).or_insert_with(|| {
                    queue.push_back(y);
                    3 - c
                });
            }
        }
    }
    colouring
}

/// A tree from its Prüfer sequence, properly 2-coloured.
pub(crate) fn coloured_tree(prufer: &[u32]) -> Result<ColouredGraph> {
    let g = tree_from_prufer(prufer)?;
    let colouring = bipartition(&g);
    ColouredGraph::from_colouring(g, colouring)
}

fn tree_of(family: Family, c: &ColourCluster) -> Result<ColouredGraph> {
    let tree = match family.tree_type() {
        TreeType::TypeI => embodiment::type1_tree(c)?,
        TreeType::TypeII => embodiment::type2_tree(c)?,
    };
    if family.completed() {
        complete_embodiment(&tree, family.tree_type())
    } else {
        Ok(tree)
    }
}

fn cluster_param(id: FormulaId, params: &Params) -> Result<ColourCluster> {
    match params {
        Params::Cluster { cluster } => {
            ColourCluster::new(cluster.clone()).map_err(|e| bad(id, e.to_string()))
        }
        _ => Err(bad(id, "expected a cluster")),
    }
}

/// The directly computed value `id` claims to describe.
pub fn oracle_value(id: FormulaId, params: &Params, opts: &OracleOptions) -> Result<Value> {
    use FormulaId::*;
    match id {
        TreeM1Bounds | TreeM2 | TreeM3 => {
            let Params::Tree { prufer, .. } = params else {
                return Err(bad(id, "expected a tree"));
            };
            let ex = extremal_indices(&coloured_tree(prufer)?, opts.extremal)?;
            let index = match id {
                TreeM1Bounds => ZagrebIndex::M1,
                TreeM2 => ZagrebIndex::M2,
                _ => ZagrebIndex::M3,
            };
            let e = ex.get(index);
            Ok(if id == TreeM1Bounds || e.min.value != e.max.value {
                Value::Interval(int(e.min.value), int(e.max.value))
            } else {
                Value::Exact(int(e.min.value))
            })
        }
        TwoClassM1Bounds => {
            let c = cluster_param(id, params)?;
            let ex = extremal_indices(&embodiment::type1_tree(&c)?, opts.extremal)?;
            Ok(Value::Interval(int(ex.m1.min.value), int(ex.m1.max.value)))
        }
        PartiteM1 | PartiteM2 | PartiteM3 | PartiteM2Closed | PartiteM3Closed => {
            let Params::Partite { n, r } = *params else {
                return Err(bad(id, "expected {n, r}"));
            };
            if n < 1 || r < 2 {
                return Err(bad(id, "expected {n ≥ 1, r ≥ 2}"));
            }
            let c = ColourCluster::new(vec![n; r as usize])?;
            let idx = chromatic_indices(&embodiment::multipartite_max(&c)?)?;
            Ok(Value::Exact(int(match id {
                PartiteM1 => idx.m1,
                PartiteM2 | PartiteM2Closed => idx.m2,
                _ => idx.m3,
            })))
        }
        Embodiment(family, index, bound) => {
            let (c, _) = cluster_param(id, params)?.canonicalize();
            let ex = extremal_indices(&tree_of(family, &c)?, opts.extremal)?;
            Ok(pick(&ex, index, bound))
        }
        Type1TreeM2MinEdgeCount => {
            let (c, _) = cluster_param(id, params)?.canonicalize();
            let ex = extremal_indices(&tree_of(Family::Type1Tree, &c)?, opts.extremal)?;
            Ok(pick(&ex, ZagrebIndex::M2, Bound::Min))
        }
        Sequence(seq, tt, index, bound) => {
            let Params::Length { l } = *params else {
                return Err(bad(id, "expected {l}"));
            };
            let ex = extremal_indices(&sequence_embodiment(seq, tt, l)?, opts.extremal)?;
            Ok(pick(&ex, index, bound))
        }
        NaturalsM1MinClosed => {
            let Params::Length { l } = *params else {
                return Err(bad(id, "expected {l}"));
            };
            let g = sequence_embodiment(
                crate::sequences::SequenceKind::MirrorNaturals,
                TreeType::TypeI,
                l,
            )?;
            let ex = extremal_indices(&g, opts.extremal)?;
            Ok(pick(&ex, ZagrebIndex::M1, Bound::Min))
        }
        FibSum => {
            let Params::Range { a, l } = *params else {
                return Err(bad(id, "expected {a, l}"));
            };
            Ok(Value::Exact(fib_power_sum(a, l, 1)))
        }
        FibSumSq | FibSumCube | FibSumQuad => {
            let Params::Length { l } = *params else {
                return Err(bad(id, "expected {l}"));
            };
            let power = match id {
                FibSumSq => 2,
                FibSumCube => 3,
                _ => 4,
            };
            Ok(Value::Exact(fib_power_sum(1, l, power)))
        }
    }
}

/// The completed Type-I/II embodiment of a sequence cluster; `K_1` when ℓ = 1.
pub(crate) fn sequence_embodiment(
    seq: crate::sequences::SequenceKind,
    tt: TreeType,
    l: u32,
) -> Result<ColouredGraph> {
    let c = sequence_cluster(seq, l)?;
    if c.len() == 1 {
        return null_embodiment(&c);
    }
    let tree = match tt {
        TreeType::TypeI => embodiment::type1_tree(&c)?,
        TreeType::TypeII => embodiment::type2_tree(&c)?,
    };
    complete_embodiment(&tree, tt)
}

fn fib_power_sum(a: u32, l: u32, power: u32) -> BigRational {
    let total = (a..=l)
        .map(|i| BigInt::from(fibonacci(u64::from(i))).pow(power))
        .fold(BigInt::from(0), |acc, x| acc + x);
    BigRational::from_integer(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn exact(id: FormulaId, p: Params) -> BigRational {
        oracle_value(id, &p, &OracleOptions::default())
            .unwrap()
            .exact()
            .unwrap()
            .clone()
    }

    #[test]
    fn partite_oracles() {
        assert_eq!(
            exact(FormulaId::PartiteM3, Params::Partite { n: 1, r: 3 }),
            int(4)
        );
        assert_eq!(
            exact(FormulaId::PartiteM2, Params::Partite { n: 2, r: 2 }),
            int(8)
        );
        assert_eq!(
            exact(FormulaId::PartiteM2Closed, Params::Partite { n: 1, r: 2 }),
            int(2)
        );
    }

    #[test]
    fn fibonacci_oracles() {
        assert_eq!(exact(FormulaId::FibSumSq, Params::Length { l: 2 }), int(2));
        assert_eq!(
            exact(FormulaId::FibSumCube, Params::Length { l: 3 }),
            int(1 + 1 + 8)
        );
        assert_eq!(
            exact(FormulaId::FibSum, Params::Range { a: 2, l: 4 }),
            int(1 + 2 + 3)
        );
    }

    #[test]
    fn star_tree_bounds() {
        let v = oracle_value(
            FormulaId::TreeM1Bounds,
            &Params::tree(vec![1, 1]),
            &OracleOptions::default(),
        )
        .unwrap();
        assert_eq!(v, Value::Interval(int(7), int(13)));
    }

    #[test]
    fn tree_colouring_is_proper() {
        let t = coloured_tree(&[3, 3, 5, 1]).unwrap();
        assert!(crate::chromatic::check_proper(&t).is_ok());
        assert_eq!(t.num_colours(), 2);
    }

    #[test]
    fn sequence_at_one_is_k1() {
        let g = sequence_embodiment(
            crate::sequences::SequenceKind::MirrorNaturals,
            TreeType::TypeI,
            1,
        )
        .unwrap();
        assert_eq!(g.graph().order(), 1);
    }
}
