//! Every formula exactly as printed, including the ones that turn out wrong.
//! Sums whose upper limit is below the lower limit are empty.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::ids::{Bound, Family, FormulaId};
use super::{bad, zero, Params, Value};
use crate::cluster::ColourCluster;
use crate::embodiment::TreeType;
use crate::error::Result;
use crate::sequences::{fibonacci, SequenceKind};
use crate::zagreb::ZagrebIndex::{self, M1, M2, M3};

type Q = BigRational;

fn q(x: i64) -> Q {
    Q::from_integer(BigInt::from(x))
}

fn fib(n: i64) -> Q {
    // Formulas only ever index the sequence at n ≥ 0 for valid parameters.
    Q::from_integer(BigInt::from(fibonacci(n.max(0) as u64)))
}

fn sum(lo: i64, hi: i64, f: impl Fn(i64) -> Q) -> Q {
    (lo..=hi).fold(zero(), |acc, i| acc + f(i))
}

/// `Σ_{j=lo}^{hi} Σ_{i=j+off}^{top} term(j, i)`
fn double_sum(lo: i64, hi: i64, off: i64, top: i64, term: impl Fn(i64, i64) -> Q) -> Q {
    sum(lo, hi, |j| sum(j + off, top, |i| term(j, i)))
}

/// Class sizes seen through the 1-based θ(c_i) notation.
struct Weights<'a> {
    sizes: &'a [u32],
}

impl Weights<'_> {
    fn theta(&self, i: i64) -> Q {
        q(i64::from(self.sizes[i as usize - 1]))
    }

    fn l(&self) -> i64 {
        self.sizes.len() as i64
    }
}

/// Evaluates the printed form of `id` at `params`.
pub fn evaluate_formula(id: FormulaId, params: &Params) -> Result<Value> {
    use FormulaId::*;
    match id {
        TreeM1Bounds | TreeM2 | TreeM3 => {
            let n = match params {
                Params::Tree { n, prufer } if *n >= 2 && prufer.len() + 2 == *n as usize => {
                    i64::from(*n)
                }
                _ => return Err(bad(id, "expected {n, prufer} with n = |prufer| + 2 ≥ 2")),
            };
            Ok(match id {
                TreeM1Bounds => Value::Interval(q(n + 3), q(4 * n - 3)),
                TreeM2 => Value::Exact(q(2 * (n - 1))),
                _ => Value::Exact(q(n - 1)),
            })
        }
        TwoClassM1Bounds => match params {
            Params::Cluster { cluster } if cluster.len() == 2 && !cluster.contains(&0) => {
                let t = i64::from(cluster[0]) + i64::from(cluster[1]);
                Ok(Value::Interval(q(t + 3), q(4 * t - 3)))
            }
            _ => Err(bad(id, "expected a two-class cluster")),
        },
        PartiteM1 | PartiteM2 | PartiteM3 | PartiteM2Closed | PartiteM3Closed => {
            let (n, r) = match params {
                Params::Partite { n, r } if *n >= 1 && *r >= 2 => (i64::from(*n), i64::from(*r)),
                _ => return Err(bad(id, "expected {n ≥ 1, r ≥ 2}")),
            };
            Ok(Value::Exact(partite(id, n, r)))
        }
        Embodiment(..) | Type1TreeM2MinEdgeCount => {
            let cluster = match params {
                Params::Cluster { cluster } => {
                    ColourCluster::new(cluster.clone()).map_err(|e| bad(id, e.to_string()))?
                }
                _ => return Err(bad(id, "expected a cluster")),
            };
            if cluster.len() < 2 {
                return Err(bad(id, "cluster needs ℓ ≥ 2"));
            }
            let (sorted, _) = cluster.canonicalize();
            let w = Weights {
                sizes: sorted.sizes(),
            };
            Ok(Value::Exact(match id {
                Embodiment(fam, index, bound) => embodiment(fam, index, bound, &w),
                _ => {
                    let l = w.l();
                    q(2) * (w.theta(1) - q(1)) + sum(2, l, |i| w.theta(i) * q(i))
                }
            }))
        }
        Sequence(seq, tt, index, bound) => {
            let l = length(id, params)?;
            Ok(Value::Exact(match seq {
                SequenceKind::MirrorNaturals => naturals(tt, index, bound, l),
                SequenceKind::MirrorFibonacci => fibonacci_cluster(tt, index, bound, l),
            }))
        }
        NaturalsM1MinClosed => {
            let l = length(id, params)?;
            Ok(Value::Exact(
                (q(l.pow(4)) + q(4 * l.pow(3)) + q(5 * l * l) + q(2 * l)) / q(12),
            ))
        }
        FibSum => match params {
            Params::Range { a, l } if *a >= 1 && a <= l => {
                let (a, l) = (i64::from(*a), i64::from(*l));
                Ok(Value::Exact(fib(l + 2) - fib(a + 1)))
            }
            _ => Err(bad(id, "expected {a, l} with 1 ≤ a ≤ l")),
        },
        FibSumSq | FibSumCube | FibSumQuad => {
            let l = length(id, params)?;
            let sign = if (l + 1) % 2 == 0 { q(1) } else { q(-1) };
            Ok(Value::Exact(match id {
                FibSumSq => fib(l + 1) * fib(l + 2),
                FibSumCube => fib(3 * l + 2) + q(6) * sign * fib(l - 1) + q(5),
                _ => fib(4 * l + 2) + q(4) * sign * fib(2 * l + 1) + q(6 * l) + q(3),
            }))
        }
    }
}

fn length(id: FormulaId, params: &Params) -> Result<i64> {
    match params {
        Params::Length { l } if *l >= 1 => Ok(i64::from(*l)),
        _ => Err(bad(id, "expected {l ≥ 1}")),
    }
}

fn partite(id: FormulaId, n: i64, r: i64) -> Q {
    let n2 = q(n * n);
    match id {
        FormulaId::PartiteM1 => q(n) / q(6) * q(r * (r + 1) * (2 * r + 1)),
        FormulaId::PartiteM2 => n2 / q(2) * sum(2, r, |i| q(i * i * (i - 1))),
        FormulaId::PartiteM3 => n2 * sum(1, r - 1, |i| q(i * (r - 1))),
        FormulaId::PartiteM2Closed => n2 * (q(2 * r.pow(4)) - q(r * (2 * r + 1) * (r + 3))) / q(24),
        FormulaId::PartiteM3Closed => n2 * q(r * (r - 1) * (r - 1)) / q(2),
        _ => unreachable!("not a partite formula"),
    }
}

/// `Σ_{j=2}^{ℓ−2} Σ_{i=j+1}^{ℓ−1} i(ℓ+1−2i)`, shared by the Type-I M3 completions.
fn type1_m3_clique(l: i64) -> Q {
    double_sum(2, l - 2, 1, l - 1, |_, i| q(i * (l + 1 - 2 * i)))
}

/// `Σ_{j=1}^{ℓ−2} Σ_{i=j+2}^{ℓ} j·i`, shared by the Type-II M2 completions.
fn type2_m2_clique(l: i64) -> Q {
    double_sum(1, l - 2, 2, l, |j, i| q(j * i))
}

/// `Σ_{j=1}^{top} Σ_{i=1}^{j} i`
fn triangular_sum(top: i64) -> Q {
    sum(1, top, |j| sum(1, j, q))
}

fn embodiment(fam: Family, index: ZagrebIndex, bound: Bound, w: &Weights) -> Q {
    let l = w.l();
    let th = |i| w.theta(i);
    match (index, bound) {
        (M1, Bound::Min) => return sum(1, l, |i| th(i) * q(i * i)),
        (M1, Bound::Max) => return sum(1, l, |i| th(i) * q((l - i + 1).pow(2))),
        _ => {}
    }
    match fam.tree_type() {
        TreeType::TypeI => {
            let tree = match (index, bound) {
                (M2, Bound::Min) => q(2 * (l - 1)) + sum(2, l, |i| th(i) * q(i)),
                (M2, Bound::Max) => {
                    q(l * (l - 1) * (l - 1)) + sum(2, l, |i| th(i) * q(l * (l - i + 1)))
                }
                (M3, Bound::Min) => q(l - 1) + sum(2, l, |i| th(i) * q(i - 1)),
                (M3, Bound::Max) => q((l - 1) * (l - 1)) + sum(2, l, |i| th(i) * q(l - i + 1)),
                (M1, _) => unreachable!(),
            };
            if !fam.completed() {
                return tree;
            }
            tree + match (index, bound) {
                (M2, Bound::Min) => double_sum(2, l - 1, 1, l, |j, i| q(j * i)),
                (M2, Bound::Max) => double_sum(1, l - 2, 1, l - 1, |j, i| q(j * i)),
                _ => type1_m3_clique(l),
            }
        }
        TreeType::TypeII => {
            let tree = match (index, bound) {
                (M2, Bound::Min) => {
                    q(2) * (th(1) - q(1)) + sum(1, l - 1, |i| q(i * (i + 1)) * th(i + 1))
                }
                (M2, Bound::Max) => {
                    q(l * (l - 1)) * (th(1) - q(1))
                        + sum(1, l - 1, |i| q(i * (i + 1)) * th(l - i + 1))
                }
                (M3, Bound::Min) => sum(1, l, th) - q(l),
                (M3, Bound::Max) => {
                    let d = th(1) - q(1);
                    d.clone() * d + sum(2, l, |i| q(l - i + 1) * th(i))
                }
                (M1, _) => unreachable!(),
            };
            if !fam.completed() {
                return tree;
            }
            tree + match (index, bound) {
                (M2, _) => type2_m2_clique(l),
                (M3, Bound::Min) => triangular_sum(l - 1) - q(l - 2),
                _ => triangular_sum(l - 2),
            }
        }
    }
}

/// Completed-embodiment formulas with `θ(c_i) = ℓ − (i − 1)`.
fn naturals(tt: TreeType, index: ZagrebIndex, bound: Bound, l: i64) -> Q {
    let a = |i: i64| q(l - i + 1);
    match (tt, index, bound) {
        (_, M1, Bound::Min) => sum(1, l, |i| a(i) * q(i * i)),
        (_, M1, Bound::Max) => sum(1, l, |i| q((l - i + 1).pow(3))),
        (TreeType::TypeI, M2, Bound::Min) => {
            q(2 * (l - 1))
                + sum(2, l, |i| q(i) * a(i))
                + double_sum(2, l - 1, 1, l, |j, i| q(j * i))
        }
        (TreeType::TypeI, M2, Bound::Max) => {
            q(l * (l - 1) * (l - 1))
                + sum(2, l, |i| q(l * (l - i + 1).pow(2)))
                + double_sum(1, l - 2, 1, l - 1, |j, i| q(j * i))
        }
        (TreeType::TypeI, M3, Bound::Min) => {
            q(l - 1) + sum(2, l, |i| q(i - 1) * a(i)) + type1_m3_clique(l)
        }
        (TreeType::TypeI, M3, Bound::Max) => {
            q((l - 1) * (l - 1)) + sum(2, l, |i| q((l - i + 1).pow(2))) + type1_m3_clique(l)
        }
        (TreeType::TypeII, M2, Bound::Min) => {
            q(2 * (l - 1)) + sum(1, l - 1, |i| q(i * (i + 1) * (l - i))) + type2_m2_clique(l)
        }
        (TreeType::TypeII, M2, Bound::Max) => {
            q(l * (l - 1) * (l - 1))
                + sum(1, l - 1, |i| q(2 * i * (i + 1) * (i - 1)))
                + type2_m2_clique(l)
        }
        (TreeType::TypeII, M3, Bound::Min) => {
            sum(1, l, a) - q(l) + triangular_sum(l - 1) - q(l - 2)
        }
        (TreeType::TypeII, M3, Bound::Max) => {
            q((l - 1) * (l - 1)) + sum(2, l, |i| q((l - i + 1).pow(2))) + triangular_sum(l - 2)
        }
    }
}

/// Completed-embodiment formulas with `θ(c_i) = f_{ℓ − (i − 1)}`.
fn fibonacci_cluster(tt: TreeType, index: ZagrebIndex, bound: Bound, l: i64) -> Q {
    let a = |i: i64| fib(l - i + 1);
    let fl = fib(l);
    match (tt, index, bound) {
        (_, M1, Bound::Min) => sum(1, l, |i| a(i) * q(i * i)),
        (_, M1, Bound::Max) => sum(1, l, |i| a(i) * q((l - i + 1).pow(2))),
        (TreeType::TypeI, M2, Bound::Min) => {
            q(2) * (fl - q(1))
                + sum(2, l, |i| q(i) * a(i))
                + double_sum(2, l - 1, 1, l, |j, i| q(j * i))
        }
        (TreeType::TypeI, M2, Bound::Max) => {
            let d = fl - q(1);
            q(l) * d.clone() * d
                + sum(2, l, |i| a(i) * q(l * (l - i + 1)))
                + double_sum(1, l - 2, 1, l - 1, |j, i| q(j * i))
        }
        (TreeType::TypeI, M3, Bound::Min) => {
            q(l - 1) + sum(2, l, |i| a(i) * q(i - 1)) + type1_m3_clique(l)
        }
        (TreeType::TypeI, M3, Bound::Max) => {
            q((l - 1) * (l - 1)) + sum(2, l, |i| a(i) * q(l - i + 1)) + type1_m3_clique(l)
        }
        (TreeType::TypeII, M2, Bound::Min) => {
            q(2) * (fl - q(1)) + sum(1, l - 1, |i| fib(i - 1) * q(i * (i + 1))) + type2_m2_clique(l)
        }
        (TreeType::TypeII, M2, Bound::Max) => {
            q(l * (l - 1)) * (fl - q(1))
                + sum(1, l - 1, |i| fib(i) * q(i * (i + 1)))
                + type2_m2_clique(l)
        }
        (TreeType::TypeII, M3, Bound::Min) => {
            sum(1, l, a) - q(l) + triangular_sum(l - 1) - q(l - 2)
        }
        (TreeType::TypeII, M3, Bound::Max) => {
            let d = fl - q(1);
            d.clone() * d + sum(2, l, |i| a(i) * q(l - i + 1)) + triangular_sum(l - 2)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn exact(id: FormulaId, p: Params) -> Q {
        evaluate_formula(id, &p).unwrap().exact().unwrap().clone()
    }

    fn frac(n: i64, d: i64) -> Q {
        Q::new(n.into(), d.into())
    }

    #[test]
    fn partite_examples() {
        assert_eq!(
            exact(FormulaId::PartiteM1, Params::Partite { n: 1, r: 3 }),
            q(14)
        );
        assert_eq!(
            exact(FormulaId::PartiteM3, Params::Partite { n: 1, r: 3 }),
            q(6)
        );
        assert_eq!(
            exact(FormulaId::PartiteM2Closed, Params::Partite { n: 1, r: 2 }),
            frac(-3, 4)
        );
        // r = 2 agrees with K_2: 5, 2, 1
        let k2 = |id| exact(id, Params::Partite { n: 1, r: 2 });
        assert_eq!(
            (
                k2(FormulaId::PartiteM1),
                k2(FormulaId::PartiteM2),
                k2(FormulaId::PartiteM3)
            ),
            (q(5), q(2), q(1))
        );
    }

    #[test]
    fn closed_m3_matches_printed_sum() {
        for n in 1..=3 {
            for r in 2..=6 {
                let p = Params::Partite { n, r };
                assert_eq!(
                    exact(FormulaId::PartiteM3Closed, p.clone()),
                    exact(FormulaId::PartiteM3, p)
                );
            }
        }
    }

    #[test]
    fn remark_closed_form() {
        assert_eq!(
            exact(FormulaId::NaturalsM1MinClosed, Params::Length { l: 2 }),
            q(6)
        );
        for l in 1..=50 {
            let direct = exact(
                FormulaId::Sequence(
                    SequenceKind::MirrorNaturals,
                    TreeType::TypeI,
                    M1,
                    Bound::Min,
                ),
                Params::Length { l },
            );
            assert_eq!(
                exact(FormulaId::NaturalsM1MinClosed, Params::Length { l }),
                direct
            );
        }
    }

    #[test]
    fn fibonacci_identities_as_printed() {
        assert_eq!(exact(FormulaId::FibSumSq, Params::Length { l: 2 }), q(6));
        assert_eq!(exact(FormulaId::FibSum, Params::Range { a: 1, l: 2 }), q(2));
        // l = 1: f_5 + 6·f_0 + 5
        assert_eq!(exact(FormulaId::FibSumCube, Params::Length { l: 1 }), q(10));
        // l = 1: f_6 + 4·f_3 + 6 + 3
        assert_eq!(exact(FormulaId::FibSumQuad, Params::Length { l: 1 }), q(25));
    }

    #[test]
    fn tree_values() {
        let p = Params::tree(vec![1, 1]);
        assert_eq!(
            evaluate_formula(FormulaId::TreeM1Bounds, &p).unwrap(),
            Value::Interval(q(7), q(13))
        );
        assert_eq!(exact(FormulaId::TreeM2, p.clone()), q(6));
        assert_eq!(exact(FormulaId::TreeM3, p), q(3));
    }

    #[test]
    fn type1_tree_min_by_hand() {
        // [5,4,3,3]: M1 min = 5 + 16 + 27 + 48 = 96
        let c = Params::Cluster {
            cluster: vec![5, 4, 3, 3],
        };
        assert_eq!(
            exact(
                FormulaId::Embodiment(Family::Type1Tree, M1, Bound::Min),
                c.clone()
            ),
            q(96)
        );
        // printed M2 min: 2·3 + (4·2 + 3·3 + 3·4) = 35; edge-count reading: 2·4 + 29 = 37
        assert_eq!(
            exact(
                FormulaId::Embodiment(Family::Type1Tree, M2, Bound::Min),
                c.clone()
            ),
            q(35)
        );
        assert_eq!(exact(FormulaId::Type1TreeM2MinEdgeCount, c), q(37));
    }

    #[test]
    fn unsorted_cluster_is_canonicalized() {
        let id = FormulaId::Embodiment(Family::Type2Complete, M2, Bound::Max);
        let a = exact(
            id,
            Params::Cluster {
                cluster: vec![3, 5, 4],
            },
        );
        let b = exact(
            id,
            Params::Cluster {
                cluster: vec![5, 4, 3],
            },
        );
        assert_eq!(a, b);
    }

    #[test]
    fn schema_errors() {
        assert!(evaluate_formula(FormulaId::PartiteM1, &Params::Length { l: 3 }).is_err());
        assert!(evaluate_formula(FormulaId::PartiteM1, &Params::Partite { n: 1, r: 1 }).is_err());
        assert!(evaluate_formula(FormulaId::FibSum, &Params::Range { a: 3, l: 2 }).is_err());
        assert!(evaluate_formula(
            FormulaId::Embodiment(Family::Type1Tree, M1, Bound::Min),
            &Params::Cluster { cluster: vec![3] }
        )
        .is_err());
        assert!(evaluate_formula(
            FormulaId::TreeM2,
            &Params::Tree {
                n: 5,
                prufer: vec![1]
            }
        )
        .is_err());
    }
}
