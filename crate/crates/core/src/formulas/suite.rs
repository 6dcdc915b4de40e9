//! Parameter grids, the discrepancy report, and structural self-checks.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::ids::{Family, FormulaId};
use super::{compare_captured, ComparisonRecord, OracleOptions, Params, Status};
use crate::chromatic::{check_proper, chromatic_number_exact, SolverLimits};
use crate::cluster::{ColourCluster, ColouredGraph};
use crate::embodiment::{
    self, complete_embodiment, multipartite_max, odd_cycle_embodiment, thorn_embodiment, TreeType,
};
use crate::error::{Error, Result};
use crate::graph::v;
use crate::sequences::SequenceKind;
use crate::zagreb::ExtremalOptions;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    /// Complete r-partite printed sums.
    P33,
    /// Their closed forms.
    L34,
    /// Tree bounds/identities and the two-class bound.
    Tree,
    Type1,
    Type2,
    S1,
    S2,
    Fib,
    Structure,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::P33,
        Suite::L34,
        Suite::Tree,
        Suite::Type1,
        Suite::Type2,
        Suite::S1,
        Suite::S2,
        Suite::Fib,
        Suite::Structure,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            Suite::P33 => "p33",
            Suite::L34 => "l34",
            Suite::Tree => "tree",
            Suite::Type1 => "type1",
            Suite::Type2 => "type2",
            Suite::S1 => "s1",
            Suite::S2 => "s2",
            Suite::Fib => "fib",
            Suite::Structure => "structure",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.as_str() == s)
            .ok_or_else(|| Error::UnknownName {
                what: "suite",
                value: s.into(),
            })
    }
}

/// Deliberate corruption of constructed graphs, for exercising `--strict`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Fault {
    /// Drop the edge `v_{1,1} v_{2,1}` from every Type-I tree.
    DropTreeEdge,
    /// Recolour `v_{1,1}` with colour 2 on every Type-II tree.
    Miscolour,
}

impl FromStr for Fault {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "drop-tree-edge" => Ok(Fault::DropTreeEdge),
            "miscolour" => Ok(Fault::Miscolour),
            _ => Err(Error::UnknownName {
                what: "fault",
                value: s.into(),
            }),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteConfig {
    pub suites: BTreeSet<Suite>,
    pub l_max: u32,
    pub n_max: u32,
    pub r_max: u32,
    pub seed: u64,
    /// Extra clusters for the type1/type2/structure suites.
    pub clusters: Vec<ColourCluster>,
    /// Random (unsorted) clusters drawn from the seed.
    pub random_clusters: usize,
    /// Random trees for the tree suite.
    pub trees: usize,
    pub tree_min_order: u32,
    pub tree_max_order: u32,
    pub fib_max: u32,
    /// The exact solver is only run on graphs up to this order.
    pub chi_max_order: usize,
    pub factorial_limit: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fault: Option<Fault>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            suites: Suite::ALL.into_iter().collect(),
            l_max: 5,
            n_max: 3,
            r_max: 4,
            seed: 0,
            clusters: Vec::new(),
            random_clusters: 4,
            trees: 20,
            tree_min_order: 4,
            tree_max_order: 12,
            fib_max: 25,
            chi_max_order: 12,
            factorial_limit: crate::zagreb::DEFAULT_FACTORIAL_LIMIT,
            fault: None,
        }
    }
}

impl SuiteConfig {
    pub fn only(suites: &[Suite]) -> Self {
        Self {
            suites: suites.iter().copied().collect(),
            ..Self::default()
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructuralCheck {
    pub check: &'static str,
    pub subject: String,
    pub expected: String,
    pub actual: String,
    pub passed: bool,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub records: usize,
    #[serde(rename = "match")]
    pub matches: usize,
    #[serde(rename = "mismatch")]
    pub mismatches: usize,
    pub bound_holds: usize,
    pub bound_violated: usize,
    pub non_integer: usize,
    pub error: usize,
    pub structural_checks: usize,
    pub structural_failures: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiscrepancyReport {
    pub config: SuiteConfig,
    pub records: Vec<ComparisonRecord>,
    pub structural: Vec<StructuralCheck>,
    pub summary: Summary,
}

impl DiscrepancyReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    pub fn count(&self, status: Status) -> usize {
        self.records.iter().filter(|r| r.status == status).count()
    }

    pub fn structural_ok(&self) -> bool {
        self.structural.iter().all(|c| c.passed)
    }
}

/// All non-increasing clusters with `2 ≤ ℓ ≤ l_max` and `1 ≤ r_i ≤ r_max`.
pub fn non_increasing_grid(l_max: u32, r_max: u32) -> Vec<ColourCluster> {
    fn extend(prefix: &mut Vec<u32>, len: u32, cap: u32, out: &mut Vec<ColourCluster>) {
        if prefix.len() as u32 == len {
            out.push(ColourCluster::new(prefix.clone()).expect("sizes ≥ 1"));
            return;
        }
        for r in (1..=cap).rev() {
            prefix.push(r);
            extend(prefix, len, r, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    for len in 2..=l_max {
        extend(&mut Vec::new(), len, r_max, &mut out);
    }
    out
}

fn random_clusters(cfg: &SuiteConfig, rng: &mut ChaCha8Rng) -> Vec<ColourCluster> {
    if cfg.l_max < 2 || cfg.r_max < 1 {
        return Vec::new();
    }
    (0..cfg.random_clusters)
        .map(|_| {
            let l = rng.gen_range(2..=cfg.l_max);
            let sizes = (0..l).map(|_| rng.gen_range(1..=cfg.r_max)).collect();
            ColourCluster::new(sizes).expect("sizes ≥ 1")
        })
        .collect()
}

/// A uniformly random labelled tree of order `n ≥ 2`, as a Prüfer sequence.
pub fn random_prufer(n: u32, rng: &mut impl Rng) -> Vec<u32> {
    (0..n.saturating_sub(2))
        .map(|_| rng.gen_range(1..=n))
        .collect()
}

fn cluster_pool(cfg: &SuiteConfig, rng: &mut ChaCha8Rng) -> Vec<ColourCluster> {
    let mut pool = non_increasing_grid(cfg.l_max, cfg.r_max);
    pool.extend(cfg.clusters.iter().filter(|c| c.len() >= 2).cloned());
    pool.extend(random_clusters(cfg, rng));
    pool
}

fn tasks(cfg: &SuiteConfig) -> BTreeSet<(FormulaId, Params)> {
    use FormulaId::*;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let pool = cluster_pool(cfg, &mut rng);
    let mut out = BTreeSet::new();
    let partite_grid =
        || (1..=cfg.n_max).flat_map(|n| (2..=cfg.r_max).map(move |r| Params::Partite { n, r }));

    for suite in &cfg.suites {
        match suite {
            Suite::P33 => {
                for p in partite_grid() {
                    for id in [PartiteM1, PartiteM2, PartiteM3] {
                        out.insert((id, p.clone()));
                    }
                }
            }
            Suite::L34 => {
                for p in partite_grid() {
                    for id in [PartiteM2Closed, PartiteM3Closed] {
                        out.insert((id, p.clone()));
                    }
                }
            }
            Suite::Tree => {
                let mut tree_rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x7472_6565);
                for _ in 0..cfg.trees {
                    let n =
                        tree_rng.gen_range(cfg.tree_min_order.max(2)..=cfg.tree_max_order.max(2));
                    let p = Params::tree(random_prufer(n, &mut tree_rng));
                    for id in [TreeM1Bounds, TreeM2, TreeM3] {
                        out.insert((id, p.clone()));
                    }
                }
                for c in pool.iter().filter(|c| c.len() == 2) {
                    out.insert((TwoClassM1Bounds, Params::cluster(c)));
                }
            }
            Suite::Type1 | Suite::Type2 => {
                let families = if *suite == Suite::Type1 {
                    [Family::Type1Tree, Family::Type1Complete]
                } else {
                    [Family::Type2Tree, Family::Type2Complete]
                };
                for c in &pool {
                    let p = Params::cluster(c);
                    for fam in families {
                        for id in FormulaId::family(fam) {
                            out.insert((id, p.clone()));
                        }
                    }
                    if *suite == Suite::Type1 {
                        out.insert((Type1TreeM2MinEdgeCount, p.clone()));
                    }
                }
            }
            Suite::S1 | Suite::S2 => {
                let seq = if *suite == Suite::S1 {
                    SequenceKind::MirrorNaturals
                } else {
                    SequenceKind::MirrorFibonacci
                };
                for l in 1..=cfg.l_max {
                    let p = Params::Length { l };
                    for tt in [TreeType::TypeI, TreeType::TypeII] {
                        for id in FormulaId::sequence(seq, tt) {
                            out.insert((id, p.clone()));
                        }
                    }
                    if seq == SequenceKind::MirrorNaturals {
                        out.insert((NaturalsM1MinClosed, p));
                    }
                }
            }
            Suite::Fib => {
                for l in 1..=cfg.fib_max {
                    for a in 1..=l {
                        out.insert((FibSum, Params::Range { a, l }));
                    }
                    for id in [FibSumSq, FibSumCube, FibSumQuad] {
                        out.insert((id, Params::Length { l }));
                    }
                }
            }
            Suite::Structure => {}
        }
    }
    out
}

/// Runs every selected suite. Output order is fixed (formula id, then
/// parameters) regardless of how the work is scheduled.
pub fn run_suite(cfg: &SuiteConfig) -> DiscrepancyReport {
    let opts = OracleOptions {
        extremal: ExtremalOptions {
            limit: cfg.factorial_limit,
            ..ExtremalOptions::default()
        },
    };
    let tasks: Vec<_> = tasks(cfg).into_iter().collect();
    let records: Vec<ComparisonRecord> = tasks
        .par_iter()
        .map(|(id, params)| compare_captured(*id, params, &opts))
        .collect();

    let structural = if cfg.suites.contains(&Suite::Structure) {
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        structural_checks(&cluster_pool(cfg, &mut rng), cfg)
    } else {
        Vec::new()
    };

    let mut summary = Summary {
        records: records.len(),
        structural_checks: structural.len(),
        structural_failures: structural.iter().filter(|c| !c.passed).count(),
        ..Summary::default()
    };
    for r in &records {
        match r.status {
            Status::Match => summary.matches += 1,
            Status::Mismatch => summary.mismatches += 1,
            Status::BoundHolds => summary.bound_holds += 1,
            Status::BoundViolated => summary.bound_violated += 1,
            Status::NonInteger => summary.non_integer += 1,
            Status::Error => summary.error += 1,
        }
    }
    DiscrepancyReport {
        config: cfg.clone(),
        records,
        structural,
        summary,
    }
}

struct Checks<'a> {
    subject: String,
    out: &'a mut Vec<StructuralCheck>,
}

impl Checks<'_> {
    fn eq<T: PartialEq + fmt::Display>(&mut self, check: &'static str, expected: T, actual: T) {
        self.out.push(StructuralCheck {
            check,
            subject: self.subject.clone(),
            passed: expected == actual,
            expected: expected.to_string(),
            actual: actual.to_string(),
        });
    }

    fn result<T: PartialEq + fmt::Display>(
        &mut self,
        check: &'static str,
        expected: T,
        actual: Result<T>,
    ) {
        match actual {
            Ok(a) => self.eq(check, expected, a),
            Err(e) => self.out.push(StructuralCheck {
                check,
                subject: self.subject.clone(),
                expected: expected.to_string(),
                actual: format!("error: {e}"),
                passed: false,
            }),
        }
    }
}

fn inject(fault: Option<Fault>, tt: TreeType, cg: ColouredGraph) -> ColouredGraph {
    match (fault, tt) {
        (Some(Fault::DropTreeEdge), TreeType::TypeI) => {
            cg.with_graph(cg.graph().remove_edge(v(1, 1), v(2, 1)))
        }
        (Some(Fault::Miscolour), TreeType::TypeII) => {
            let mut colouring = cg.colouring().clone();
            colouring.insert(v(1, 1), 2);
            match ColouredGraph::from_colouring(cg.graph().clone(), colouring) {
                Ok(bad) => bad,
                Err(_) => cg,
            }
        }
        _ => cg,
    }
}

fn chi(g: &ColouredGraph) -> Result<u32> {
    chromatic_number_exact(g.graph(), SolverLimits::default())
}

fn structural_checks(pool: &[ColourCluster], cfg: &SuiteConfig) -> Vec<StructuralCheck> {
    let mut out = Vec::new();
    for c in pool {
        let l = c.len() as u64;
        let total = u64::from(c.total());
        let added = (l - 1) * (l - 2) / 2;
        let mut ck = Checks {
            subject: format!("cluster={c}"),
            out: &mut out,
        };
        let mut completed_sizes = Vec::new();
        for tt in [TreeType::TypeI, TreeType::TypeII] {
            let built = match tt {
                TreeType::TypeI => embodiment::type1_tree(c),
                TreeType::TypeII => embodiment::type2_tree(c),
            };
            let (tree_check, proper_check, added_check, chi_check) = match tt {
                TreeType::TypeI => (
                    "type1_tree_size",
                    "type1_tree_proper_tree",
                    "type1_completion_added",
                    "type1_complete_chi",
                ),
                TreeType::TypeII => (
                    "type2_tree_size",
                    "type2_tree_proper_tree",
                    "type2_completion_added",
                    "type2_complete_chi",
                ),
            };
            let tree = match built {
                Ok(t) => inject(cfg.fault, tt, t),
                Err(e) => {
                    ck.result::<u64>(tree_check, total - 1, Err(e));
                    continue;
                }
            };
            ck.eq(tree_check, total - 1, tree.graph().size() as u64);
            let ok = tree.graph().is_tree() && check_proper(&tree).is_ok();
            ck.eq(proper_check, true, ok);
            match complete_embodiment(&tree, tt) {
                Ok(full) => {
                    ck.eq(
                        added_check,
                        added,
                        (full.graph().size() - tree.graph().size()) as u64,
                    );
                    ck.eq("completed_is_proper", true, check_proper(&full).is_ok());
                    if full.graph().order() <= cfg.chi_max_order {
                        ck.result(chi_check, l as u32, chi(&full));
                    }
                    if let Ok(max) = multipartite_max(c) {
                        ck.eq(
                            "multipartite_contains_completed",
                            true,
                            full.graph().is_edge_subgraph_of(max.graph()),
                        );
                    }
                    completed_sizes.push(full.graph().size() as u64);
                }
                Err(e) => ck.result::<u64>(added_check, added, Err(e)),
            }
        }
        match thorn_embodiment(c) {
            Ok(thorn) => {
                ck.eq("thorn_size", total - 1 + added, thorn.graph().size() as u64);
                ck.eq("thorn_is_proper", true, check_proper(&thorn).is_ok());
                if thorn.graph().order() <= cfg.chi_max_order {
                    ck.result("thorn_chi", l as u32, chi(&thorn));
                }
            }
            Err(e) => ck.result::<u64>("thorn_size", total - 1 + added, Err(e)),
        }
    }
    for t in 2..=6 {
        let mut ck = Checks {
            subject: format!("odd_cycle t={t}"),
            out: &mut out,
        };
        match odd_cycle_embodiment(t) {
            Ok(cyc) => {
                ck.eq("odd_cycle_triangle_free", true, !cyc.graph().has_triangle());
                ck.eq("odd_cycle_proper", true, check_proper(&cyc).is_ok());
                ck.result("odd_cycle_chi", 3, chi(&cyc));
            }
            Err(e) => ck.result("odd_cycle_chi", 3, Err(e)),
        }
    }
    out
}
