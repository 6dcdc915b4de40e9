//! Command-line driver. Exit codes: 0 success, 1 usage or construction
//! error, 2 structural failure under `verify --strict`.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::chromatic::{chromatic_number_exact, SolverLimits};
use crate::cluster::{ColourCluster, ColouredGraph};
use crate::embodiment::{self, EmbodimentKind};
use crate::error::{Error, Result};
use crate::formulas::{run_suite, Fault, Suite, SuiteConfig};
use crate::io;
use crate::sequences::SequenceKind;
use crate::sweep;
use crate::zagreb::{
    chromatic_indices, evaluate_heuristics, extremal_indices, ChromaticIndices, ExtremalOptions,
    HeuristicEvaluation, ZagrebExtrema, DEFAULT_FACTORIAL_LIMIT,
};

/// Environment override for the factorial guard; `--limit` wins over it.
pub const GUARD_ENV: &str = "CHROMA_GUARD_LMAX";

#[derive(Debug, Parser)]
#[command(
    name = "chroma",
    version,
    about = "Graphical embodiments of colour clusters and chromatic Zagreb indices"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build a graph realising a colour cluster and export it.
    Embody(EmbodyArgs),
    /// Chromatic Zagreb indices of a constructed graph.
    Indices(IndicesArgs),
    /// Check every closed-form formula against direct computation and write a JSON report.
    Verify(VerifyArgs),
    /// Tabulate extremal indices of sequence clusters.
    #[command(long_about = SWEEP_HELP)]
    Sweep(SweepArgs),
}

const SWEEP_HELP: &str = "Tabulate extremal indices of sequence clusters.\n\n\
One row per (l, kind). CSV columns, in order:\n  \
sequence, l, kind, cluster (sizes joined by ';'),\n  \
m1_min, m1_max, m2_min, m2_max, m3_min, m3_max (exhaustive over colour permutations),\n  \
m1_min_formula .. m3_max_formula (closed form; empty when none applies),\n  \
m1_min_match .. m3_max_match (true when formula equals the exhaustive value).";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindArg {
    Type1,
    Type2,
    Thorn,
    Multipartite,
    #[value(name = "odd_cycle")]
    OddCycle,
    #[value(name = "path_type")]
    PathType,
    Null,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GraphFormat {
    Json,
    Csv,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableFormat {
    Csv,
    Json,
}

#[derive(Debug, Args)]
struct GraphSpec {
    /// Class sizes, e.g. `5,4,3,3` or `{"classes":[5,4,3,3]}`.
    #[arg(long)]
    cluster: String,
    #[arg(long, value_enum)]
    kind: KindArg,
    /// Add the representative clique to a type1/type2 tree.
    #[arg(long)]
    complete: bool,
}

#[derive(Debug, Args)]
struct EmbodyArgs {
    #[command(flatten)]
    spec: GraphSpec,
    #[arg(long, value_enum, default_value = "json")]
    format: GraphFormat,
    /// Write the graph here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct IndicesArgs {
    #[command(flatten)]
    spec: GraphSpec,
    /// Minimise and maximise each index over all colour permutations.
    #[arg(long)]
    extremal: bool,
    /// Largest number of colours for the exhaustive search.
    #[arg(long)]
    limit: Option<usize>,
    /// Report 1 instead of 0 for the third index of a single vertex.
    #[arg(long)]
    stated_k1_default: bool,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Comma-separated: p33,l34,tree,type1,type2,s1,s2,fib,structure.
    #[arg(long, value_delimiter = ',')]
    suites: Option<Vec<String>>,
    /// Largest number of colour classes in the cluster grid and sequence suites.
    #[arg(long, default_value_t = 5)]
    l_max: u32,
    /// Largest part size for the complete multipartite suites.
    #[arg(long, default_value_t = 3)]
    n_max: u32,
    /// Largest class size in the cluster grid; also the largest part count.
    #[arg(long, default_value_t = 4)]
    r_max: u32,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Extra cluster to include (repeatable).
    #[arg(long = "cluster")]
    clusters: Vec<String>,
    /// Seeded random (unsorted) clusters added to the grid.
    #[arg(long, default_value_t = 4)]
    random_clusters: usize,
    /// Seeded random trees for the tree suite.
    #[arg(long, default_value_t = 20)]
    trees: usize,
    /// Largest l for the Fibonacci identities.
    #[arg(long, default_value_t = 25)]
    fib_max: u32,
    /// Largest number of colours for the exhaustive search [env: CHROMA_GUARD_LMAX, default 8].
    #[arg(long)]
    limit: Option<usize>,
    /// Write the report here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Exit 2 when a structural invariant fails.
    #[arg(long)]
    strict: bool,
    #[arg(long, hide = true)]
    inject_fault: Option<String>,
}

#[derive(Debug, Args)]
struct SweepArgs {
    /// s1 (mirrored naturals) or s2 (mirrored Fibonacci).
    #[arg(long)]
    sequence: String,
    #[arg(long)]
    l_max: u32,
    /// Comma-separated subset of type1_tree,type2_tree,type1_complete,type2_complete.
    #[arg(long, value_delimiter = ',')]
    kinds: Option<Vec<String>>,
    #[arg(long, value_enum, default_value = "csv")]
    format: TableFormat,
    #[arg(long)]
    limit: Option<usize>,
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 1 } else { 0 };
        }
    };
    let outcome = match cli.command {
        Command::Embody(a) => embody(a),
        Command::Indices(a) => indices(a),
        Command::Verify(a) => verify(a),
        Command::Sweep(a) => run_sweep(a),
    };
    match outcome {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}

fn factorial_limit(flag: Option<usize>) -> Result<usize> {
    if let Some(l) = flag {
        return Ok(l);
    }
    match std::env::var(GUARD_ENV) {
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("{GUARD_ENV}={s:?} is not a number"))),
        Err(_) => Ok(DEFAULT_FACTORIAL_LIMIT),
    }
}

fn construct(spec: &GraphSpec) -> Result<(ColouredGraph, EmbodimentKind)> {
    let c = ColourCluster::parse(&spec.cluster)?;
    let kind = match (spec.kind, spec.complete) {
        (KindArg::Type1, false) => EmbodimentKind::Type1Tree,
        (KindArg::Type1, true) => EmbodimentKind::Type1Complete,
        (KindArg::Type2, false) => EmbodimentKind::Type2Tree,
        (KindArg::Type2, true) => EmbodimentKind::Type2Complete,
        (_, true) => {
            return Err(Error::Parse(
                "--complete applies only to type1 and type2".into(),
            ))
        }
        (KindArg::Thorn, _) => EmbodimentKind::Thorn,
        (KindArg::Multipartite, _) => EmbodimentKind::MultipartiteMax,
        (KindArg::OddCycle, _) => EmbodimentKind::OddCycle,
        (KindArg::PathType, _) => EmbodimentKind::PathType,
        (KindArg::Null, _) => EmbodimentKind::Null,
    };
    Ok((embodiment::build(kind, &c)?, kind))
}

fn emit(text: &str, out: &Option<PathBuf>) -> Result<()> {
    match out {
        Some(path) => {
            fs::write(path, text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
        }
        None => {
            say(text);
            Ok(())
        }
    }
}

/// Writes to standard output, ignoring a closed pipe.
fn say(text: &str) {
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(text.as_bytes()).and_then(|_| out.flush());
}

fn embody(a: EmbodyArgs) -> Result<i32> {
    let (g, _) = construct(&a.spec)?;
    let text = match a.format {
        GraphFormat::Json => io::to_json(&g),
        GraphFormat::Csv => io::to_csv(&g),
        GraphFormat::Dot => io::to_dot(&g),
    };
    emit(&text, &a.out)?;
    let chi = chromatic_number_exact(g.graph(), SolverLimits::default())
        .map_or_else(|_| "unknown".to_string(), |c| c.to_string());
    say(&format!(
        "order={} size={} chi={chi}\n",
        g.graph().order(),
        g.graph().size()
    ));
    Ok(0)
}

#[derive(Serialize)]
struct IndicesReport {
    cluster: Vec<u32>,
    kind: &'static str,
    indices: ChromaticIndices,
    heuristics: Vec<HeuristicEvaluation>,
    #[serde(skip_serializing_if = "Option::is_none")]
    extremal: Option<ZagrebExtrema>,
}

fn indices(a: IndicesArgs) -> Result<i32> {
    let (g, kind) = construct(&a.spec)?;
    let opts = ExtremalOptions {
        limit: factorial_limit(a.limit)?,
        stated_k1_m3: a.stated_k1_default,
    };
    let report = IndicesReport {
        cluster: g.cluster().sizes().to_vec(),
        kind: kind.as_str(),
        indices: chromatic_indices(&g)?,
        heuristics: evaluate_heuristics(&g)?,
        extremal: if a.extremal {
            Some(extremal_indices(&g, opts)?)
        } else {
            None
        },
    };
    say(&(serde_json::to_string_pretty(&report).expect("report serializes") + "\n"));
    Ok(0)
}

fn verify(a: VerifyArgs) -> Result<i32> {
    let suites = match &a.suites {
        None => Suite::ALL.into_iter().collect(),
        Some(names) => names
            .iter()
            .map(|s| s.trim().parse())
            .collect::<Result<_>>()?,
    };
    for (name, value) in [
        ("l-max", a.l_max),
        ("n-max", a.n_max),
        ("r-max", a.r_max),
        ("fib-max", a.fib_max),
    ] {
        if value == 0 {
            return Err(Error::Parse(format!("--{name} must be at least 1")));
        }
    }
    let cfg = SuiteConfig {
        suites,
        l_max: a.l_max,
        n_max: a.n_max,
        r_max: a.r_max,
        seed: a.seed,
        clusters: a
            .clusters
            .iter()
            .map(|s| ColourCluster::parse(s))
            .collect::<Result<_>>()?,
        random_clusters: a.random_clusters,
        trees: a.trees,
        fib_max: a.fib_max,
        factorial_limit: factorial_limit(a.limit)?,
        fault: a
            .inject_fault
            .as_deref()
            .map(str::parse::<Fault>)
            .transpose()?,
        ..SuiteConfig::default()
    };
    let needs_search = [Suite::Type1, Suite::Type2, Suite::S1, Suite::S2]
        .iter()
        .any(|s| cfg.suites.contains(s));
    let widest = cfg
        .clusters
        .iter()
        .map(ColourCluster::len)
        .max()
        .unwrap_or(0)
        .max(cfg.l_max as usize);
    if needs_search && widest > cfg.factorial_limit {
        return Err(Error::FactorialRefused {
            classes: widest,
            limit: cfg.factorial_limit,
        });
    }
    let report = run_suite(&cfg);
    emit(&report.to_json(), &a.out)?;
    let s = &report.summary;
    eprintln!(
        "records={} match={} mismatch={} bound_holds={} bound_violated={} non_integer={} error={} structural={}/{}",
        s.records,
        s.matches,
        s.mismatches,
        s.bound_holds,
        s.bound_violated,
        s.non_integer,
        s.error,
        s.structural_checks - s.structural_failures,
        s.structural_checks
    );
    Ok(if a.strict && !report.structural_ok() {
        2
    } else {
        0
    })
}

fn run_sweep(a: SweepArgs) -> Result<i32> {
    let seq: SequenceKind = a.sequence.parse()?;
    let kinds = match &a.kinds {
        None => sweep::SWEEP_KINDS.to_vec(),
        Some(names) => names
            .iter()
            .map(|s| s.trim().parse())
            .collect::<Result<Vec<EmbodimentKind>>>()?,
    };
    let opts = ExtremalOptions {
        limit: factorial_limit(a.limit)?,
        ..ExtremalOptions::default()
    };
    let rows = sweep::sweep(seq, a.l_max, &kinds, opts)?;
    let text = match a.format {
        TableFormat::Csv => sweep::to_csv(&rows),
        TableFormat::Json => sweep::to_json(&rows),
    };
    emit(&text, &a.out)?;
    Ok(0)
}
