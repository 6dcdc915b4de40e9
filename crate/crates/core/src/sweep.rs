//! Extremal indices of sequence clusters against their closed forms, one row
//! per (ℓ, embodiment kind).

use serde::Serialize;

use crate::cluster::ColouredGraph;
use crate::embodiment::{self, null_embodiment, EmbodimentKind, TreeType};
use crate::error::{Error, Result};
use crate::formulas::{evaluate_formula, Bound, Family, FormulaId, Params, Value};
use crate::sequences::{sequence_cluster, SequenceKind};
use crate::zagreb::{extremal_indices, ExtremalOptions, ZagrebIndex};

/// The kinds a sweep can tabulate.
pub const SWEEP_KINDS: [EmbodimentKind; 4] = [
    EmbodimentKind::Type1Tree,
    EmbodimentKind::Type2Tree,
    EmbodimentKind::Type1Complete,
    EmbodimentKind::Type2Complete,
];

/// Column order of the CSV output.
pub const CSV_COLUMNS: &str = "sequence,l,kind,cluster,\
m1_min,m1_max,m2_min,m2_max,m3_min,m3_max,\
m1_min_formula,m1_max_formula,m2_min_formula,m2_max_formula,m3_min_formula,m3_max_formula,\
m1_min_match,m1_max_match,m2_min_match,m2_max_match,m3_min_match,m3_max_match";

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepRow {
    pub sequence: SequenceKind,
    pub l: u32,
    pub kind: &'static str,
    /// Class sizes joined with `;`.
    pub cluster: String,
    /// Extremal values in the order m1_min, m1_max, m2_min, m2_max, m3_min, m3_max.
    pub extremal: [u64; 6],
    /// Closed-form values in the same order; empty when the formula does not apply.
    pub formula: [String; 6],
    pub matches: [bool; 6],
}

fn slots() -> impl Iterator<Item = (ZagrebIndex, Bound)> {
    ZagrebIndex::ALL
        .into_iter()
        .flat_map(|i| [Bound::Min, Bound::Max].map(move |b| (i, b)))
}

fn graph_for(kind: EmbodimentKind, c: &crate::cluster::ColourCluster) -> Result<ColouredGraph> {
    if c.len() == 1 {
        return null_embodiment(c);
    }
    embodiment::build(kind, c)
}

fn formula_for(
    seq: SequenceKind,
    kind: EmbodimentKind,
    l: u32,
    sizes: &[u32],
    i: ZagrebIndex,
    b: Bound,
) -> Option<Value> {
    let (id, params) = match kind {
        EmbodimentKind::Type1Tree => (
            FormulaId::Embodiment(Family::Type1Tree, i, b),
            Params::Cluster {
                cluster: sizes.to_vec(),
            },
        ),
        EmbodimentKind::Type2Tree => (
            FormulaId::Embodiment(Family::Type2Tree, i, b),
            Params::Cluster {
                cluster: sizes.to_vec(),
            },
        ),
        EmbodimentKind::Type1Complete => (
            FormulaId::Sequence(seq, TreeType::TypeI, i, b),
            Params::Length { l },
        ),
        EmbodimentKind::Type2Complete => (
            FormulaId::Sequence(seq, TreeType::TypeII, i, b),
            Params::Length { l },
        ),
        _ => return None,
    };
    evaluate_formula(id, &params).ok()
}

/// Rows for ℓ = 1..=l_max in ℓ-major order. ℓ = 1 uses the single vertex for every kind.
pub fn sweep(
    seq: SequenceKind,
    l_max: u32,
    kinds: &[EmbodimentKind],
    opts: ExtremalOptions,
) -> Result<Vec<SweepRow>> {
    if l_max == 0 {
        return Err(Error::Parse("l-max must be at least 1".into()));
    }
    if let Some(k) = kinds.iter().find(|k| !SWEEP_KINDS.contains(k)) {
        return Err(Error::UnknownName {
            what: "sweep kind",
            value: k.as_str().into(),
        });
    }
    if l_max as usize > opts.limit {
        return Err(Error::FactorialRefused {
            classes: l_max as usize,
            limit: opts.limit,
        });
    }
    let mut rows = Vec::new();
    for l in 1..=l_max {
        let c = sequence_cluster(seq, l)?;
        for &kind in kinds {
            let ex = extremal_indices(&graph_for(kind, &c)?, opts)?;
            let mut extremal = [0u64; 6];
            let mut formula: [String; 6] = Default::default();
            let mut matches = [false; 6];
            for (k, (i, b)) in slots().enumerate() {
                let e = ex.get(i);
                extremal[k] = match b {
                    Bound::Min => e.min.value,
                    Bound::Max => e.max.value,
                };
                if let Some(f) = formula_for(seq, kind, l, c.sizes(), i, b) {
                    matches[k] = f == Value::int(extremal[k]);
                    formula[k] = f.to_string();
                }
            }
            rows.push(SweepRow {
                sequence: seq,
                l,
                kind: kind.as_str(),
                cluster: c
                    .sizes()
                    .iter()
                    .map(u32::to_string)
                    .collect::<Vec<_>>()
                    .join(";"),
                extremal,
                formula,
                matches,
            });
        }
    }
    Ok(rows)
}

pub fn to_csv(rows: &[SweepRow]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(CSV_COLUMNS.split(','))
        .expect("in-memory write");
    for r in rows {
        let mut rec = vec![
            r.sequence.to_string(),
            r.l.to_string(),
            r.kind.to_string(),
            r.cluster.clone(),
        ];
        rec.extend(r.extremal.iter().map(u64::to_string));
        rec.extend(r.formula.iter().cloned());
        rec.extend(r.matches.iter().map(bool::to_string));
        w.write_record(&rec).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
}

pub fn to_json(rows: &[SweepRow]) -> String {
    serde_json::to_string_pretty(rows).expect("rows serialize") + "\n"
}
