use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::embodiment::TreeType;
use crate::error::{Error, Result};
use crate::sequences::SequenceKind;
use crate::zagreb::ZagrebIndex;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Bound {
    Min,
    Max,
}

/// The graph a per-cluster formula family describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    Type1Tree,
    Type1Complete,
    Type2Tree,
    Type2Complete,
}

impl Family {
    pub const ALL: [Family; 4] = [
        Self::Type1Tree,
        Self::Type1Complete,
        Self::Type2Tree,
        Self::Type2Complete,
    ];

    fn prefix(self) -> &'static str {
        match self {
            Family::Type1Tree => "P35",
            Family::Type1Complete => "C36",
            Family::Type2Tree => "P37",
            Family::Type2Complete => "C38",
        }
    }

    pub fn tree_type(self) -> TreeType {
        match self {
            Family::Type1Tree | Family::Type1Complete => TreeType::TypeI,
            Family::Type2Tree | Family::Type2Complete => TreeType::TypeII,
        }
    }

    pub fn completed(self) -> bool {
        matches!(self, Family::Type1Complete | Family::Type2Complete)
    }
}

/// Identifier of one printed formula. The string form (`P33_M1`,
/// `C36_M2_MAX`, …) is the stable name used in reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FormulaId {
    /// Lower and upper bound on the first index of any tree.
    TreeM1Bounds,
    TreeM2,
    TreeM3,
    /// The tree bounds rewritten for a two-class cluster.
    TwoClassM1Bounds,
    PartiteM1,
    PartiteM2,
    PartiteM3,
    PartiteM2Closed,
    PartiteM3Closed,
    /// Per-cluster extremal index formulas for the Type-I/II trees and their completions.
    Embodiment(Family, ZagrebIndex, Bound),
    /// The minimum second index of the Type-I tree with the first term read
    /// from the accompanying edge count (`r_1 − 1` edges of product 2).
    Type1TreeM2MinEdgeCount,
    /// Completed-embodiment formulas specialised to a mirror sequence.
    Sequence(SequenceKind, TreeType, ZagrebIndex, Bound),
    /// Closed form of the minimum first index for the mirrored naturals.
    NaturalsM1MinClosed,
    FibSum,
    FibSumSq,
    FibSumCube,
    FibSumQuad,
}

fn index_name(i: ZagrebIndex) -> &'static str {
    match i {
        ZagrebIndex::M1 => "M1",
        ZagrebIndex::M2 => "M2",
        ZagrebIndex::M3 => "M3",
    }
}

fn bound_name(b: Bound) -> &'static str {
    match b {
        Bound::Min => "MIN",
        Bound::Max => "MAX",
    }
}

impl FormulaId {
    /// Every id, in report order.
    pub fn all() -> Vec<FormulaId> {
        use FormulaId::*;
        let mut out = vec![
            TreeM1Bounds,
            TreeM2,
            TreeM3,
            TwoClassM1Bounds,
            PartiteM1,
            PartiteM2,
            PartiteM3,
            PartiteM2Closed,
            PartiteM3Closed,
        ];
        for fam in Family::ALL {
            out.extend(Self::family(fam));
        }
        out.push(Type1TreeM2MinEdgeCount);
        for seq in [SequenceKind::MirrorNaturals, SequenceKind::MirrorFibonacci] {
            for tt in [TreeType::TypeI, TreeType::TypeII] {
                out.extend(Self::sequence(seq, tt));
            }
        }
        out.extend([
            NaturalsM1MinClosed,
            FibSum,
            FibSumSq,
            FibSumCube,
            FibSumQuad,
        ]);
        out.sort();
        out
    }

    /// The six MIN/MAX ids of one family.
    pub fn family(fam: Family) -> Vec<FormulaId> {
        ZagrebIndex::ALL
            .into_iter()
            .flat_map(|i| [Bound::Min, Bound::Max].map(|b| FormulaId::Embodiment(fam, i, b)))
            .collect()
    }

    pub fn sequence(seq: SequenceKind, tt: TreeType) -> Vec<FormulaId> {
        ZagrebIndex::ALL
            .into_iter()
            .flat_map(|i| [Bound::Min, Bound::Max].map(|b| FormulaId::Sequence(seq, tt, i, b)))
            .collect()
    }

    pub(crate) fn wants_sorted_cluster(&self) -> bool {
        matches!(
            self,
            FormulaId::Embodiment(..) | FormulaId::Type1TreeM2MinEdgeCount
        )
    }

    /// The documented reading for formulas whose printed form needed one.
    pub fn reading(&self) -> Option<&'static str> {
        use FormulaId::*;
        use ZagrebIndex::*;
        const EMPTY: &str = "double sums taken with the printed bounds; a range whose upper bound is below its lower bound is empty";
        const I_EQ_I: &str =
            "inner sum printed with lower bound i=i, read as i=1; empty ranges are 0";
        const TAIL: &str = "final printed form used: -(l-2) is a separate term outside the double sum; empty ranges are 0";
        match *self {
            Embodiment(Family::Type1Complete, M2 | M3, _) => Some(EMPTY),
            Embodiment(Family::Type2Complete, M2, _) => Some(EMPTY),
            Embodiment(Family::Type2Complete, M3, Bound::Min) => Some(TAIL),
            Embodiment(Family::Type2Complete, M3, Bound::Max) => Some(I_EQ_I),
            Type1TreeM2MinEdgeCount => Some("first term taken as 2(r1-1), one product-2 edge per extra class-1 vertex, instead of the printed 2(l-1)"),
            Sequence(_, TreeType::TypeI, M2 | M3, _) => Some(EMPTY),
            Sequence(SequenceKind::MirrorNaturals, TreeType::TypeII, M1, Bound::Max) => {
                Some("unbalanced parenthesis in the printed sum read as (l-(i-1))^3")
            }
            Sequence(_, TreeType::TypeII, M2, _) => Some(EMPTY),
            Sequence(_, TreeType::TypeII, M3, Bound::Min) => Some(TAIL),
            Sequence(_, TreeType::TypeII, M3, Bound::Max) => Some(I_EQ_I),
            FibSumSq => Some("printed with upper limit n; n taken as l"),
            _ => None,
        }
    }
}

impl FormulaId {
    /// Notes on ids whose printed form is known to disagree with direct
    /// computation. The formula is still evaluated as printed.
    pub fn note(&self) -> Option<&'static str> {
        use FormulaId::*;
        match *self {
            PartiteM3 => Some("printed summand i(r-1) gives 6 on K_3 where the index is 4; a summand i(r-i) would agree there, not assumed"),
            PartiteM2Closed => Some("printed closed form is negative at r=2 while the index is positive"),
            Embodiment(Family::Type1Tree, ZagrebIndex::M2, Bound::Min) => {
                Some("first term printed as 2(l-1); the accompanying argument counts r1-1 edges of product 2, see P35_M2_MIN_PROOF")
            }
            FibSumSq | FibSumCube | FibSumQuad => Some("printed identity disagrees with direct summation at small l"),
            _ => None,
        }
    }
}

impl fmt::Display for FormulaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use FormulaId::*;
        match *self {
            TreeM1Bounds => f.write_str("TREE_M1_BOUNDS"),
            TreeM2 => f.write_str("TREE_M2"),
            TreeM3 => f.write_str("TREE_M3"),
            TwoClassM1Bounds => f.write_str("COR_L2_BOUNDS"),
            PartiteM1 => f.write_str("P33_M1"),
            PartiteM2 => f.write_str("P33_M2"),
            PartiteM3 => f.write_str("P33_M3"),
            PartiteM2Closed => f.write_str("L34_M2_CLOSED"),
            PartiteM3Closed => f.write_str("L34_M3_CLOSED"),
            Embodiment(fam, i, b) => {
                write!(f, "{}_{}_{}", fam.prefix(), index_name(i), bound_name(b))
            }
            Type1TreeM2MinEdgeCount => f.write_str("P35_M2_MIN_PROOF"),
            Sequence(seq, tt, i, b) => {
                let prefix = match seq {
                    SequenceKind::MirrorNaturals => "T41",
                    SequenceKind::MirrorFibonacci => "T43",
                };
                let ty = match tt {
                    TreeType::TypeI => "I",
                    TreeType::TypeII => "II",
                };
                write!(f, "{prefix}_{ty}_{}_{}", index_name(i), bound_name(b))
            }
            NaturalsM1MinClosed => f.write_str("R42_M1MIN_CLOSED"),
            FibSum => f.write_str("FIB_SUM"),
            FibSumSq => f.write_str("FIB_SUMSQ"),
            FibSumCube => f.write_str("FIB_SUMCUBE"),
            FibSumQuad => f.write_str("FIB_SUMQUAD"),
        }
    }
}

impl FromStr for FormulaId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        FormulaId::all()
            .into_iter()
            .find(|id| id.to_string() == s)
            .ok_or_else(|| Error::UnknownName {
                what: "formula id",
                value: s.into(),
            })
    }
}

impl Serialize for FormulaId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_unique_and_parse() {
        let all = FormulaId::all();
        let names: std::collections::BTreeSet<String> = all.iter().map(|i| i.to_string()).collect();
        assert_eq!(names.len(), all.len());
        // 9 + 4*6 + 1 + 4*6 + 5
        assert_eq!(all.len(), 63);
        for id in all {
            assert_eq!(id.to_string().parse::<FormulaId>().unwrap(), id);
        }
    }

    #[test]
    fn sample_names() {
        assert_eq!(
            FormulaId::Embodiment(Family::Type1Complete, ZagrebIndex::M2, Bound::Max).to_string(),
            "C36_M2_MAX"
        );
        assert_eq!(
            FormulaId::Sequence(
                SequenceKind::MirrorFibonacci,
                TreeType::TypeII,
                ZagrebIndex::M3,
                Bound::Min
            )
            .to_string(),
            "T43_II_M3_MIN"
        );
    }
}
