//! Closed-form index formulas, evaluated exactly as printed, and a harness
//! comparing each against direct computation on the graph it describes.
//!
//! A formula that disagrees with its oracle is a finding, not a failure: the
//! status is recorded in a [`ComparisonRecord`] and nothing is corrected.

mod ids;
mod oracle;
mod printed;
mod suite;

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize, Serializer};

pub use ids::{Bound, Family, FormulaId};
pub use oracle::{oracle_value, OracleOptions};
pub use printed::evaluate_formula;
pub use suite::{
    non_increasing_grid, random_prufer, run_suite, DiscrepancyReport, Fault, StructuralCheck,
    Suite, SuiteConfig, Summary,
};

use crate::cluster::ColourCluster;
use crate::error::{Error, Result};

/// Parameters of a formula instance. The variant must match the id's schema.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Params {
    /// `K_{n,…,n}` with `r` parts.
    Partite {
        n: u32,
        r: u32,
    },
    /// A labelled tree given by its Prüfer sequence over `1..=n`.
    Tree {
        n: u32,
        prufer: Vec<u32>,
    },
    Cluster {
        cluster: Vec<u32>,
    },
    /// Summation range `a..=l`.
    Range {
        a: u32,
        l: u32,
    },
    Length {
        l: u32,
    },
}

impl Params {
    pub fn cluster(c: &ColourCluster) -> Self {
        Params::Cluster {
            cluster: c.sizes().to_vec(),
        }
    }

    pub fn tree(prufer: Vec<u32>) -> Self {
        Params::Tree {
            n: prufer.len() as u32 + 2,
            prufer,
        }
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Params::Partite { n, r } => write!(f, "n={n} r={r}"),
            Params::Tree { n, prufer } => write!(f, "n={n} prufer={prufer:?}"),
            Params::Cluster { cluster } => write!(f, "cluster={cluster:?}"),
            Params::Range { a, l } => write!(f, "a={a} l={l}"),
            Params::Length { l } => write!(f, "l={l}"),
        }
    }
}

/// An exact value, or a closed interval for bound-type formulas.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Exact(BigRational),
    Interval(BigRational, BigRational),
}

impl Value {
    pub fn int(x: impl Into<BigInt>) -> Self {
        Value::Exact(BigRational::from_integer(x.into()))
    }

    pub fn exact(&self) -> Option<&BigRational> {
        match self {
            Value::Exact(q) => Some(q),
            Value::Interval(..) => None,
        }
    }

    pub fn is_integer(&self) -> bool {
        match self {
            Value::Exact(q) => q.is_integer(),
            Value::Interval(lo, hi) => lo.is_integer() && hi.is_integer(),
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Exact(q) => write!(f, "{}", rational_string(q)),
            Value::Interval(lo, hi) => {
                write!(f, "[{}, {}]", rational_string(lo), rational_string(hi))
            }
        }
    }
}

fn rational_string(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl Serialize for Value {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Match,
    Mismatch,
    BoundHolds,
    BoundViolated,
    /// The oracle was unavailable and the formula value is not an integer.
    NonInteger,
    /// The oracle was unavailable and the formula value is an integer.
    Error,
}

impl Status {
    pub const ALL: [Status; 6] = [
        Status::Match,
        Status::Mismatch,
        Status::BoundHolds,
        Status::BoundViolated,
        Status::NonInteger,
        Status::Error,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Match => "match",
            Status::Mismatch => "mismatch",
            Status::BoundHolds => "bound_holds",
            Status::BoundViolated => "bound_violated",
            Status::NonInteger => "non_integer",
            Status::Error => "error",
        }
    }
}

/// One formula evaluated against its oracle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComparisonRecord {
    #[serde(rename = "formula_id")]
    pub id: FormulaId,
    pub params: Params,
    #[serde(rename = "formula_value")]
    pub formula: Option<Value>,
    #[serde(rename = "oracle_value")]
    pub oracle: Option<Value>,
    pub status: Status,
    pub interpreted: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reading: Option<&'static str>,
    /// Known disagreement with the definitions, stated without a correction.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub warning: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

fn status_of(formula: &Value, oracle: &Value) -> Status {
    match (formula, oracle) {
        (Value::Exact(f), Value::Exact(o)) => {
            if f == o {
                Status::Match
            } else {
                Status::Mismatch
            }
        }
        (Value::Interval(lo, hi), Value::Interval(omin, omax)) => {
            if lo <= omin && omax <= hi {
                Status::BoundHolds
            } else {
                Status::BoundViolated
            }
        }
        (Value::Interval(lo, hi), Value::Exact(o)) => {
            if lo <= o && o <= hi {
                Status::BoundHolds
            } else {
                Status::BoundViolated
            }
        }
        (Value::Exact(_), Value::Interval(..)) => Status::Mismatch,
    }
}

fn canonicalization_warning(id: FormulaId, params: &Params) -> Option<String> {
    match params {
        Params::Cluster { cluster } if id.wants_sorted_cluster() => {
            let c = ColourCluster::new(cluster.clone()).ok()?;
            if c.is_non_increasing() {
                return None;
            }
            let (sorted, map) = c.canonicalize();
            Some(format!("cluster {c} canonicalized to {sorted} via {map}"))
        }
        _ => None,
    }
}

/// Evaluates `id` both ways and classifies the outcome.
pub fn compare(id: FormulaId, params: &Params, opts: &OracleOptions) -> Result<ComparisonRecord> {
    let formula = evaluate_formula(id, params)?;
    let oracle = oracle_value(id, params, opts)?;
    Ok(ComparisonRecord {
        id,
        params: params.clone(),
        status: status_of(&formula, &oracle),
        formula: Some(formula),
        oracle: Some(oracle),
        interpreted: id.reading().is_some(),
        reading: id.reading(),
        note: id.note(),
        warning: canonicalization_warning(id, params),
        error: None,
    })
}

/// Like [`compare`] but folds oracle failures into the record. Parameter
/// errors still propagate.
pub(crate) fn compare_captured(
    id: FormulaId,
    params: &Params,
    opts: &OracleOptions,
) -> ComparisonRecord {
    match compare(id, params, opts) {
        Ok(r) => r,
        Err(e) => {
            let formula = evaluate_formula(id, params).ok();
            let status = match &formula {
                Some(v) if !v.is_integer() => Status::NonInteger,
                _ => Status::Error,
            };
            ComparisonRecord {
                id,
                params: params.clone(),
                formula,
                oracle: None,
                status,
                interpreted: id.reading().is_some(),
                reading: id.reading(),
                note: id.note(),
                warning: canonicalization_warning(id, params),
                error: Some(e.to_string()),
            }
        }
    }
}

pub(crate) fn bad(id: FormulaId, reason: impl Into<String>) -> Error {
    Error::BadParameters {
        id: id.to_string(),
        reason: reason.into(),
    }
}

pub(crate) fn zero() -> BigRational {
    BigRational::zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn value_strings() {
        assert_eq!(Value::int(14).to_string(), "14");
        assert_eq!(Value::Exact(q(-3, 4)).to_string(), "-3/4");
        assert_eq!(Value::Interval(q(7, 1), q(13, 1)).to_string(), "[7, 13]");
        assert!(!Value::Exact(q(1, 2)).is_integer());
        assert!(Value::Exact(BigRational::one()).is_integer());
    }

    #[test]
    fn statuses() {
        assert_eq!(status_of(&Value::int(3), &Value::int(3)), Status::Match);
        assert_eq!(status_of(&Value::int(3), &Value::int(4)), Status::Mismatch);
        let bounds = Value::Interval(q(7, 1), q(13, 1));
        assert_eq!(
            status_of(&bounds, &Value::Interval(q(7, 1), q(13, 1))),
            Status::BoundHolds
        );
        assert_eq!(
            status_of(&bounds, &Value::Interval(q(6, 1), q(13, 1))),
            Status::BoundViolated
        );
        assert_eq!(
            status_of(&Value::int(3), &Value::Interval(q(3, 1), q(4, 1))),
            Status::Mismatch
        );
    }

    #[test]
    fn params_json_shapes() {
        let p = Params::Partite { n: 1, r: 3 };
        assert_eq!(serde_json::to_string(&p).unwrap(), r#"{"n":1,"r":3}"#);
        let t = Params::tree(vec![1, 1]);
        assert_eq!(
            serde_json::to_string(&t).unwrap(),
            r#"{"n":4,"prufer":[1,1]}"#
        );
        let back: Params = serde_json::from_str(r#"{"a":2,"l":5}"#).unwrap();
        assert_eq!(back, Params::Range { a: 2, l: 5 });
        let back: Params = serde_json::from_str(r#"{"l":5}"#).unwrap();
        assert_eq!(back, Params::Length { l: 5 });
    }
}
