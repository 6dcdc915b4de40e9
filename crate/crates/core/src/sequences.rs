//! Mirror-image integer sequences used as colour-class sizes.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::cluster::ColourCluster;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum SequenceKind {
    /// `a_i = ℓ − (i − 1)`
    #[serde(rename = "s1")]
    MirrorNaturals,
    /// `a_i = f_{ℓ − (i − 1)}`
    #[serde(rename = "s2")]
    MirrorFibonacci,
}

impl SequenceKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            Self::MirrorNaturals => "s1",
            Self::MirrorFibonacci => "s2",
        }
    }
}

impl fmt::Display for SequenceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SequenceKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "s1" | "s1_mirror_naturals" => Ok(Self::MirrorNaturals),
            "s2" | "s2_mirror_fibonacci" => Ok(Self::MirrorFibonacci),
            _ => Err(Error::UnknownName {
                what: "sequence",
                value: s.into(),
            }),
        }
    }
}

/// `f_0 = 0`, `f_1 = 1`, `f_n = f_{n−1} + f_{n−2}`.
pub fn fibonacci(n: u64) -> BigUint {
    let (mut a, mut b) = (BigUint::zero(), BigUint::one());
    for _ in 0..n {
        let next = &a + &b;
        a = std::mem::replace(&mut b, next);
    }
    a
}

/// Signed-index convenience for formula code; negative `n` is an error.
pub fn fibonacci_signed(n: i64) -> Result<BigUint> {
    if n < 0 {
        return Err(Error::BadParameters {
            id: "fibonacci".into(),
            reason: format!("negative index {n}"),
        });
    }
    Ok(fibonacci(n as u64))
}

/// The first `ℓ` terms of the chosen sequence, which are non-increasing.
pub fn sequence_cluster(kind: SequenceKind, l: u32) -> Result<ColourCluster> {
    if l < 1 {
        return Err(Error::EmptyCluster);
    }
    let sizes = (1..=l)
        .map(|i| {
            let k = l - (i - 1);
            match kind {
                SequenceKind::MirrorNaturals => Ok(k),
                SequenceKind::MirrorFibonacci => fibonacci(u64::from(k))
                    .to_u32()
                    .ok_or(Error::SequenceOverflow(l)),
            }
        })
        .collect::<Result<Vec<_>>>()?;
    ColourCluster::new(sizes)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fibonacci_values() {
        assert_eq!(fibonacci(0), BigUint::zero());
        assert_eq!(fibonacci(1), BigUint::one());
        assert_eq!(fibonacci(10), BigUint::from(55u32));
        assert_eq!(fibonacci(100).to_string(), "354224848179261915075");
        assert!(fibonacci_signed(-1).is_err());
    }

    #[test]
    fn clusters() {
        assert_eq!(
            sequence_cluster(SequenceKind::MirrorNaturals, 4)
                .unwrap()
                .sizes(),
            &[4, 3, 2, 1]
        );
        assert_eq!(
            sequence_cluster(SequenceKind::MirrorFibonacci, 4)
                .unwrap()
                .sizes(),
            &[3, 2, 1, 1]
        );
        assert_eq!(
            sequence_cluster(SequenceKind::MirrorNaturals, 1)
                .unwrap()
                .sizes(),
            &[1]
        );
        assert!(sequence_cluster(SequenceKind::MirrorNaturals, 0).is_err());
        assert_eq!(
            sequence_cluster(SequenceKind::MirrorFibonacci, 60),
            Err(Error::SequenceOverflow(60))
        );
    }

    #[test]
    fn totals() {
        for l in 1..=25u32 {
            let s1 = sequence_cluster(SequenceKind::MirrorNaturals, l).unwrap();
            assert_eq!(s1.total(), l * (l + 1) / 2);
            assert!(s1.is_non_increasing());
            let s2 = sequence_cluster(SequenceKind::MirrorFibonacci, l).unwrap();
            let expect = fibonacci(u64::from(l) + 2) - BigUint::one();
            assert_eq!(BigUint::from(s2.total()), expect);
            assert!(s2.is_non_increasing());
        }
    }
}
