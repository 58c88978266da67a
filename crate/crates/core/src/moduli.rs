//! F-curves on M̄₀,ₙ and divisor classes recorded by their F-curve degrees.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{precondition, Error, Result};

/// A partition of `{1..n}` into four nonempty blocks. Each block is sorted
/// and blocks are ordered by their least element.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FCurve {
    blocks: [Vec<usize>; 4],
}

impl FCurve {
    pub fn new(blocks: Vec<Vec<usize>>) -> Result<Self> {
        let bad = |why: &str| precondition(format!("invalid F-curve {blocks:?}: {why}"));
        if blocks.len() != 4 {
            return Err(bad("need exactly four blocks"));
        }
        let mut blocks = blocks.clone();
        for b in &mut blocks {
            if b.is_empty() {
                return Err(bad("empty block"));
            }
            b.sort_unstable();
        }
        blocks.sort_by_key(|b| b[0]);
        let mut all: Vec<usize> = blocks.iter().flatten().copied().collect();
        all.sort_unstable();
        if all != (1..=all.len()).collect::<Vec<_>>() {
            return Err(bad("blocks must partition 1..n"));
        }
        let [a, b, c, d]: [Vec<usize>; 4] = blocks.try_into().expect("four blocks");
        Ok(FCurve { blocks: [a, b, c, d] })
    }

    pub fn blocks(&self) -> &[Vec<usize>; 4] {
        &self.blocks
    }

    pub fn n(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }
}

impl fmt::Display for FCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (j, block) in self.blocks.iter().enumerate() {
            if j > 0 {
                write!(f, "|")?;
            }
            let items: Vec<String> = block.iter().map(usize::to_string).collect();
            write!(f, "{}", items.join(","))?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for FCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for FCurve {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse {
            what: "F-curve",
            input: s.to_string(),
        };
        let inner = s
            .trim()
            .strip_prefix('{')
            .and_then(|t| t.strip_suffix('}'))
            .ok_or_else(bad)?;
        let blocks = inner
            .split('|')
            .map(|block| {
                block
                    .split(',')
                    .map(|t| t.trim().parse::<usize>().map_err(|_| bad()))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        FCurve::new(blocks).map_err(|_| bad())
    }
}

impl Serialize for FCurve {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for FCurve {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

/// All F-curves on M̄₀,ₙ in canonical order.
pub fn enumerate_fcurves(n: usize) -> Result<Vec<FCurve>> {
    if n < 4 {
        return Err(precondition(format!("F-curves need n >= 4, got {n}")));
    }
    // restricted growth strings with exactly four distinct labels
    fn grow(label: &mut Vec<usize>, n: usize, out: &mut Vec<FCurve>) {
        let used = label.iter().max().map_or(0, |&x| x + 1);
        if label.len() == n {
            if used == 4 {
                let mut blocks = vec![Vec::new(); 4];
                for (i, &b) in label.iter().enumerate() {
                    blocks[b].push(i + 1);
                }
                out.push(FCurve::new(blocks).expect("valid by construction"));
            }
            return;
        }
        if used + (n - label.len()) < 4 {
            return;
        }
        for b in 0..=used.min(3) {
            label.push(b);
            grow(label, n, out);
            label.pop();
        }
    }
    let mut out = Vec::new();
    grow(&mut Vec::with_capacity(n), n, &mut out);
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FCurveValue {
    pub fcurve: FCurve,
    #[serde(with = "decimal")]
    pub value: BigInt,
}

/// F-curve degrees of a divisor; two divisors are numerically equivalent
/// exactly when their vectors agree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DivisorVector {
    entries: Vec<FCurveValue>,
}

impl DivisorVector {
    pub fn n(&self) -> usize {
        self.entries.first().map_or(0, |e| e.fcurve.n())
    }

    pub fn get(&self, fcurve: &FCurve) -> Option<&BigInt> {
        self.entries.iter().find(|e| e.fcurve == *fcurve).map(|e| &e.value)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&FCurve, &BigInt)> {
        self.entries.iter().map(|e| (&e.fcurve, &e.value))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.value.is_zero())
    }
}

/// Evaluates `eval` on every F-curve of M̄₀,ₙ, in parallel.
pub fn divisor_vector<F>(eval: F, n: usize) -> Result<DivisorVector>
where
    F: Fn(&FCurve) -> Result<BigInt> + Sync,
{
    let entries = enumerate_fcurves(n)?
        .into_par_iter()
        .map(|fcurve| {
            let value = eval(&fcurve)?;
            Ok(FCurveValue { fcurve, value })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(DivisorVector { entries })
}

/// Serde helpers writing big integers as decimal strings.
pub mod decimal {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(v)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}
