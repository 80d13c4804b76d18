//! Integer partitions in multiplicity form.
//!
//! A partition `1^{e1} 2^{e2} ...` is stored as the sparse map `i -> e_i`
//! holding only the nonzero multiplicities. The count `e_0` of zero entries is
//! never stored: it depends on the ambient vertex count and is computed with
//! [`Partition::zero_count`] wherever a formula needs it.
//!
//! Text form: comma-separated `part^multiplicity` tokens with strictly
//! ascending parts, e.g. `1^2,3^1`. The empty partition is written `0`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::count::{factorial, BigCount};
use crate::error::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct Partition {
    multiplicities: BTreeMap<u32, u32>,
}

impl Partition {
    pub fn empty() -> Self {
        Partition::default()
    }

    /// Builds a partition from a list of parts. Zero parts are ignored.
    pub fn from_parts(parts: impl IntoIterator<Item = u32>) -> Self {
        let mut multiplicities = BTreeMap::new();
        for p in parts.into_iter().filter(|&p| p > 0) {
            *multiplicities.entry(p).or_insert(0) += 1;
        }
        Partition { multiplicities }
    }

    /// Builds a partition from `(part, multiplicity)` pairs. Zero
    /// multiplicities are dropped; a zero part or a repeated part is an error.
    pub fn from_multiplicities(pairs: impl IntoIterator<Item = (u32, u32)>) -> Result<Self> {
        let mut multiplicities = BTreeMap::new();
        for (part, mult) in pairs {
            if part == 0 {
                return Err(Error::invalid("partition parts must be positive"));
            }
            if multiplicities.contains_key(&part) {
                return Err(Error::invalid(format!("part {part} given twice")));
            }
            if mult > 0 {
                multiplicities.insert(part, mult);
            }
        }
        Ok(Partition { multiplicities })
    }

    /// `counts[i]` is the multiplicity of part `i`; `counts[0]` is ignored.
    pub(crate) fn from_counts(counts: &[u32]) -> Self {
        let multiplicities = counts
            .iter()
            .enumerate()
            .skip(1)
            .filter(|&(_, &c)| c > 0)
            .map(|(i, &c)| (i as u32, c))
            .collect();
        Partition { multiplicities }
    }

    pub fn is_empty(&self) -> bool {
        self.multiplicities.is_empty()
    }

    /// `Σ i·e_i`.
    pub fn weight(&self) -> u64 {
        self.multiplicities
            .iter()
            .map(|(&i, &e)| i as u64 * e as u64)
            .sum()
    }

    /// `Σ e_i`, the number of parts.
    pub fn len(&self) -> u64 {
        self.multiplicities.values().map(|&e| e as u64).sum()
    }

    pub fn multiplicity(&self, part: u32) -> u32 {
        self.multiplicities.get(&part).copied().unwrap_or(0)
    }

    /// `(part, multiplicity)` pairs in ascending part order.
    pub fn multiplicities(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.multiplicities.iter().map(|(&i, &e)| (i, e))
    }

    pub fn largest_part(&self) -> Option<u32> {
        self.multiplicities.keys().next_back().copied()
    }

    /// Parts listed with repetition, largest first.
    pub fn parts_descending(&self) -> Vec<u32> {
        self.multiplicities
            .iter()
            .rev()
            .flat_map(|(&i, &e)| std::iter::repeat_n(i, e as usize))
            .collect()
    }

    /// `e_0 = n - Σ e_i` relative to an ambient size `n`.
    pub fn zero_count(&self, n: u64) -> Result<u64> {
        let parts = self.len();
        n.checked_sub(parts)
            .ok_or(Error::NegativeZeroCount { n, parts })
    }

    /// `∏ e_i! (i!)^{e_i}` over the stored parts.
    pub fn symmetry_factor(&self) -> BigCount {
        self.multiplicities
            .iter()
            .map(|(&i, &e)| factorial(e as u64) * num_traits::pow(factorial(i as u64), e as usize))
            .product()
    }

    /// `∏ e_i!` over the stored parts.
    pub fn multiplicity_factorials(&self) -> BigCount {
        self.multiplicities
            .values()
            .map(|&e| factorial(e as u64))
            .product()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.multiplicities.is_empty() {
            return f.write_str("0");
        }
        for (idx, (part, mult)) in self.multiplicities.iter().enumerate() {
            if idx > 0 {
                f.write_str(",")?;
            }
            write!(f, "{part}^{mult}")?;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = |reason: &str| Error::PartitionSyntax {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let trimmed = s.trim();
        if trimmed == "0" {
            return Ok(Partition::empty());
        }
        if trimmed.is_empty() {
            return Err(err("empty input (write 0 for the empty partition)"));
        }
        let mut multiplicities = BTreeMap::new();
        let mut last = 0u32;
        for token in trimmed.split(',') {
            let (part, mult) = token
                .trim()
                .split_once('^')
                .ok_or_else(|| err("expected part^multiplicity"))?;
            let part: u32 = part.trim().parse().map_err(|_| err("part is not a number"))?;
            let mult: u32 = mult
                .trim()
                .parse()
                .map_err(|_| err("multiplicity is not a number"))?;
            if part == 0 {
                return Err(err("parts must be positive"));
            }
            if mult == 0 {
                return Err(err("zero multiplicity"));
            }
            if part == last {
                return Err(err("repeated part"));
            }
            if part < last {
                return Err(err("parts must be strictly ascending"));
            }
            last = part;
            multiplicities.insert(part, mult);
        }
        Ok(Partition { multiplicities })
    }
}

impl From<Partition> for String {
    fn from(p: Partition) -> String {
        p.to_string()
    }
}

impl TryFrom<String> for Partition {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

/// Every partition of `d`, ordered by decreasing part lists
/// (`[d]`, `[d-1, 1]`, ..., `[1, ..., 1]`).
pub fn partitions_of(d: u32) -> Vec<Partition> {
    fn descend(rest: u32, max: u32, parts: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition::from_parts(parts.iter().copied()));
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            parts.push(p);
            descend(rest - p, p, parts, out);
            parts.pop();
        }
    }
    let mut out = Vec::new();
    descend(d, d, &mut Vec::new(), &mut out);
    out
}

/// The type of a monomial: `e_i` is the number of exponents equal to `i`.
pub fn monomial_type(exponents: &[u32]) -> Partition {
    Partition::from_parts(exponents.iter().copied())
}
