//! Set partitions of integer intervals `[k..n]`.

use serde::Serialize;

use crate::count::{exact_div, factorial, BigCount};
use crate::error::{Error, Result};
use crate::partition::Partition;

/// A partition of `{low, ..., high}` into nonempty blocks.
///
/// Blocks are kept in strictly decreasing order of their maxima, so the first
/// block always contains `high`. Elements inside a block are ascending.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SetPartition {
    low: u32,
    high: u32,
    blocks: Vec<Vec<u32>>,
}

fn check_interval(low: u32, high: u32) -> Result<()> {
    if low == 0 || low > high.saturating_add(1) {
        return Err(Error::invalid(format!(
            "interval [{low}..{high}] needs 1 <= k <= n+1"
        )));
    }
    Ok(())
}

impl SetPartition {
    /// Validates and canonicalizes the given blocks.
    pub fn new(low: u32, high: u32, blocks: Vec<Vec<u32>>) -> Result<Self> {
        check_interval(low, high)?;
        let size = (high + 1 - low) as usize;
        let mut seen = vec![false; size];
        for block in &blocks {
            if block.is_empty() {
                return Err(Error::invalid("empty block"));
            }
            for &x in block {
                if x < low || x > high {
                    return Err(Error::invalid(format!("{x} outside [{low}..{high}]")));
                }
                let slot = &mut seen[(x - low) as usize];
                if *slot {
                    return Err(Error::invalid(format!("{x} appears twice")));
                }
                *slot = true;
            }
        }
        if let Some(i) = seen.iter().position(|&s| !s) {
            return Err(Error::invalid(format!("{} is not covered", low + i as u32)));
        }
        Ok(Self::canonical(low, high, blocks))
    }

    fn canonical(low: u32, high: u32, mut blocks: Vec<Vec<u32>>) -> Self {
        for block in &mut blocks {
            block.sort_unstable();
        }
        blocks.sort_unstable_by(|a, b| b.last().cmp(&a.last()));
        SetPartition { low, high, blocks }
    }

    /// Groups `low + i` by `labels[i]`.
    pub(crate) fn from_labels(low: u32, high: u32, labels: &[u32]) -> Self {
        let mut blocks: Vec<Vec<u32>> = Vec::new();
        let mut index_of = std::collections::HashMap::new();
        for (i, &label) in labels.iter().enumerate() {
            let slot = *index_of.entry(label).or_insert_with(|| {
                blocks.push(Vec::new());
                blocks.len() - 1
            });
            blocks[slot].push(low + i as u32);
        }
        Self::canonical(low, high, blocks)
    }

    pub fn low(&self) -> u32 {
        self.low
    }

    pub fn high(&self) -> u32 {
        self.high
    }

    pub fn blocks(&self) -> &[Vec<u32>] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// Block maxima `a_1 > a_2 > ... > a_m`.
    pub fn block_maxima(&self) -> Vec<u32> {
        self.blocks.iter().map(|b| *b.last().unwrap()).collect()
    }

    /// The partition formed by the block sizes.
    pub fn part_type(&self) -> Partition {
        Partition::from_parts(self.blocks.iter().map(|b| b.len() as u32))
    }
}

pub fn set_partition_type(a: &SetPartition) -> Partition {
    a.part_type()
}

/// Streams the set partitions of `[low..high]` in restricted growth string
/// order.
#[derive(Clone, Debug)]
pub struct SetPartitions {
    low: u32,
    high: u32,
    rgs: Vec<u32>,
    done: bool,
}

impl Iterator for SetPartitions {
    type Item = SetPartition;

    fn next(&mut self) -> Option<SetPartition> {
        if self.done {
            return None;
        }
        let current = SetPartition::from_labels(self.low, self.high, &self.rgs);
        // Advance: bump the rightmost entry that may still grow, zero the tail.
        let mut advanced = false;
        for i in (1..self.rgs.len()).rev() {
            let prefix_max = *self.rgs[..i].iter().max().unwrap();
            if self.rgs[i] <= prefix_max {
                self.rgs[i] += 1;
                self.rgs[i + 1..].iter_mut().for_each(|x| *x = 0);
                advanced = true;
                break;
            }
        }
        self.done = !advanced;
        Some(current)
    }
}

/// All set partitions of `{k, ..., n}`. The empty interval `k = n + 1` yields
/// exactly one partition with no blocks.
pub fn set_partitions_of_range(k: u32, n: u32) -> Result<SetPartitions> {
    check_interval(k, n)?;
    Ok(SetPartitions {
        low: k,
        high: n,
        rgs: vec![0; (n + 1 - k) as usize],
        done: false,
    })
}

/// `(n-k+1)! / ∏ e_i! (i!)^{e_i}`, the number of set partitions of `[k..n]`
/// of type `lambda`.
pub fn count_set_partitions_of_type(k: u32, n: u32, lambda: &Partition) -> Result<BigCount> {
    check_interval(k, n)?;
    let size = (n + 1 - k) as u64;
    if lambda.weight() != size {
        return Err(Error::WeightMismatch {
            formula: "n−k+1",
            expected: size,
            found: lambda.weight(),
        });
    }
    Ok(exact_div(&factorial(size), &lambda.symmetry_factor()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partitions_of;
    use std::collections::HashMap;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn bell(m: usize) -> u64 {
        // Bell triangle.
        let mut row = vec![1u64];
        for _ in 0..m {
            let mut next = vec![*row.last().unwrap()];
            for &x in &row {
                next.push(next.last().unwrap() + x);
            }
            row = next;
        }
        row[0]
    }

    #[test]
    fn small_streams() {
        let two: Vec<_> = set_partitions_of_range(2, 3).unwrap().collect();
        assert_eq!(two.len(), 2);
        assert_eq!(two[0].blocks(), &[vec![2, 3]]);
        assert_eq!(two[1].blocks(), &[vec![3], vec![2]]);
        let single: Vec<_> = set_partitions_of_range(2, 2).unwrap().collect();
        assert_eq!(single.len(), 1);
        assert_eq!(single[0].blocks(), &[vec![2]]);
        assert_eq!(set_partitions_of_range(2, 4).unwrap().count(), 5);
    }

    #[test]
    fn empty_interval_has_one_partition() {
        let all: Vec<_> = set_partitions_of_range(4, 3).unwrap().collect();
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].num_blocks(), 0);
        assert_eq!(all[0].part_type(), Partition::empty());
    }

    #[test]
    fn bad_intervals() {
        assert!(set_partitions_of_range(0, 3).is_err());
        assert!(set_partitions_of_range(5, 3).is_err());
    }

    #[test]
    fn canonical_block_order() {
        let a = SetPartition::new(2, 4, vec![vec![3, 2], vec![4]]).unwrap();
        assert_eq!(a.blocks(), &[vec![4], vec![2, 3]]);
        assert_eq!(a.block_maxima(), vec![4, 3]);
        for sp in set_partitions_of_range(1, 6).unwrap() {
            let maxima = sp.block_maxima();
            assert_eq!(maxima[0], 6);
            assert!(maxima.windows(2).all(|w| w[0] > w[1]));
        }
    }

    #[test]
    fn validation() {
        assert!(SetPartition::new(2, 3, vec![vec![2]]).is_err());
        assert!(SetPartition::new(2, 3, vec![vec![2, 3], vec![3]]).is_err());
        assert!(SetPartition::new(2, 3, vec![vec![2, 3], vec![]]).is_err());
        assert!(SetPartition::new(2, 3, vec![vec![1, 2, 3]]).is_err());
    }

    #[test]
    fn types() {
        let s = |blocks: Vec<Vec<u32>>| SetPartition::new(2, 4, blocks).unwrap();
        assert_eq!(
            SetPartition::new(2, 3, vec![vec![2], vec![3]]).unwrap().part_type(),
            p("1^2")
        );
        assert_eq!(
            SetPartition::new(2, 3, vec![vec![2, 3]]).unwrap().part_type(),
            p("2^1")
        );
        assert_eq!(s(vec![vec![4], vec![2, 3]]).part_type(), p("1^1,2^1"));
    }

    #[test]
    fn type_counts_small() {
        assert_eq!(count_set_partitions_of_type(2, 3, &p("1^2")).unwrap(), 1u32.into());
        assert_eq!(count_set_partitions_of_type(2, 4, &p("1^1,2^1")).unwrap(), 3u32.into());
        assert_eq!(count_set_partitions_of_type(2, 3, &p("2^1")).unwrap(), 1u32.into());
        assert_eq!(
            count_set_partitions_of_type(4, 3, &Partition::empty()).unwrap(),
            1u32.into()
        );
        let err = count_set_partitions_of_type(2, 4, &p("1^2")).unwrap_err();
        assert!(err.to_string().contains("≠ n−k+1 = 3"), "{err}");
    }

    #[test]
    fn type_counts_match_enumeration() {
        for n in 2..=8u32 {
            for k in 2..=n {
                let mut observed: HashMap<Partition, u64> = HashMap::new();
                let mut total = 0u64;
                for sp in set_partitions_of_range(k, n).unwrap() {
                    assert_eq!(sp.part_type().weight(), (n + 1 - k) as u64);
                    *observed.entry(sp.part_type()).or_default() += 1;
                    total += 1;
                }
                assert_eq!(total, bell((n + 1 - k) as usize), "Bell({})", n + 1 - k);
                let mut formula_total = BigCount::from(0u32);
                for lambda in partitions_of(n + 1 - k) {
                    let c = count_set_partitions_of_type(k, n, &lambda).unwrap();
                    assert_eq!(
                        c,
                        BigCount::from(observed.get(&lambda).copied().unwrap_or(0)),
                        "k={k} n={n} type {lambda}"
                    );
                    formula_total += c;
                }
                assert_eq!(formula_total, BigCount::from(total));
            }
        }
    }

    #[test]
    fn stream_is_duplicate_free() {
        let all: Vec<_> = set_partitions_of_range(3, 8).unwrap().collect();
        let unique: std::collections::HashSet<_> = all.iter().cloned().collect();
        assert_eq!(unique.len(), all.len());
        assert_eq!(all.len() as u64, bell(6));
    }
}
