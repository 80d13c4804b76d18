//! Maps from `[k..n]` into `[n]`.
//!
//! Expanding `∏_{j=k}^{n} (j x_j + x_{j+1} + ... + x_n)` picks, for every
//! factor `j`, an image `f(j) >= j`; the monomial records the preimage sizes
//! and the coefficient is the product of the fixed points. The operator
//! `Φ g(r) = max(g(r), r)` folds all maps `g: [k..n] -> [n]` onto that family,
//! hitting each `f` exactly `C(f)` times.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::count::{factorial, falling_factorial, power_saturating, BigCount};
use crate::error::{Error, Result};
use crate::exec::{guard, Options};
use crate::poly::{Monomial, SparsePoly};
use crate::set_partition::SetPartition;

/// A function `[k..n] -> [n]` stored as its value list `f(k), ..., f(n)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawMap")]
pub struct RangeMap {
    k: u32,
    n: u32,
    values: Vec<u32>,
}

#[derive(Deserialize)]
struct RawMap {
    k: u32,
    n: u32,
    values: Vec<u32>,
}

impl TryFrom<RawMap> for RangeMap {
    type Error = Error;

    fn try_from(raw: RawMap) -> Result<Self> {
        RangeMap::new(raw.k, raw.n, raw.values)
    }
}

fn check_domain(k: u32, n: u32) -> Result<()> {
    if k == 0 || k > n + 1 {
        return Err(Error::invalid(format!("domain [{k}..{n}] needs 1 <= k <= n+1")));
    }
    Ok(())
}

impl RangeMap {
    pub fn new(k: u32, n: u32, values: Vec<u32>) -> Result<Self> {
        check_domain(k, n)?;
        if values.len() != (n + 1 - k) as usize {
            return Err(Error::invalid(format!(
                "a map on [{k}..{n}] has {} values, got {}",
                n + 1 - k,
                values.len()
            )));
        }
        if let Some(&bad) = values.iter().find(|&&v| v == 0 || v > n) {
            return Err(Error::invalid(format!("value {bad} outside [1..{n}]")));
        }
        Ok(RangeMap { k, n, values })
    }

    pub fn identity(k: u32, n: u32) -> Result<Self> {
        Self::new(k, n, (k..=n).collect())
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    /// `f(r)` for `r` in `[k..n]`.
    pub fn get(&self, r: u32) -> u32 {
        self.values[(r - self.k) as usize]
    }

    fn domain(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.values.iter().enumerate().map(|(i, &v)| (self.k + i as u32, v))
    }

    /// Membership in `F_{k,n}`: `f(r) >= r` everywhere.
    pub fn is_monotone_above_diagonal(&self) -> bool {
        self.domain().all(|(r, v)| v >= r)
    }

    /// `|f^{-1}(j)|` for `j` in `1..=n`, 0-based by `j - 1`.
    pub fn preimage_sizes(&self) -> Vec<u32> {
        let mut sizes = vec![0u32; self.n as usize];
        for &v in &self.values {
            sizes[v as usize - 1] += 1;
        }
        sizes
    }
}

/// Odometer over value lists with per-position lower bounds and a common
/// upper bound `n`.
#[derive(Clone, Debug)]
pub struct MapStream {
    k: u32,
    n: u32,
    lows: Vec<u32>,
    current: Vec<u32>,
    done: bool,
}

impl MapStream {
    fn new(k: u32, n: u32, lows: Vec<u32>) -> Self {
        MapStream { k, n, current: lows.clone(), lows, done: false }
    }
}

impl Iterator for MapStream {
    type Item = RangeMap;

    fn next(&mut self) -> Option<RangeMap> {
        if self.done {
            return None;
        }
        let out = RangeMap { k: self.k, n: self.n, values: self.current.clone() };
        self.done = true;
        for i in (0..self.current.len()).rev() {
            if self.current[i] < self.n {
                self.current[i] += 1;
                self.done = false;
                break;
            }
            self.current[i] = self.lows[i];
        }
        Some(out)
    }
}

/// All `n^{n-k+1}` maps `[k..n] -> [n]`, lexicographic in the value list.
pub fn enumerate_all_maps(k: u32, n: u32) -> Result<MapStream> {
    check_domain(k, n)?;
    Ok(MapStream::new(k, n, vec![1; (n + 1 - k) as usize]))
}

/// The `(n-k+1)!` maps with `f(r) >= r`, lexicographic.
pub fn enumerate_fkn(k: u32, n: u32) -> Result<MapStream> {
    check_domain(k, n)?;
    Ok(MapStream::new(k, n, (k..=n).collect()))
}

/// `C(f)`, the product of the fixed points of `f`.
pub fn fixed_point_weight(f: &RangeMap) -> BigCount {
    f.domain()
        .filter(|&(r, v)| r == v)
        .map(|(r, _)| BigCount::from(r))
        .product()
}

/// `Φ g(r) = max(g(r), r)`.
pub fn phi(g: &RangeMap) -> RangeMap {
    RangeMap {
        k: g.k,
        n: g.n,
        values: g.domain().map(|(r, v)| v.max(r)).collect(),
    }
}

/// The set partition of `[k..n]` whose blocks are the nonempty fibers of `f`.
pub fn induced_partition(f: &RangeMap) -> SetPartition {
    SetPartition::from_labels(f.k, f.n, &f.values)
}

/// Number of maps `g: [k..n] -> [n]` with `Φ g` inducing `a`:
/// `n (n-1) ... (n-m+1)` for `m` blocks.
pub fn count_phi_preimages(a: &SetPartition) -> BigCount {
    falling_factorial(a.high() as u64, a.num_blocks() as u64)
}

/// `Σ_{f ∈ F_{k,n}} C(f) ∏_j x_j^{|f^{-1}(j)|}`, by enumerating `F_{k,n}`.
pub fn weighted_monomial_census(k: u32, n: u32, options: &Options) -> Result<SparsePoly> {
    check_domain(k, n)?;
    let size = (n + 1 - k) as u64;
    let family = if size <= 33 {
        factorial(size).try_into().unwrap_or(u128::MAX)
    } else {
        u128::MAX
    };
    guard("map family size", family, options.limits.max_maps)?;
    let mut out = SparsePoly::zero(n as usize);
    for f in enumerate_fkn(k, n)? {
        let weight = BigInt::from(fixed_point_weight(&f));
        out.add_term(Monomial::from_exponents(f.preimage_sizes()), weight);
    }
    Ok(out)
}

/// Guard for sweeps over all `n^{n-k+1}` maps.
pub(crate) fn all_maps_guard(k: u32, n: u32, options: &Options) -> Result<()> {
    check_domain(k, n)?;
    guard(
        "map enumeration size",
        power_saturating(n as u64, (n + 1 - k) as u64),
        options.limits.max_maps,
    )
}

/// Decodes the `idx`-th map (lexicographic) on `[k..n]`.
pub(crate) fn map_at(k: u32, n: u32, mut idx: u64) -> RangeMap {
    let len = (n + 1 - k) as usize;
    let mut values = vec![0u32; len];
    for slot in values.iter_mut().rev() {
        *slot = (idx % n as u64) as u32 + 1;
        idx /= n as u64;
    }
    RangeMap { k, n, values }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashMap;

    fn m(k: u32, n: u32, values: &[u32]) -> RangeMap {
        RangeMap::new(k, n, values.to_vec()).unwrap()
    }

    #[test]
    fn stream_sizes() {
        assert_eq!(enumerate_all_maps(2, 3).unwrap().count(), 9);
        assert_eq!(enumerate_all_maps(3, 3).unwrap().count(), 3);
        let empty: Vec<_> = enumerate_all_maps(4, 3).unwrap().collect();
        assert_eq!(empty.len(), 1);
        assert!(empty[0].values().is_empty());
        assert!(enumerate_all_maps(5, 3).is_err());
    }

    #[test]
    fn stream_is_lexicographic() {
        let all: Vec<_> = enumerate_all_maps(2, 4).unwrap().collect();
        assert!(all.windows(2).all(|w| w[0].values() < w[1].values()));
        for (i, f) in all.iter().enumerate() {
            assert_eq!(&map_at(2, 4, i as u64), f);
        }
    }

    #[test]
    fn fkn_examples() {
        let f: Vec<_> = enumerate_fkn(2, 3).unwrap().collect();
        assert_eq!(f, vec![m(2, 3, &[2, 3]), m(2, 3, &[3, 3])]);
        assert_eq!(enumerate_fkn(3, 3).unwrap().collect::<Vec<_>>(), vec![m(3, 3, &[3])]);
        assert_eq!(enumerate_fkn(2, 4).unwrap().count(), 6);
    }

    #[test]
    fn fkn_is_the_filtered_family() {
        for n in 1..=6 {
            for k in 1..=n + 1 {
                let filtered: Vec<_> = enumerate_all_maps(k, n)
                    .unwrap()
                    .filter(RangeMap::is_monotone_above_diagonal)
                    .collect();
                let direct: Vec<_> = enumerate_fkn(k, n).unwrap().collect();
                assert_eq!(filtered, direct, "k={k} n={n}");
            }
        }
    }

    #[test]
    fn weights() {
        assert_eq!(fixed_point_weight(&RangeMap::identity(2, 3).unwrap()), 6u32.into());
        assert_eq!(fixed_point_weight(&m(2, 3, &[3, 3])), 3u32.into());
        assert_eq!(fixed_point_weight(&m(2, 3, &[3, 2])), 1u32.into());
    }

    #[test]
    fn phi_examples() {
        assert_eq!(phi(&m(2, 3, &[1, 1])), m(2, 3, &[2, 3]));
        assert_eq!(phi(&m(2, 3, &[3, 3])), m(2, 3, &[3, 3]));
        assert_eq!(phi(&m(2, 3, &[3, 2])), m(2, 3, &[3, 3]));
    }

    #[test]
    fn phi_is_idempotent_and_lands_in_fkn() {
        for g in enumerate_all_maps(2, 5).unwrap() {
            let f = phi(&g);
            assert!(f.is_monotone_above_diagonal());
            assert_eq!(phi(&f), f);
        }
    }

    #[test]
    fn induced_partitions() {
        let id = induced_partition(&RangeMap::identity(2, 3).unwrap());
        assert_eq!(id.blocks(), &[vec![3], vec![2]]);
        assert_eq!(induced_partition(&m(2, 3, &[3, 3])).blocks(), &[vec![2, 3]]);
        assert_eq!(induced_partition(&m(2, 4, &[2, 2, 4])).blocks(), &[vec![4], vec![2, 3]]);
    }

    #[test]
    fn preimage_counts_against_brute_force() {
        let sep = SetPartition::new(2, 3, vec![vec![3], vec![2]]).unwrap();
        let joined = SetPartition::new(2, 3, vec![vec![2, 3]]).unwrap();
        assert_eq!(count_phi_preimages(&sep), 6u32.into());
        assert_eq!(count_phi_preimages(&joined), 3u32.into());
        let empty = SetPartition::new(4, 3, vec![]).unwrap();
        assert_eq!(count_phi_preimages(&empty), 1u32.into());

        let mut tally: HashMap<SetPartition, u64> = HashMap::new();
        for g in enumerate_all_maps(2, 3).unwrap() {
            *tally.entry(induced_partition(&phi(&g))).or_default() += 1;
        }
        assert_eq!(tally[&sep], 6);
        assert_eq!(tally[&joined], 3);
    }

    #[test]
    fn weighted_census_examples() {
        let opts = Options::default();
        let c = weighted_monomial_census(2, 3, &opts).unwrap();
        assert_eq!(c, crate::gf::build_theorem_product(2, 3, &opts.limits).unwrap());
        assert_eq!(c.to_string(), "6*x2*x3 + 3*x3^2");
        assert_eq!(weighted_monomial_census(3, 3, &opts).unwrap().to_string(), "3*x3");
        assert_eq!(weighted_monomial_census(4, 3, &opts).unwrap(), SparsePoly::one(3));
    }

    #[test]
    fn validation_and_json() {
        assert!(RangeMap::new(2, 3, vec![1]).is_err());
        assert!(RangeMap::new(2, 3, vec![0, 1]).is_err());
        assert!(RangeMap::new(2, 3, vec![4, 1]).is_err());
        let f = m(2, 4, &[2, 4, 4]);
        let json = serde_json::to_string(&f).unwrap();
        assert_eq!(json, r#"{"k":2,"n":4,"values":[2,4,4]}"#);
        assert_eq!(serde_json::from_str::<RangeMap>(&json).unwrap(), f);
        assert!(serde_json::from_str::<RangeMap>(r#"{"k":2,"n":4,"values":[5,1,1]}"#).is_err());
    }
}
