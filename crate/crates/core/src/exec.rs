//! Resource guards and the parallel/sequential execution switch.
//!
//! Every exhaustive loop in the crate is expressed as a fold over a range of
//! work indices followed by a reduction of partial results. The aggregations
//! are commutative monoids (tallies, polynomial sums), so the parallel result
//! is identical to the sequential one whatever the thread interleaving.

use std::ops::Range;

use crate::error::{Error, Result};

/// How exhaustive loops are executed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    /// Uses the rayon pool. Without the `parallel` feature this runs the
    /// sequential loop.
    Parallel,
}

impl Default for Execution {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Execution::Parallel
        } else {
            Execution::Sequential
        }
    }
}

/// Upper bounds for the brute-force and expansion operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest `n` for exhaustive tree censuses.
    pub max_tree_n: u32,
    /// Largest `n` for exhaustive forest censuses.
    pub max_forest_n: u32,
    /// Largest number of maps enumerated by a map check.
    pub max_maps: u128,
    /// Largest estimated term count of an expanded polynomial.
    pub max_terms: u128,
    /// Largest `n` for sums over the symmetric group.
    pub max_perm_n: u32,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_tree_n: 9,
            max_forest_n: 8,
            max_maps: 10_000_000,
            max_terms: 1_000_000,
            max_perm_n: 7,
        }
    }
}

impl Limits {
    pub fn unlimited() -> Self {
        Limits {
            max_tree_n: u32::MAX,
            max_forest_n: u32::MAX,
            max_maps: u128::MAX,
            max_terms: u128::MAX,
            max_perm_n: u32::MAX,
        }
    }
}

pub(crate) fn guard(what: &'static str, size: u128, limit: u128) -> Result<()> {
    if size > limit {
        Err(Error::GuardExceeded { what, size, limit })
    } else {
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Options {
    pub limits: Limits,
    pub execution: Execution,
}

impl Options {
    pub fn sequential() -> Self {
        Options {
            execution: Execution::Sequential,
            ..Options::default()
        }
    }

    pub fn parallel() -> Self {
        Options {
            execution: Execution::Parallel,
            ..Options::default()
        }
    }

    pub fn with_limits(mut self, limits: Limits) -> Self {
        self.limits = limits;
        self
    }
}

/// Work indices per task. Fixed so that chunk boundaries (and with them any
/// per-chunk RNG streams) do not depend on the thread count.
pub(crate) const CHUNK: u64 = 4096;

/// Folds `fold` over `0..total` split into chunks of [`CHUNK`] indices and
/// combines the partial results with `reduce`.
#[cfg_attr(not(feature = "parallel"), allow(unused_variables))]
pub(crate) fn fold_chunks<T, I, F, R>(
    total: u64,
    execution: Execution,
    identity: I,
    fold: F,
    reduce: R,
) -> T
where
    T: Send,
    I: Fn() -> T + Sync + Send,
    F: Fn(T, u64, Range<u64>) -> T + Sync + Send,
    R: Fn(T, T) -> T + Sync + Send,
{
    let chunks = total.div_ceil(CHUNK);
    let range_of = |c: u64| c * CHUNK..((c + 1) * CHUNK).min(total);
    match execution {
        #[cfg(feature = "parallel")]
        Execution::Parallel if chunks > 1 => {
            use rayon::prelude::*;
            (0..chunks)
                .into_par_iter()
                .map(|c| fold(identity(), c, range_of(c)))
                .reduce(&identity, &reduce)
        }
        _ => (0..chunks).fold(identity(), |acc, c| fold(acc, c, range_of(c))),
    }
}
