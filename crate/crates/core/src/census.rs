//! Exhaustive tallies of indegree types over all trees or forests.
//!
//! Each census walks every Prüfer word of the relevant length, decodes it,
//! and counts the resulting type. The word space is cut into fixed index
//! chunks and the per-chunk tallies are merged, so sequential and parallel
//! runs return the same map.

use std::collections::{BTreeMap, HashMap};

use crate::count::{power_saturating, BigCount};
use crate::error::{Error, Result};
use crate::exec::{fold_chunks, guard, Options};
use crate::partition::Partition;
use crate::tree::{decode_zero_based, forest_from_augmented, TreeSampler, Words};

/// Type -> number of objects of that type.
pub type Census = BTreeMap<Partition, BigCount>;

/// Histogram key: `hist[i]` is the number of vertices of indegree `i`.
type Tally = HashMap<Vec<u32>, u64>;

struct Scratch {
    degree: Vec<u32>,
    augmented: Vec<(u32, u32)>,
    edges: Vec<(u32, u32)>,
    indeg: Vec<u32>,
    hist: Vec<u32>,
}

impl Scratch {
    fn new() -> Self {
        Scratch {
            degree: Vec::new(),
            augmented: Vec::new(),
            edges: Vec::new(),
            indeg: Vec::new(),
            hist: Vec::new(),
        }
    }

    /// Histogram of `indeg` into `hist`, then bump the tally.
    fn record(&mut self, tally: &mut Tally) {
        self.hist.clear();
        self.hist.resize(self.indeg.len() + 1, 0);
        for &d in &self.indeg {
            self.hist[d as usize] += 1;
        }
        self.hist[0] = 0;
        if let Some(c) = tally.get_mut(self.hist.as_slice()) {
            *c += 1;
        } else {
            tally.insert(self.hist.clone(), 1);
        }
    }
}

fn merge(mut a: Tally, b: Tally) -> Tally {
    if a.len() < b.len() {
        return merge(b, a);
    }
    for (k, v) in b {
        *a.entry(k).or_default() += v;
    }
    a
}

fn into_census(tally: Tally) -> Census {
    tally
        .into_iter()
        .map(|(hist, c)| (Partition::from_counts(&hist), BigCount::from(c)))
        .collect()
}

/// Runs `classify` on every Prüfer word over `0..m`. `classify` fills
/// `scratch.indeg` and returns `true` to count the word.
fn tally_words<F>(m: usize, options: &Options, classify: F) -> Tally
where
    F: Fn(&[u32], &mut Scratch) -> bool + Sync + Send,
{
    let len = m - 2;
    let total = power_saturating(m as u64, len as u64) as u64;
    fold_chunks(
        total,
        options.execution,
        Tally::new,
        |mut tally, _, range| {
            let mut scratch = Scratch::new();
            let mut words = Words::from_index(m as u32, len, range.start, range.end - range.start);
            while let Some(word) = words.next_word() {
                if classify(word, &mut scratch) {
                    scratch.record(&mut tally);
                }
                words.step();
            }
            tally
        },
        merge,
    )
}

fn tree_guard(n: u32, options: &Options) -> Result<()> {
    if n == 0 {
        return Err(Error::invalid("trees need n >= 1"));
    }
    guard("tree census n", n as u128, options.limits.max_tree_n as u128)
}

fn forest_guard(n: u32, r: u32, options: &Options) -> Result<()> {
    if r == 0 || r > n {
        return Err(Error::invalid(format!("need 1 <= r <= n, got r = {r}, n = {n}")));
    }
    guard("forest census n", n as u128, options.limits.max_forest_n as u128)
}

fn trivial_census(n_edges: u32, count: u64) -> Census {
    let mut c = Census::new();
    c.insert(Partition::from_parts([n_edges]), BigCount::from(count));
    c
}

/// Local indegree types over all `n^{n-2}` trees on `[n]`.
pub fn census_local_trees(n: u32, options: &Options) -> Result<Census> {
    tree_guard(n, options)?;
    if n == 1 {
        return Ok(trivial_census(0, 1));
    }
    let tally = tally_words(n as usize, options, |word, s| {
        decode_zero_based(word, n as usize, &mut s.degree, &mut s.augmented);
        s.indeg.clear();
        s.indeg.resize(n as usize, 0);
        for &(a, b) in &s.augmented {
            s.indeg[a.max(b) as usize] += 1;
        }
        true
    });
    Ok(into_census(tally))
}

/// Global indegree types of all trees on `[n]` rooted at `root`.
pub fn census_global_trees(n: u32, root: u32, options: &Options) -> Result<Census> {
    tree_guard(n, options)?;
    if root == 0 || root > n {
        return Err(Error::invalid(format!("root {root} outside [1..{n}]")));
    }
    if n == 1 {
        return Ok(trivial_census(0, 1));
    }
    let root0 = root - 1;
    let tally = tally_words(n as usize, options, |word, s| {
        decode_zero_based(word, n as usize, &mut s.degree, &mut s.augmented);
        // children = degree, minus the parent edge for every non-root vertex
        s.indeg.clear();
        s.indeg.resize(n as usize, 0);
        for &(a, b) in &s.augmented {
            s.indeg[a as usize] += 1;
            s.indeg[b as usize] += 1;
        }
        for (v, d) in s.indeg.iter_mut().enumerate() {
            if v as u32 != root0 {
                *d -= 1;
            }
        }
        true
    });
    Ok(into_census(tally))
}

/// Keeps the augmented trees that encode a forest with roots `{1..r}` and
/// leaves the forest edges in `s.edges`.
fn forest_word(word: &[u32], n: u32, r: u32, s: &mut Scratch) -> bool {
    let zeros = word.iter().filter(|&&x| x == 0).count() as u32;
    if zeros + 1 != r {
        return false;
    }
    decode_zero_based(word, n as usize + 1, &mut s.degree, &mut s.augmented);
    forest_from_augmented(r, &s.augmented, &mut s.edges)
}

/// Local indegree types over all forests on `[n]` with roots `{1..r}`.
pub fn census_local_forests(n: u32, r: u32, options: &Options) -> Result<Census> {
    forest_guard(n, r, options)?;
    let tally = tally_words(n as usize + 1, options, |word, s| {
        if !forest_word(word, n, r, s) {
            return false;
        }
        s.indeg.clear();
        s.indeg.resize(n as usize, 0);
        for &(_, v) in &s.edges {
            s.indeg[v as usize - 1] += 1;
        }
        true
    });
    Ok(into_census(tally))
}

/// Global indegree types over all forests on `[n]` with roots `{1..r}`.
pub fn census_global_forests(n: u32, r: u32, options: &Options) -> Result<Census> {
    forest_guard(n, r, options)?;
    let tally = tally_words(n as usize + 1, options, |word, s| {
        if !forest_word(word, n, r, s) {
            return false;
        }
        s.indeg.clear();
        s.indeg.resize(n as usize, 0);
        for &(u, v) in &s.edges {
            s.indeg[u as usize - 1] += 1;
            s.indeg[v as usize - 1] += 1;
        }
        for (i, d) in s.indeg.iter_mut().enumerate() {
            if i as u32 >= r {
                *d -= 1;
            }
        }
        true
    });
    Ok(into_census(tally))
}

/// Local indegree types of `count` uniformly sampled trees on `[n]`.
///
/// Sample `i` is drawn from RNG stream `i / 4096` under `seed`, so the result
/// depends only on `(n, count, seed)` and not on the execution mode.
pub fn sample_local_census(n: u32, count: u64, seed: u64, options: &Options) -> Result<Census> {
    // Validate n once up front.
    TreeSampler::new(n, seed)?;
    let tally = fold_chunks(
        count,
        options.execution,
        HashMap::<Partition, u64>::new,
        |mut tally, chunk, range| {
            let mut sampler = TreeSampler::with_stream(n, seed, chunk).expect("n validated");
            for _ in range {
                *tally.entry(sampler.next_local_type()).or_default() += 1;
            }
            tally
        },
        |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_default() += v;
            }
            a
        },
    );
    Ok(tally.into_iter().map(|(k, v)| (k, BigCount::from(v))).collect())
}
