//! Labeled trees and rooted labeled forests on `[n]`, Prüfer codes, and their
//! indegree types.
//!
//! Forests with roots `{1, ..., r}` are put in bijection with trees on
//! `{0, 1, ..., n}` whose vertex `0` is adjacent to exactly `{1, ..., r}`:
//! deleting vertex `0` gives the forest. Forest enumeration runs the tree
//! enumerator on `n + 1` labels and filters.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{monomial_type, Partition};

/// Tree on `[n]`. Edges are stored as sorted pairs `(u, v)` with `u < v`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawTree")]
pub struct LabeledTree {
    n: u32,
    edges: Vec<(u32, u32)>,
}

#[derive(Deserialize)]
struct RawTree {
    n: u32,
    edges: Vec<(u32, u32)>,
}

impl TryFrom<RawTree> for LabeledTree {
    type Error = Error;

    fn try_from(raw: RawTree) -> Result<Self> {
        LabeledTree::new(raw.n, raw.edges)
    }
}

/// Rooted forest on `[n]` with root set `{1, ..., roots}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawForest")]
pub struct RootedForest {
    n: u32,
    roots: u32,
    edges: Vec<(u32, u32)>,
}

#[derive(Deserialize)]
struct RawForest {
    n: u32,
    roots: u32,
    edges: Vec<(u32, u32)>,
}

impl TryFrom<RawForest> for RootedForest {
    type Error = Error;

    fn try_from(raw: RawForest) -> Result<Self> {
        RootedForest::new(raw.n, raw.roots, raw.edges)
    }
}

fn normalize(n: u32, edges: Vec<(u32, u32)>) -> Result<Vec<(u32, u32)>> {
    let mut out: Vec<(u32, u32)> = edges
        .into_iter()
        .map(|(u, v)| (u.min(v), u.max(v)))
        .collect();
    for &(u, v) in &out {
        if u == 0 || v > n || u == v {
            return Err(Error::invalid(format!("edge ({u}, {v}) is not on [1..{n}]")));
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// Union-find over `[n]`; returns the root-representative of each vertex, or
/// `None` when the edges contain a cycle.
fn components(n: u32, edges: &[(u32, u32)]) -> Option<Vec<usize>> {
    let mut parent: Vec<usize> = (0..=n as usize).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for &(u, v) in edges {
        let (a, b) = (find(&mut parent, u as usize), find(&mut parent, v as usize));
        if a == b {
            return None;
        }
        parent[a] = b;
    }
    Some((0..=n as usize).map(|x| find(&mut parent, x)).collect())
}

impl LabeledTree {
    pub fn new(n: u32, edges: Vec<(u32, u32)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::invalid("a tree needs at least one vertex"));
        }
        let edges = normalize(n, edges)?;
        if edges.len() != n as usize - 1 {
            return Err(Error::invalid(format!(
                "a tree on {n} vertices has {} edges, got {}",
                n - 1,
                edges.len()
            )));
        }
        if components(n, &edges).is_none() {
            return Err(Error::invalid("edges contain a cycle"));
        }
        Ok(LabeledTree { n, edges })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn degrees(&self) -> Vec<u32> {
        degrees(self.n, &self.edges)
    }
}

impl RootedForest {
    pub fn new(n: u32, roots: u32, edges: Vec<(u32, u32)>) -> Result<Self> {
        if roots == 0 || roots > n {
            return Err(Error::invalid(format!("need 1 <= r <= n, got r = {roots}, n = {n}")));
        }
        let edges = normalize(n, edges)?;
        if edges.len() != (n - roots) as usize {
            return Err(Error::invalid(format!(
                "a forest on {n} vertices with {roots} roots has {} edges, got {}",
                n - roots,
                edges.len()
            )));
        }
        let comp = components(n, &edges).ok_or_else(|| Error::invalid("edges contain a cycle"))?;
        // n - r acyclic edges leave r components; each must hold one root.
        let mut rep: Vec<usize> = (1..=roots as usize).map(|r| comp[r]).collect();
        rep.sort_unstable();
        rep.dedup();
        if rep.len() != roots as usize {
            return Err(Error::invalid("two roots share a component"));
        }
        Ok(RootedForest { n, roots, edges })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn roots(&self) -> u32 {
        self.roots
    }

    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }
}

fn degrees(n: u32, edges: &[(u32, u32)]) -> Vec<u32> {
    let mut deg = vec![0u32; n as usize + 1];
    for &(u, v) in edges {
        deg[u as usize] += 1;
        deg[v as usize] += 1;
    }
    deg
}

/// Prüfer code of a tree on `[n]`, `n >= 2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PruferCode {
    n: u32,
    sequence: Vec<u32>,
}

impl PruferCode {
    pub fn new(n: u32, sequence: Vec<u32>) -> Result<Self> {
        if n < 2 {
            return Err(Error::invalid("Prüfer codes need n >= 2"));
        }
        if sequence.len() != n as usize - 2 {
            return Err(Error::invalid(format!(
                "Prüfer code for n = {n} has length {}, got {}",
                n - 2,
                sequence.len()
            )));
        }
        if let Some(&bad) = sequence.iter().find(|&&x| x == 0 || x > n) {
            return Err(Error::invalid(format!("entry {bad} outside [1..{n}]")));
        }
        Ok(PruferCode { n, sequence })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn sequence(&self) -> &[u32] {
        &self.sequence
    }
}

/// Linear-time Prüfer decoding over labels `0..m`. `degree` and `edges` are
/// scratch buffers; on return `edges` holds the `m - 1` tree edges as
/// `(leaf, neighbor)` pairs.
pub(crate) fn decode_zero_based(
    seq: &[u32],
    m: usize,
    degree: &mut Vec<u32>,
    edges: &mut Vec<(u32, u32)>,
) {
    debug_assert_eq!(seq.len() + 2, m);
    degree.clear();
    degree.resize(m, 1);
    for &x in seq {
        degree[x as usize] += 1;
    }
    edges.clear();
    let mut ptr = degree.iter().position(|&d| d == 1).unwrap();
    let mut leaf = ptr;
    for &x in seq {
        let x = x as usize;
        edges.push((leaf as u32, x as u32));
        degree[leaf] = 0;
        degree[x] -= 1;
        if degree[x] == 1 && x < ptr {
            leaf = x;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    degree[leaf] = 0;
    edges.push((leaf as u32, m as u32 - 1));
}

pub fn prufer_decode(code: &PruferCode) -> LabeledTree {
    let m = code.n as usize;
    let seq: Vec<u32> = code.sequence.iter().map(|&x| x - 1).collect();
    let (mut degree, mut edges) = (Vec::new(), Vec::new());
    decode_zero_based(&seq, m, &mut degree, &mut edges);
    let mut edges: Vec<(u32, u32)> = edges
        .into_iter()
        .map(|(a, b)| ((a.min(b)) + 1, a.max(b) + 1))
        .collect();
    edges.sort_unstable();
    LabeledTree { n: code.n, edges }
}

/// Repeatedly removes the smallest leaf and records its neighbor.
pub fn prufer_encode(tree: &LabeledTree) -> Result<PruferCode> {
    let n = tree.n as usize;
    if n < 2 {
        return Err(Error::invalid("Prüfer codes need n >= 2"));
    }
    let mut adjacency = vec![Vec::new(); n + 1];
    for &(u, v) in &tree.edges {
        adjacency[u as usize].push(v as usize);
        adjacency[v as usize].push(u as usize);
    }
    let mut degree: Vec<usize> = adjacency.iter().map(Vec::len).collect();
    let mut removed = vec![false; n + 1];
    let mut leaves: BinaryHeap<Reverse<usize>> =
        (1..=n).filter(|&v| degree[v] == 1).map(Reverse).collect();
    let mut sequence = Vec::with_capacity(n - 2);
    while sequence.len() < n - 2 {
        let Reverse(leaf) = leaves.pop().expect("a tree always has a leaf");
        removed[leaf] = true;
        let neighbor = adjacency[leaf]
            .iter()
            .copied()
            .find(|&w| !removed[w])
            .expect("leaf has a live neighbor");
        sequence.push(neighbor as u32);
        degree[neighbor] -= 1;
        if degree[neighbor] == 1 {
            leaves.push(Reverse(neighbor));
        }
    }
    Ok(PruferCode { n: tree.n, sequence })
}

/// Odometer over all words of a given length over `0..base`, in
/// lexicographic order.
#[derive(Clone, Debug)]
pub(crate) struct Words {
    base: u32,
    current: Vec<u32>,
    remaining: u64,
}

impl Words {
    /// Words of length `len` starting from lexicographic index `start`,
    /// stopping after `count` words.
    pub(crate) fn from_index(base: u32, len: usize, start: u64, count: u64) -> Self {
        let mut current = vec![0u32; len];
        let mut idx = start;
        for slot in current.iter_mut().rev() {
            *slot = (idx % base as u64) as u32;
            idx /= base as u64;
        }
        Words { base, current, remaining: count }
    }

    /// Advances to the next word in place and returns it.
    pub(crate) fn next_word(&mut self) -> Option<&[u32]> {
        if self.remaining == 0 {
            return None;
        }
        self.remaining -= 1;
        Some(&self.current)
    }

    pub(crate) fn step(&mut self) {
        for slot in self.current.iter_mut().rev() {
            *slot += 1;
            if *slot < self.base {
                return;
            }
            *slot = 0;
        }
    }
}

/// Streams all `n^{n-2}` labeled trees on `[n]` in lexicographic Prüfer
/// order. For `n = 1` the single edgeless tree is produced.
pub fn enumerate_trees(n: u32) -> Result<impl Iterator<Item = LabeledTree>> {
    if n == 0 {
        return Err(Error::invalid("trees need n >= 1"));
    }
    let codes: Box<dyn Iterator<Item = LabeledTree>> = if n == 1 {
        Box::new(std::iter::once(LabeledTree { n: 1, edges: Vec::new() }))
    } else {
        let len = n as usize - 2;
        let total = crate::count::power_saturating(n as u64, len as u64) as u64;
        let mut words = Words::from_index(n, len, 0, total);
        Box::new(std::iter::from_fn(move || {
            let word: Vec<u32> = words.next_word()?.iter().map(|&x| x + 1).collect();
            words.step();
            Some(prufer_decode(&PruferCode { n, sequence: word }))
        }))
    };
    Ok(codes)
}

/// If the tree on `{0..n}` (zero-based labels, as decoded) has vertex `0`
/// adjacent to exactly `{1..r}`, returns the forest edges.
pub(crate) fn forest_from_augmented(
    r: u32,
    augmented: &[(u32, u32)],
    out: &mut Vec<(u32, u32)>,
) -> bool {
    out.clear();
    let mut root_edges = 0u32;
    for &(a, b) in augmented {
        let (u, v) = (a.min(b), a.max(b));
        if u == 0 {
            if v > r {
                return false;
            }
            root_edges += 1;
        } else {
            out.push((u, v));
        }
    }
    // r edges at 0, each to a distinct vertex of {1..r}.
    root_edges == r
}

/// Streams every rooted forest on `[n]` with roots `{1, ..., r}`; there are
/// `r n^{n-r-1}` of them.
pub fn enumerate_forests(n: u32, r: u32) -> Result<impl Iterator<Item = RootedForest>> {
    if r == 0 || r > n {
        return Err(Error::invalid(format!("need 1 <= r <= n, got r = {r}, n = {n}")));
    }
    let m = n as usize + 1;
    let len = m - 2;
    let total = crate::count::power_saturating(m as u64, len as u64) as u64;
    let mut words = Words::from_index(m as u32, len, 0, total);
    let (mut degree, mut augmented, mut edges) = (Vec::new(), Vec::new(), Vec::new());
    Ok(std::iter::from_fn(move || loop {
        let word = words.next_word()?;
        let zeros = word.iter().filter(|&&x| x == 0).count() as u32;
        let keep = zeros + 1 == r && {
            decode_zero_based(word, m, &mut degree, &mut augmented);
            forest_from_augmented(r, &augmented, &mut edges)
        };
        words.step();
        if keep {
            let mut e = edges.clone();
            e.sort_unstable();
            return Some(RootedForest { n, roots: r, edges: e });
        }
    }))
}

/// Local indegree of every vertex: each edge points at its larger endpoint.
/// Index 0 is unused.
pub fn local_indegrees(edges: &[(u32, u32)], n: u32) -> Vec<u32> {
    let mut indeg = vec![0u32; n as usize + 1];
    for &(u, v) in edges {
        indeg[u.max(v) as usize] += 1;
    }
    indeg
}

/// Type of the local indegree sequence of a tree or forest edge set on `[n]`.
pub fn local_indegree_type(edges: &[(u32, u32)], n: u32) -> Partition {
    monomial_type(&local_indegrees(edges, n)[1..])
}

/// Type of the global indegree sequence: every edge points toward the root
/// of its component, so a vertex's indegree is its number of children.
pub fn global_indegree_type(forest: &RootedForest) -> Partition {
    let deg = degrees(forest.n, &forest.edges);
    let children = (1..=forest.n).map(|v| deg[v as usize] - u32::from(v > forest.roots));
    Partition::from_parts(children)
}

/// Global indegree type of a tree rooted at `root`.
pub fn global_indegree_type_rooted(tree: &LabeledTree, root: u32) -> Result<Partition> {
    if root == 0 || root > tree.n {
        return Err(Error::invalid(format!("root {root} outside [1..{}]", tree.n)));
    }
    let deg = tree.degrees();
    Ok(Partition::from_parts(
        (1..=tree.n).map(|v| deg[v as usize] - u32::from(v != root)),
    ))
}

/// Seeded uniform sampler of labeled trees through uniform Prüfer codes.
///
/// Uses ChaCha8 so that streams are reproducible across platforms; distinct
/// `stream` values give independent sequences under the same seed.
#[derive(Clone, Debug)]
pub struct TreeSampler {
    n: u32,
    rng: ChaCha8Rng,
    degree: Vec<u32>,
    edges: Vec<(u32, u32)>,
    word: Vec<u32>,
}

impl TreeSampler {
    pub fn new(n: u32, seed: u64) -> Result<Self> {
        Self::with_stream(n, seed, 0)
    }

    pub fn with_stream(n: u32, seed: u64, stream: u64) -> Result<Self> {
        if n < 2 {
            return Err(Error::invalid("sampling needs n >= 2"));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(stream);
        Ok(TreeSampler {
            n,
            rng,
            degree: Vec::new(),
            edges: Vec::new(),
            word: Vec::new(),
        })
    }

    fn draw(&mut self) {
        let n = self.n;
        self.word.clear();
        for _ in 0..n - 2 {
            let x = self.rng.gen_range(0..n);
            self.word.push(x);
        }
        decode_zero_based(&self.word, n as usize, &mut self.degree, &mut self.edges);
    }

    pub fn next_tree(&mut self) -> LabeledTree {
        self.draw();
        let mut edges: Vec<(u32, u32)> = self
            .edges
            .iter()
            .map(|&(a, b)| (a.min(b) + 1, a.max(b) + 1))
            .collect();
        edges.sort_unstable();
        LabeledTree { n: self.n, edges }
    }

    /// Draws a tree and returns only its local indegree type.
    pub fn next_local_type(&mut self) -> Partition {
        self.draw();
        let mut indeg = vec![0u32; self.n as usize];
        for &(a, b) in &self.edges {
            indeg[a.max(b) as usize] += 1;
        }
        monomial_type(&indeg)
    }
}

/// One uniformly random labeled tree on `[n]`; the same seed gives the same
/// tree.
pub fn sample_tree(n: u32, seed: u64) -> Result<LabeledTree> {
    Ok(TreeSampler::new(n, seed)?.next_tree())
}
