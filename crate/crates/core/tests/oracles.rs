//! Cross-checks against independent brute-force oracles.

use std::collections::{BTreeMap, VecDeque};

use itertools::Itertools;
use num_bigint::BigInt;
use treemaps::count::power;
use treemaps::symmetrize::theorem_matrix;
use treemaps::{
    build_forest_gf, build_theorem_product, build_tree_gf, census_global_trees,
    census_local_forests, census_local_trees, count_phi_preimages, enumerate_all_maps,
    enumerate_forests, enumerate_trees, global_indegree_type, induced_partition,
    local_indegree_type, phi, prufer_decode, prufer_encode, set_partitions_of_range,
    symmetrize_general, symmetrize_scaled, tree::local_indegrees, weighted_monomial_census,
    BigCount, Limits, Monomial, Options, Partition, RootedForest, SparsePoly,
};

fn adjacency(n: u32, edges: &[(u32, u32)]) -> Vec<Vec<u32>> {
    let mut adj = vec![Vec::new(); n as usize + 1];
    for &(u, v) in edges {
        adj[u as usize].push(v);
        adj[v as usize].push(u);
    }
    adj
}

/// Children counts found by breadth-first search from the given roots.
fn bfs_children_type(n: u32, edges: &[(u32, u32)], roots: &[u32]) -> Partition {
    let adj = adjacency(n, edges);
    let mut seen = vec![false; n as usize + 1];
    let mut children = vec![0u32; n as usize + 1];
    let mut queue: VecDeque<u32> = roots.iter().copied().collect();
    for &r in roots {
        seen[r as usize] = true;
    }
    while let Some(u) = queue.pop_front() {
        for &v in &adj[u as usize] {
            if !seen[v as usize] {
                seen[v as usize] = true;
                children[u as usize] += 1;
                queue.push_back(v);
            }
        }
    }
    assert!(seen[1..].iter().all(|&s| s), "not spanning");
    Partition::from_parts(children[1..].iter().copied())
}

fn lim() -> Limits {
    Limits::default()
}

#[test]
fn global_type_matches_breadth_first_orientation() {
    for n in 2..=7 {
        for t in enumerate_trees(n).unwrap() {
            for root in 1..=n {
                let want = bfs_children_type(n, t.edges(), &[root]);
                assert_eq!(treemaps::tree::global_indegree_type_rooted(&t, root).unwrap(), want);
            }
        }
    }
    for n in 1..=6 {
        for r in 1..=n {
            let roots: Vec<u32> = (1..=r).collect();
            for f in enumerate_forests(n, r).unwrap() {
                assert_eq!(global_indegree_type(&f), bfs_children_type(n, f.edges(), &roots));
            }
        }
    }
}

#[test]
fn global_census_is_root_independent() {
    let opts = Options::default();
    for n in 2..=7 {
        let first = census_global_trees(n, 1, &opts).unwrap();
        for root in 2..=n {
            assert_eq!(census_global_trees(n, root, &opts).unwrap(), first, "n={n} root={root}");
        }
    }
}

fn vector_tally(n: u32, edge_sets: impl Iterator<Item = Vec<(u32, u32)>>) -> SparsePoly {
    let mut counts: BTreeMap<Vec<u32>, i64> = BTreeMap::new();
    for edges in edge_sets {
        *counts.entry(local_indegrees(&edges, n)[1..].to_vec()).or_default() += 1;
    }
    SparsePoly::from_terms(
        n as usize,
        counts.into_iter().map(|(e, c)| (Monomial::from_exponents(e), BigInt::from(c))),
    )
    .unwrap()
}

#[test]
fn tree_polynomial_matches_indegree_vectors() {
    for n in 2..=7 {
        let brute = vector_tally(n, enumerate_trees(n).unwrap().map(|t| t.edges().to_vec()));
        assert_eq!(build_tree_gf(n, &lim()).unwrap(), brute, "n={n}");
    }
}

#[test]
fn forest_polynomial_matches_indegree_vectors() {
    for n in 2..=7 {
        for r in 1..n {
            let brute =
                vector_tally(n, enumerate_forests(n, r).unwrap().map(|f| f.edges().to_vec()));
            assert_eq!(build_forest_gf(n, r, &lim()).unwrap(), brute, "n={n} r={r}");
        }
    }
}

#[test]
fn one_root_forests_are_trees() {
    let opts = Options::default();
    for n in 2..=7 {
        assert_eq!(census_local_trees(n, &opts).unwrap(), census_local_forests(n, 1, &opts).unwrap());
        assert_eq!(build_forest_gf(n, 1, &lim()).unwrap(), build_tree_gf(n, &lim()).unwrap());
    }
}

#[test]
fn census_matches_direct_tally() {
    let opts = Options::default();
    for n in 2..=7 {
        let mut direct: BTreeMap<Partition, BigCount> = BTreeMap::new();
        for t in enumerate_trees(n).unwrap() {
            *direct.entry(local_indegree_type(t.edges(), n)).or_default() += 1u32;
        }
        let census = census_local_trees(n, &opts).unwrap();
        assert_eq!(census, direct);
        for lambda in census.keys() {
            assert_eq!(lambda.weight(), (n - 1) as u64);
            assert!(lambda.largest_part().unwrap() < n);
        }
    }
}

#[test]
fn prufer_round_trip_and_cardinalities() {
    for n in 2..=8 {
        let mut seen = std::collections::HashSet::new();
        for t in enumerate_trees(n).unwrap() {
            let code = prufer_encode(&t).unwrap();
            assert_eq!(prufer_decode(&code), t);
            seen.insert(code.sequence().to_vec());
        }
        assert_eq!(seen.len() as u64, n.pow(n - 2) as u64);
    }
    for n in 1..=7 {
        for r in 1..=n {
            let count = enumerate_forests(n, r).unwrap().count() as u64;
            let want = if r == n { 1 } else { r as u64 * (n as u64).pow(n - r - 1) };
            assert_eq!(count, want, "n={n} r={r}");
        }
    }
}

#[test]
fn forest_edges_respect_roots() {
    for f in enumerate_forests(5, 2).unwrap() {
        let again = RootedForest::new(f.n(), f.roots(), f.edges().to_vec()).unwrap();
        assert_eq!(again, f);
        assert_eq!(f.edges().len(), 3);
    }
}

#[test]
fn phi_preimage_counts_match_brute_force() {
    for n in 2..=6 {
        for k in 2..=n {
            let mut tally: BTreeMap<Vec<Vec<u32>>, u64> = BTreeMap::new();
            for g in enumerate_all_maps(k, n).unwrap() {
                let a = induced_partition(&phi(&g));
                *tally.entry(a.blocks().to_vec()).or_default() += 1;
            }
            for a in set_partitions_of_range(k, n).unwrap() {
                let brute = tally.get(a.blocks()).copied().unwrap_or(0);
                let m = a.num_blocks() as u32;
                let choices: u64 = (0..m).map(|i| (n - i) as u64).product();
                assert_eq!(count_phi_preimages(&a), BigCount::from(brute), "k={k} n={n}");
                assert_eq!(brute, choices);
            }
        }
    }
}

#[test]
fn map_census_equals_product() {
    let opts = Options::default();
    for n in 2..=7 {
        for k in 2..=n {
            let census = weighted_monomial_census(k, n, &opts).unwrap();
            let product = build_theorem_product(k, n, &lim()).unwrap();
            assert_eq!(census, product, "k={k} n={n}");
            assert_eq!(product.evaluate_at_ones(), BigInt::from(power(n as u64, (n + 1 - k) as u64)));
        }
    }
}

#[test]
fn theorem_product_at_two_is_n_times_tree_polynomial() {
    for n in 3..=7 {
        let product = build_theorem_product(2, n, &lim()).unwrap();
        assert_eq!(product, build_tree_gf(n, &lim()).unwrap().scale(n));
    }
}

#[test]
fn symmetrization_routes_agree_with_permuted_sum() {
    let opts = Options::default();
    for n in 2..=5 {
        for k in 2..=n + 1 {
            let base = build_theorem_product(k, n, &lim()).unwrap();
            let mut direct = SparsePoly::zero(n as usize);
            for sigma in (0..n as usize).permutations(n as usize) {
                direct = direct.checked_add(&base.permute_vars(&sigma).unwrap()).unwrap();
            }
            assert_eq!(symmetrize_scaled(&base, n, &opts).unwrap(), direct, "k={k} n={n}");
            assert_eq!(symmetrize_general(n, &theorem_matrix(k, n), &opts).unwrap(), direct);
        }
    }
}
