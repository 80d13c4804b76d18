//! Exact enumeration of labeled trees and rooted labeled forests by indegree
//! type.
//!
//! The crate counts trees and forests on `[n]` by the multiset of vertex
//! indegrees (their *type*), under both the local orientation (every edge
//! points at its larger endpoint) and the global orientation (every edge
//! points at the root of its component). Counts are computed three ways and
//! cross-checked:
//!
//! - brute force over Prüfer codes ([`census`]),
//! - coefficient extraction from expanded generating products ([`gf`]),
//! - closed-form factorial quotients ([`identities`]).
//!
//! The [`maps`] module carries the combinatorics of maps `[k..n] -> [n]` that
//! connects the product expansion to the closed form, and [`symmetrize`]
//! sums the products over the symmetric group.
//!
//! All arithmetic is exact ([`BigCount`] is an arbitrary precision unsigned
//! integer). Exhaustive loops run on rayon when the `parallel` feature is on
//! (the default) and fall back to a sequential loop otherwise; see
//! [`Execution`].

pub mod census;
pub mod count;
pub mod error;
pub mod exec;
pub mod gf;
pub mod identities;
pub mod maps;
pub mod partition;
pub mod poly;
pub mod set_partition;
pub mod symmetrize;
pub mod tree;
pub mod verify;

pub use census::{
    census_global_forests, census_global_trees, census_local_forests, census_local_trees,
    sample_local_census, Census,
};
pub use count::{factorial, falling_factorial, BigCount};
pub use error::{Error, Result};
pub use exec::{Execution, Limits, Options};
pub use gf::{
    build_forest_gf, build_theorem_product, build_tree_gf, power_of_linear_form,
    type_coefficient_sum,
};
pub use identities::{rhs_forest_count, rhs_theorem_main, rhs_tree_count};
pub use maps::{
    count_phi_preimages, enumerate_all_maps, enumerate_fkn, fixed_point_weight,
    induced_partition, phi, weighted_monomial_census, RangeMap,
};
pub use partition::{monomial_type, partitions_of, Partition};
pub use poly::{Monomial, SparsePoly};
pub use set_partition::{
    count_set_partitions_of_type, set_partition_type, set_partitions_of_range, SetPartition,
};
pub use symmetrize::{symmetrize_general, symmetrize_scaled, symmetrize_theorem_product};
pub use tree::{
    enumerate_forests, enumerate_trees, global_indegree_type, local_indegree_type,
    prufer_decode, prufer_encode, sample_tree, LabeledTree, PruferCode, RootedForest,
    TreeSampler,
};
pub use verify::{Mismatch, VerificationReport};
