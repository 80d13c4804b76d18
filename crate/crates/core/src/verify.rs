//! Verification drivers that compare closed forms, generating products and
//! brute-force censuses cell by cell.
//!
//! Every driver walks its cells in a fixed order and records one
//! [`Mismatch`] per failed comparison, so reports are reproducible byte for
//! byte. Heavy inner loops (censuses, map sweeps, permutation sums) use the
//! execution mode in [`Options`].

use std::collections::HashMap;
use std::fmt::Display;

use num_bigint::BigInt;
use serde::Serialize;

use crate::census::{
    census_global_forests, census_global_trees, census_local_forests, census_local_trees, Census,
};
use crate::count::BigCount;
use crate::error::{Error, Result};
use crate::exec::{fold_chunks, Options};
use crate::gf::{build_forest_gf, build_theorem_product, build_tree_gf, power_of_linear_form, type_coefficient_sum};
use crate::identities::{rhs_forest_count, rhs_theorem_main, rhs_tree_count};
use crate::maps::{
    all_maps_guard, count_phi_preimages, enumerate_fkn, fixed_point_weight, induced_partition,
    map_at, phi, weighted_monomial_census, RangeMap,
};
use crate::partition::{partitions_of, Partition};
use crate::poly::SparsePoly;
use crate::set_partition::{count_set_partitions_of_type, set_partitions_of_range, SetPartition};
use crate::symmetrize::{group_order, symmetrize_theorem_product};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    /// Which comparison inside the cell failed.
    pub check: String,
    pub params: String,
    pub expected: String,
    pub observed: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub identity: String,
    pub scope: String,
    pub checks_run: u64,
    /// Cells deliberately not checked (e.g. no generating function exists).
    pub skipped: u64,
    pub mismatches: Vec<Mismatch>,
    /// Disagreements on side claims that do not fail the report.
    pub flagged: Vec<Mismatch>,
    pub passed: bool,
}

impl VerificationReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

struct Builder {
    identity: &'static str,
    scope: String,
    checks_run: u64,
    skipped: u64,
    mismatches: Vec<Mismatch>,
    flagged: Vec<Mismatch>,
}

impl Builder {
    fn new(identity: &'static str, scope: String) -> Self {
        Builder {
            identity,
            scope,
            checks_run: 0,
            skipped: 0,
            mismatches: Vec::new(),
            flagged: Vec::new(),
        }
    }

    fn cell(&mut self) {
        self.checks_run += 1;
    }

    fn mismatch(check: &str, params: &str, expected: impl Display, observed: impl Display) -> Mismatch {
        Mismatch {
            check: check.to_string(),
            params: params.to_string(),
            expected: expected.to_string(),
            observed: observed.to_string(),
        }
    }

    fn compare<T: PartialEq + Display>(&mut self, check: &str, params: &str, expected: &T, observed: &T) {
        if expected != observed {
            self.mismatches.push(Self::mismatch(check, params, expected, observed));
        }
    }

    fn flag<T: PartialEq + Display>(&mut self, check: &str, params: &str, expected: &T, observed: &T) {
        if expected != observed {
            self.flagged.push(Self::mismatch(check, params, expected, observed));
        }
    }

    /// Coefficient-by-coefficient polynomial comparison.
    fn compare_polys(&mut self, check: &str, params: &str, expected: &SparsePoly, observed: &SparsePoly) {
        if expected == observed {
            return;
        }
        let mut monomials: Vec<_> = expected.terms().map(|(m, _)| m.clone()).collect();
        monomials.extend(observed.terms().map(|(m, _)| m.clone()));
        monomials.sort_by(|a, b| b.cmp(a));
        monomials.dedup();
        for m in monomials {
            let (e, o) = (expected.coefficient(&m), observed.coefficient(&m));
            if e != o {
                let at = format!("{params} monomial={:?}", m.exponents());
                self.mismatches.push(Self::mismatch(check, &at, e, o));
            }
        }
    }

    fn finish(self) -> VerificationReport {
        VerificationReport {
            identity: self.identity.to_string(),
            scope: self.scope,
            checks_run: self.checks_run,
            skipped: self.skipped,
            passed: self.mismatches.is_empty(),
            mismatches: self.mismatches,
            flagged: self.flagged,
        }
    }
}

fn lookup(census: &Census, lambda: &Partition) -> BigInt {
    BigInt::from(census.get(lambda).cloned().unwrap_or_default())
}

fn census_string(census: &Census) -> String {
    census
        .iter()
        .map(|(l, c)| format!("{l}:{c}"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn need(n_max: u32, min: u32) -> Result<()> {
    if n_max < min {
        return Err(Error::invalid(format!("n-max must be at least {min}, got {n_max}")));
    }
    Ok(())
}

/// Trees by local indegree type: census = closed form = type coefficient sum
/// of `P_n`, for `3 <= n <= n_max`.
pub fn verify_local_tree_identity(n_max: u32, options: &Options) -> Result<VerificationReport> {
    need(n_max, 3)?;
    let mut b = Builder::new("eq2", format!("3 <= n <= {n_max}, every type of weight n-1"));
    for n in 3..=n_max {
        let census = census_local_trees(n, options)?;
        let gf = build_tree_gf(n, &options.limits)?;
        for lambda in partitions_of(n - 1) {
            b.cell();
            let params = format!("n={n} type={lambda}");
            let rhs = BigInt::from(rhs_tree_count(n, &lambda)?);
            b.compare("census", &params, &rhs, &lookup(&census, &lambda));
            b.compare("coefficient_sum", &params, &rhs, &type_coefficient_sum(&gf, &lambda));
        }
    }
    Ok(b.finish())
}

/// Type coefficient sums of `∏_{j=k}^{n} L_j` against the closed form, for
/// `2 <= k <= n + 1`, `2 <= n <= n_max`.
pub fn verify_theorem_main(n_max: u32, options: &Options) -> Result<VerificationReport> {
    verify_theorem_main_with(n_max, |k, n| build_theorem_product(k, n, &options.limits))
}

/// [`verify_theorem_main`] with a caller-supplied product builder, so the
/// harness itself can be tested against corrupted products.
pub fn verify_theorem_main_with<F>(n_max: u32, build: F) -> Result<VerificationReport>
where
    F: Fn(u32, u32) -> Result<SparsePoly>,
{
    need(n_max, 2)?;
    let mut b = Builder::new(
        "theorem-main",
        format!("2 <= k <= n+1, 2 <= n <= {n_max}, every type of weight n-k+1"),
    );
    for n in 2..=n_max {
        for k in 2..=n + 1 {
            let product = build(k, n)?;
            for lambda in partitions_of(n + 1 - k) {
                b.cell();
                let params = format!("n={n} k={k} type={lambda}");
                let rhs = BigInt::from(rhs_theorem_main(n, k, &lambda)?);
                b.compare("coefficient_sum", &params, &rhs, &type_coefficient_sum(&product, &lambda));
            }
        }
    }
    Ok(b.finish())
}

/// Forests by local indegree type: census = closed form = type coefficient
/// sum of the forest polynomial, for `1 <= r < n <= n_max`. The `r = n`
/// cells have no polynomial and are counted as skipped.
pub fn verify_forest_identity(n_max: u32, options: &Options) -> Result<VerificationReport> {
    need(n_max, 2)?;
    let mut b = Builder::new("forests", format!("1 <= r < n, 2 <= n <= {n_max}, every type of weight n-r"));
    for n in 2..=n_max {
        for r in 1..=n {
            if r == n {
                b.skipped += 1;
                continue;
            }
            let census = census_local_forests(n, r, options)?;
            let gf = build_forest_gf(n, r, &options.limits)?;
            for lambda in partitions_of(n - r) {
                b.cell();
                let params = format!("n={n} r={r} type={lambda}");
                let rhs = BigInt::from(rhs_forest_count(n, r, &lambda)?);
                b.compare("census", &params, &rhs, &lookup(&census, &lambda));
                b.compare("coefficient_sum", &params, &rhs, &type_coefficient_sum(&gf, &lambda));
            }
        }
    }
    Ok(b.finish())
}

/// Global orientation: rooted trees at every root against the tree formula
/// (plus root independence of the census), and forests against the forest
/// formula. Forest disagreements are reported in `flagged`.
pub fn verify_global_identities(n_max: u32, options: &Options) -> Result<VerificationReport> {
    need(n_max, 2)?;
    let mut b = Builder::new(
        "global",
        format!("2 <= n <= {n_max}: every root of trees; 1 <= r <= n for forests"),
    );
    for n in 2..=n_max {
        let mut first: Option<Census> = None;
        for root in 1..=n {
            let census = census_global_trees(n, root, options)?;
            for lambda in partitions_of(n - 1) {
                b.cell();
                let params = format!("n={n} root={root} type={lambda}");
                let rhs = BigInt::from(rhs_tree_count(n, &lambda)?);
                b.compare("rooted_tree_census", &params, &rhs, &lookup(&census, &lambda));
            }
            match &first {
                None => first = Some(census),
                Some(reference) => {
                    b.cell();
                    b.compare(
                        "root_independence",
                        &format!("n={n} root={root}"),
                        &census_string(reference),
                        &census_string(&census),
                    );
                }
            }
        }
        for r in 1..=n {
            let census = census_global_forests(n, r, options)?;
            for lambda in partitions_of(n - r) {
                b.cell();
                let params = format!("n={n} r={r} type={lambda}");
                let rhs = BigInt::from(rhs_forest_count(n, r, &lambda)?);
                b.flag("global_forest_census", &params, &rhs, &lookup(&census, &lambda));
            }
        }
    }
    Ok(b.finish())
}

type PhiTally = (HashMap<RangeMap, u64>, HashMap<SetPartition, u64>);

/// One pass over every `g: [k..n] -> [n]`, tallying `Φ g` and the set
/// partition it induces.
fn sweep_maps(k: u32, n: u32, options: &Options) -> PhiTally {
    let total = crate::count::power_saturating(n as u64, (n + 1 - k) as u64) as u64;
    fold_chunks(
        total,
        options.execution,
        || (HashMap::new(), HashMap::new()),
        |(mut images, mut blocks), _, range| {
            for idx in range {
                let f = phi(&map_at(k, n, idx));
                *blocks.entry(induced_partition(&f)).or_default() += 1;
                *images.entry(f).or_default() += 1;
            }
            (images, blocks)
        },
        |(mut ia, mut ba), (ib, bb)| {
            for (key, v) in ib {
                *ia.entry(key).or_default() += v;
            }
            for (key, v) in bb {
                *ba.entry(key).or_default() += v;
            }
            (ia, ba)
        },
    )
}

/// The map identities, exhaustively for `2 <= k <= n + 1`, `2 <= n <= n_max`:
///
/// - every `f` in `F_{k,n}` has exactly `C(f)` preimages under `Φ`,
/// - every set partition with `m` blocks is induced by `n!/(n-m)!` maps `Φ g`,
/// - the weighted map census equals the expanded product,
/// - set partition counts by type match the closed form.
pub fn verify_map_identities(n_max: u32, options: &Options) -> Result<VerificationReport> {
    need(n_max, 2)?;
    let mut b = Builder::new("maps", format!("2 <= k <= n+1, 2 <= n <= {n_max}"));
    for n in 2..=n_max {
        for k in 2..=n + 1 {
            all_maps_guard(k, n, options)?;
            let (images, blocks) = sweep_maps(k, n, options);
            let base = format!("n={n} k={k}");

            let mut family = 0usize;
            for f in enumerate_fkn(k, n)? {
                family += 1;
                b.cell();
                let observed = BigCount::from(images.get(&f).copied().unwrap_or(0));
                let params = format!("{base} f={:?}", f.values());
                b.compare("phi_multiplicity", &params, &fixed_point_weight(&f), &observed);
            }
            b.cell();
            b.compare("phi_image_in_family", &base, &family, &images.len());

            for a in set_partitions_of_range(k, n)? {
                b.cell();
                let observed = BigCount::from(blocks.get(&a).copied().unwrap_or(0));
                let params = format!("{base} blocks={:?}", a.blocks());
                b.compare("phi_partition_preimages", &params, &count_phi_preimages(&a), &observed);
            }

            b.cell();
            let census = weighted_monomial_census(k, n, options)?;
            let product = build_theorem_product(k, n, &options.limits)?;
            b.compare_polys("weighted_map_census", &base, &product, &census);

            let mut by_type: HashMap<Partition, u64> = HashMap::new();
            for a in set_partitions_of_range(k, n)? {
                *by_type.entry(a.part_type()).or_default() += 1;
            }
            for lambda in partitions_of(n + 1 - k) {
                b.cell();
                let params = format!("{base} type={lambda}");
                let observed = BigCount::from(by_type.get(&lambda).copied().unwrap_or(0));
                b.compare(
                    "set_partitions_of_type",
                    &params,
                    &count_set_partitions_of_type(k, n, &lambda)?,
                    &observed,
                );
            }
        }
    }
    Ok(b.finish())
}

/// `Σ_σ ∏_{j=k}^{n} (j x_{σ(j)} + ... + x_{σ(n)}) = n! (x_1 + ... + x_n)^{n-k+1}`
/// as polynomials, for `2 <= k <= n + 1`, `2 <= n <= n_max`.
pub fn verify_symmetric_identity(n_max: u32, options: &Options) -> Result<VerificationReport> {
    need(n_max, 2)?;
    let mut b = Builder::new("symmetric", format!("2 <= k <= n+1, 2 <= n <= {n_max}"));
    for n in 2..=n_max {
        for k in 2..=n + 1 {
            b.cell();
            let lhs = symmetrize_theorem_product(k, n, options)?;
            let rhs = power_of_linear_form(n, n + 1 - k, &options.limits)?.scale(group_order(n));
            b.compare_polys("symmetrized_product", &format!("n={n} k={k}"), &rhs, &lhs);
        }
    }
    Ok(b.finish())
}

/// Every driver at the same `n_max`.
pub fn verify_all(n_max: u32, options: &Options) -> Result<Vec<VerificationReport>> {
    Ok(vec![
        verify_local_tree_identity(n_max, options)?,
        verify_theorem_main(n_max, options)?,
        verify_forest_identity(n_max, options)?,
        verify_global_identities(n_max, options)?,
        verify_map_identities(n_max, options)?,
        verify_symmetric_identity(n_max, options)?,
    ])
}
