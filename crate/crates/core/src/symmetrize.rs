//! Sums over the symmetric group `S_n`.
//!
//! All results are `n!` times the averaged symmetrization, which keeps every
//! coefficient an integer.

use itertools::Itertools;
use num_bigint::BigInt;

use crate::count::factorial;
use crate::error::{Error, Result};
use crate::exec::{fold_chunks, guard, Options};
use crate::gf::expansion_guard;
use crate::poly::SparsePoly;

fn perm_guard(n: u32, options: &Options) -> Result<()> {
    guard("permutation sum n", n as u128, options.limits.max_perm_n as u128)
}

fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    (0..n).permutations(n).collect()
}

/// `Σ_σ f(σ)` over a precomputed permutation list.
fn sum_over<F>(perms: &[Vec<usize>], n_vars: usize, options: &Options, term: F) -> SparsePoly
where
    F: Fn(&[usize]) -> SparsePoly + Sync + Send,
{
    fold_chunks(
        perms.len() as u64,
        options.execution,
        || SparsePoly::zero(n_vars),
        |mut acc, _, range| {
            for idx in range {
                acc.add_assign(term(&perms[idx as usize]));
            }
            acc
        },
        |mut a, b| {
            a.add_assign(b);
            a
        },
    )
}

/// `Σ_{σ ∈ S_n} σ·p`, where `σ·p` substitutes `x_j -> x_{σ(j)}`.
pub fn symmetrize_scaled(p: &SparsePoly, n: u32, options: &Options) -> Result<SparsePoly> {
    if p.n_vars() != n as usize {
        return Err(Error::VarCountMismatch { left: p.n_vars(), right: n as usize });
    }
    perm_guard(n, options)?;
    let perms = all_permutations(n as usize);
    Ok(sum_over(&perms, n as usize, options, |sigma| {
        p.permute_vars(sigma).expect("length checked")
    }))
}

/// `Σ_σ ∏_i (Σ_j a_{ij} x_{σ(j)})` for an `ℓ × n` integer matrix given as rows.
pub fn symmetrize_general(n: u32, rows: &[Vec<i64>], options: &Options) -> Result<SparsePoly> {
    if n == 0 {
        return Err(Error::invalid("need n >= 1"));
    }
    if let Some(row) = rows.iter().find(|r| r.len() != n as usize) {
        return Err(Error::invalid(format!(
            "matrix rows must have {n} entries, got {}",
            row.len()
        )));
    }
    perm_guard(n, options)?;
    expansion_guard(n as u64, rows.len() as u64, &options.limits)?;
    let perms = all_permutations(n as usize);
    let rows: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| r.iter().map(|&a| BigInt::from(a)).collect())
        .collect();
    Ok(sum_over(&perms, n as usize, options, |sigma| {
        rows.iter().fold(SparsePoly::one(n as usize), |acc, row| {
            let form: Vec<(usize, BigInt)> = row
                .iter()
                .enumerate()
                .map(|(j, a)| (sigma[j], a.clone()))
                .collect();
            acc.mul_linear(&form)
        })
    }))
}

/// Coefficient rows of the factors `j x_j + x_{j+1} + ... + x_n`,
/// `j = k..n`.
pub fn theorem_matrix(k: u32, n: u32) -> Vec<Vec<i64>> {
    (k..=n)
        .map(|j| {
            (1..=n)
                .map(|col| match col.cmp(&j) {
                    std::cmp::Ordering::Less => 0,
                    std::cmp::Ordering::Equal => j as i64,
                    std::cmp::Ordering::Greater => 1,
                })
                .collect()
        })
        .collect()
}

/// `Σ_{σ ∈ S_n} ∏_{j=k}^{n} (j x_{σ(j)} + x_{σ(j+1)} + ... + x_{σ(n)})`,
/// built product by product.
pub fn symmetrize_theorem_product(k: u32, n: u32, options: &Options) -> Result<SparsePoly> {
    if k < 2 || k > n + 1 {
        return Err(Error::invalid(format!("need 2 <= k <= n+1, got k = {k}, n = {n}")));
    }
    symmetrize_general(n, &theorem_matrix(k, n), options)
}

/// The factor `n!` every result here carries.
pub fn group_order(n: u32) -> BigInt {
    BigInt::from(factorial(n as u64))
}
