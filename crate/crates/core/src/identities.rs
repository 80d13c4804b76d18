//! Closed-form counts by indegree type.
//!
//! Each formula has the shape `numerator / (e_0! ∏_i e_i! (i!)^{e_i})` where
//! `e_0 = n - Σ e_i`. The weight of `lambda` is checked first, then `e_0`.
//! The quotient is always exact; a remainder panics.

use crate::count::{exact_div, factorial, BigCount};
use crate::error::{Error, Result};
use crate::partition::Partition;

fn check_weight(lambda: &Partition, expected: u64, formula: &'static str) -> Result<()> {
    if lambda.weight() != expected {
        return Err(Error::WeightMismatch { formula, expected, found: lambda.weight() });
    }
    Ok(())
}

/// `e_0! ∏ e_i! (i!)^{e_i}`.
fn denominator(n: u64, lambda: &Partition) -> Result<BigCount> {
    let e0 = lambda.zero_count(n)?;
    Ok(factorial(e0) * lambda.symmetry_factor())
}

/// Trees on `[n]` with local indegree type `lambda`; equally, trees rooted
/// at a fixed vertex with global indegree type `lambda`:
/// `(n-1)!^2 / (e_0! ∏ e_i! (i!)^{e_i})`.
pub fn rhs_tree_count(n: u32, lambda: &Partition) -> Result<BigCount> {
    if n == 0 {
        return Err(Error::invalid("trees need n >= 1"));
    }
    let n = n as u64;
    check_weight(lambda, n - 1, "n−1")?;
    let f = factorial(n - 1);
    Ok(exact_div(&(&f * &f), &denominator(n, lambda)?))
}

/// Sum of the coefficients of type `lambda` in `∏_{j=k}^{n} L_j`:
/// `n! (n-k+1)! / (e_0! ∏ e_i! (i!)^{e_i})`.
pub fn rhs_theorem_main(n: u32, k: u32, lambda: &Partition) -> Result<BigCount> {
    if k == 0 || k > n + 1 {
        return Err(Error::invalid(format!("need 1 <= k <= n+1, got k = {k}, n = {n}")));
    }
    let (n, k) = (n as u64, k as u64);
    check_weight(lambda, n + 1 - k, "n−k+1")?;
    Ok(exact_div(
        &(factorial(n) * factorial(n + 1 - k)),
        &denominator(n, lambda)?,
    ))
}

/// Forests on `[n]` with roots `{1..r}` and local indegree type `lambda`:
/// `r (n-1)! (n-r)! / (e_0! ∏ e_i! (i!)^{e_i})`.
pub fn rhs_forest_count(n: u32, r: u32, lambda: &Partition) -> Result<BigCount> {
    if r == 0 || r > n {
        return Err(Error::invalid(format!("need 1 <= r <= n, got r = {r}, n = {n}")));
    }
    let (n, r) = (n as u64, r as u64);
    check_weight(lambda, n - r, "n−r")?;
    Ok(exact_div(
        &(BigCount::from(r) * factorial(n - 1) * factorial(n - r)),
        &denominator(n, lambda)?,
    ))
}
