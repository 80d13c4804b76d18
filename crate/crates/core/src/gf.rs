//! Generating products for trees and forests by local indegree, and
//! coefficient extraction by monomial type.
//!
//! The basic factor is the linear form `L_j = j x_j + x_{j+1} + ... + x_n`.
//! The products built here are
//!
//! - `∏_{j=k}^{n} L_j`,
//! - the tree polynomial `P_n = x_n ∏_{j=2}^{n-1} L_j`,
//! - the forest polynomial `r x_n ∏_{j=r+1}^{n-1} L_j`.

use num_bigint::{BigInt, BigUint};

use crate::count::{binomial_saturating, factorial};
use crate::error::{Error, Result};
use crate::exec::{guard, Limits};
use crate::partition::Partition;
use crate::poly::{Monomial, SparsePoly};

/// Number of monomials of degree `degree` in `vars` variables, an upper bound
/// on the term count of any product of that shape.
pub(crate) fn expansion_guard(vars: u64, degree: u64, limits: &Limits) -> Result<()> {
    let bound = if vars == 0 {
        1
    } else {
        binomial_saturating(degree + vars - 1, vars - 1)
    };
    guard("polynomial expansion terms", bound, limits.max_terms)
}

/// Coefficients of `L_j` as 0-based `(index, coefficient)` pairs.
pub(crate) fn factor(j: u32, n: u32) -> Vec<(usize, BigInt)> {
    std::iter::once((j as usize - 1, BigInt::from(j)))
        .chain((j + 1..=n).map(|i| (i as usize - 1, BigInt::from(1))))
        .collect()
}

fn product_of_factors(base: SparsePoly, js: impl Iterator<Item = u32>, n: u32) -> SparsePoly {
    js.fold(base, |acc, j| acc.mul_linear(&factor(j, n)))
}

/// `∏_{j=k}^{n} (j x_j + x_{j+1} + ... + x_n)`, expanded. `k = n + 1` gives
/// the constant `1`.
pub fn build_theorem_product(k: u32, n: u32, limits: &Limits) -> Result<SparsePoly> {
    if k < 2 || k > n + 1 {
        return Err(Error::invalid(format!("need 2 <= k <= n+1, got k = {k}, n = {n}")));
    }
    let degree = (n + 1 - k) as u64;
    expansion_guard(degree, degree, limits)?;
    Ok(product_of_factors(SparsePoly::one(n as usize), k..=n, n))
}

/// `P_n = x_n ∏_{j=2}^{n-1} L_j`.
pub fn build_tree_gf(n: u32, limits: &Limits) -> Result<SparsePoly> {
    if n < 2 {
        return Err(Error::invalid("the tree polynomial needs n >= 2"));
    }
    let degree = (n - 1) as u64;
    expansion_guard(degree, degree, limits)?;
    Ok(product_of_factors(SparsePoly::var(n as usize, n as usize), 2..n, n))
}

/// `r x_n ∏_{j=r+1}^{n-1} L_j`. Rejects `r = n`, where there is no non-root
/// vertex to carry the `x_n` factor.
pub fn build_forest_gf(n: u32, r: u32, limits: &Limits) -> Result<SparsePoly> {
    if r == 0 || r >= n {
        return Err(Error::invalid(format!(
            "the forest polynomial needs 1 <= r < n, got r = {r}, n = {n}"
        )));
    }
    let degree = (n - r) as u64;
    expansion_guard(degree, degree, limits)?;
    let base = SparsePoly::var(n as usize, n as usize).scale(r);
    Ok(product_of_factors(base, r + 1..n, n))
}

/// Sum of the coefficients of all monomials of type `lambda`.
pub fn type_coefficient_sum(p: &SparsePoly, lambda: &Partition) -> BigInt {
    let degree = lambda.weight();
    p.terms()
        .filter(|(m, _)| m.total_degree() == degree && m.part_type() == *lambda)
        .map(|(_, c)| c.clone())
        .sum()
}

/// `(x_1 + ... + x_n)^e` by the multinomial theorem.
pub fn power_of_linear_form(n: u32, e: u32, limits: &Limits) -> Result<SparsePoly> {
    if n == 0 {
        return Err(Error::invalid("need at least one variable"));
    }
    expansion_guard(n as u64, e as u64, limits)?;
    let e_fact = factorial(e as u64);
    let mut out = SparsePoly::zero(n as usize);
    let mut exps = vec![0u32; n as usize];
    // Walk every weak composition of e into n parts.
    fn walk(
        slot: usize,
        rest: u32,
        exps: &mut [u32],
        e_fact: &BigUint,
        out: &mut SparsePoly,
    ) {
        if slot + 1 == exps.len() {
            exps[slot] = rest;
            let denom: BigUint = exps.iter().map(|&a| factorial(a as u64)).product();
            let coeff = BigInt::from(e_fact / denom);
            out.add_term(Monomial::from_exponents(exps.to_vec()), coeff);
            return;
        }
        for a in 0..=rest {
            exps[slot] = a;
            walk(slot + 1, rest - a, exps, e_fact, out);
        }
    }
    walk(0, e, &mut exps, &e_fact, &mut out);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    fn lim() -> Limits {
        Limits::default()
    }

    fn poly(n: usize, terms: &[(&[u32], i64)]) -> SparsePoly {
        SparsePoly::from_terms(
            n,
            terms
                .iter()
                .map(|(e, c)| (Monomial::from_exponents(e.to_vec()), BigInt::from(*c))),
        )
        .unwrap()
    }

    #[test]
    fn theorem_product_examples() {
        assert_eq!(
            build_theorem_product(2, 3, &lim()).unwrap(),
            poly(3, &[(&[0, 1, 1], 6), (&[0, 0, 2], 3)])
        );
        assert_eq!(build_theorem_product(3, 3, &lim()).unwrap(), poly(3, &[(&[0, 0, 1], 3)]));
        assert_eq!(
            build_theorem_product(2, 4, &lim()).unwrap(),
            poly(
                4,
                &[
                    (&[0, 1, 1, 1], 24),
                    (&[0, 1, 0, 2], 8),
                    (&[0, 0, 2, 1], 12),
                    (&[0, 0, 1, 2], 16),
                    (&[0, 0, 0, 3], 4),
                ]
            )
        );
        assert_eq!(build_theorem_product(5, 4, &lim()).unwrap(), SparsePoly::one(4));
        assert!(build_theorem_product(1, 4, &lim()).is_err());
        assert!(build_theorem_product(6, 4, &lim()).is_err());
    }

    #[test]
    fn tree_gf_examples() {
        assert_eq!(build_tree_gf(3, &lim()).unwrap(), poly(3, &[(&[0, 1, 1], 2), (&[0, 0, 2], 1)]));
        assert_eq!(
            build_tree_gf(4, &lim()).unwrap(),
            poly(
                4,
                &[
                    (&[0, 1, 1, 1], 6),
                    (&[0, 1, 0, 2], 2),
                    (&[0, 0, 2, 1], 3),
                    (&[0, 0, 1, 2], 4),
                    (&[0, 0, 0, 3], 1),
                ]
            )
        );
        assert_eq!(build_tree_gf(2, &lim()).unwrap(), poly(2, &[(&[0, 1], 1)]));
        assert!(build_tree_gf(1, &lim()).is_err());
    }

    #[test]
    fn forest_gf_examples() {
        assert_eq!(build_forest_gf(3, 1, &lim()).unwrap(), build_tree_gf(3, &lim()).unwrap());
        assert_eq!(build_forest_gf(3, 2, &lim()).unwrap(), poly(3, &[(&[0, 0, 1], 2)]));
        assert_eq!(
            build_forest_gf(4, 2, &lim()).unwrap(),
            poly(4, &[(&[0, 0, 1, 1], 6), (&[0, 0, 0, 2], 2)])
        );
        assert!(build_forest_gf(4, 4, &lim()).is_err());
        assert!(build_forest_gf(4, 0, &lim()).is_err());
    }

    #[test]
    fn type_sums() {
        let p4 = build_tree_gf(4, &lim()).unwrap();
        assert_eq!(type_coefficient_sum(&p4, &"1^1,2^1".parse().unwrap()), BigInt::from(9));
        let prod = build_theorem_product(2, 3, &lim()).unwrap();
        assert_eq!(type_coefficient_sum(&prod, &"1^2".parse().unwrap()), BigInt::from(6));
        assert_eq!(type_coefficient_sum(&prod, &"4^1".parse().unwrap()), BigInt::zero());
        assert_eq!(
            type_coefficient_sum(&SparsePoly::one(3), &Partition::empty()),
            BigInt::from(1)
        );
    }

    #[test]
    fn linear_powers() {
        assert_eq!(
            power_of_linear_form(2, 2, &lim()).unwrap(),
            poly(2, &[(&[2, 0], 1), (&[1, 1], 2), (&[0, 2], 1)])
        );
        assert_eq!(power_of_linear_form(4, 0, &lim()).unwrap(), SparsePoly::one(4));
        assert_eq!(
            power_of_linear_form(3, 1, &lim()).unwrap(),
            SparsePoly::linear(3, &[(1, 1), (2, 1), (3, 1)])
        );
    }

    #[test]
    fn linear_power_matches_repeated_multiplication() {
        for n in 1..=4u32 {
            let form = SparsePoly::linear(n as usize, &(1..=n as usize).map(|j| (j, 1)).collect::<Vec<_>>());
            let mut acc = SparsePoly::one(n as usize);
            for e in 0..=6u32 {
                assert_eq!(power_of_linear_form(n, e, &lim()).unwrap(), acc, "n={n} e={e}");
                acc = acc.checked_mul(&form).unwrap();
            }
        }
    }

    #[test]
    fn expansion_guard_trips() {
        let tight = Limits { max_terms: 10, ..Limits::default() };
        assert!(matches!(
            build_theorem_product(2, 6, &tight),
            Err(Error::GuardExceeded { .. })
        ));
        assert!(power_of_linear_form(5, 5, &tight).is_err());
        assert!(build_theorem_product(2, 6, &Limits::default()).is_ok());
    }
}
