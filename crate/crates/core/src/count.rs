//! Exact counting arithmetic.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

/// Arbitrary precision nonnegative count.
pub type BigCount = BigUint;

pub fn factorial(n: u64) -> BigCount {
    falling_factorial(n, n)
}

/// `n (n-1) ... (n-m+1)`, the number of injections from an `m`-set into an
/// `n`-set. Zero when `m > n`.
pub fn falling_factorial(n: u64, m: u64) -> BigCount {
    if m > n {
        return BigCount::zero();
    }
    (n - m + 1..=n).fold(BigCount::one(), |acc, i| acc * i)
}

pub fn power(base: u64, exp: u64) -> BigCount {
    num_traits::pow(BigCount::from(base), exp as usize)
}

/// Binomial coefficient, saturating at `u128::MAX`. Used only for size
/// estimates behind resource guards.
pub(crate) fn binomial_saturating(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) / (i + 1) stays integral at every step.
        match acc.checked_mul((n - i) as u128) {
            Some(v) => acc = v / (i + 1) as u128,
            None => return u128::MAX,
        }
    }
    acc
}

pub(crate) fn power_saturating(base: u64, exp: u64) -> u128 {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        match acc.checked_mul(base as u128) {
            Some(v) => acc = v,
            None => return u128::MAX,
        }
    }
    acc
}

/// Divides `num` by `den`, panicking when the division is not exact.
///
/// Every quotient taken through here is an integer by a counting argument, so
/// a remainder means a bug in the caller.
pub(crate) fn exact_div(num: &BigCount, den: &BigCount) -> BigCount {
    let (q, r) = num.div_rem(den);
    assert!(r.is_zero(), "inexact division {num} / {den}");
    q
}
