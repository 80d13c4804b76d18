//! Sparse multivariate polynomials in `x_1, ..., x_n` with exact integer
//! coefficients.
//!
//! Terms live in a `BTreeMap` keyed by [`Monomial`], whose ordering is graded
//! lexicographic with `x_1 > x_2 > ... > x_n`. Zero coefficients are never
//! stored, so equal polynomials have identical term maps.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::ser::{SerializeMap, SerializeSeq};
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partition::{monomial_type, Partition};

/// A monomial `x_1^{a_1} ... x_n^{a_n}`, stored densely.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    exponents: Vec<u32>,
}

impl Monomial {
    pub fn one(n_vars: usize) -> Self {
        Monomial { exponents: vec![0; n_vars] }
    }

    /// `x_j` (1-based).
    pub fn var(n_vars: usize, j: usize) -> Self {
        let mut m = Monomial::one(n_vars);
        m.exponents[j - 1] = 1;
        m
    }

    pub fn from_exponents(exponents: Vec<u32>) -> Self {
        Monomial { exponents }
    }

    pub fn n_vars(&self) -> usize {
        self.exponents.len()
    }

    /// Exponent of `x_j` (1-based).
    pub fn exponent(&self, j: usize) -> u32 {
        self.exponents[j - 1]
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn total_degree(&self) -> u64 {
        self.exponents.iter().map(|&e| e as u64).sum()
    }

    /// The partition formed by the nonzero exponents.
    pub fn part_type(&self) -> Partition {
        monomial_type(&self.exponents)
    }

    fn times_var(&self, j0: usize) -> Monomial {
        let mut m = self.clone();
        m.exponents[j0] += 1;
        m
    }

    fn times(&self, other: &Monomial) -> Monomial {
        Monomial {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.exponents.cmp(&other.exponents))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparsePoly {
    n_vars: usize,
    terms: BTreeMap<Monomial, BigInt>,
}

impl SparsePoly {
    pub fn zero(n_vars: usize) -> Self {
        SparsePoly { n_vars, terms: BTreeMap::new() }
    }

    pub fn one(n_vars: usize) -> Self {
        Self::constant(n_vars, 1)
    }

    pub fn constant(n_vars: usize, c: impl Into<BigInt>) -> Self {
        Self::monomial(Monomial::one(n_vars), c)
    }

    /// `x_j` (1-based).
    pub fn var(n_vars: usize, j: usize) -> Self {
        Self::monomial(Monomial::var(n_vars, j), 1)
    }

    pub fn monomial(m: Monomial, c: impl Into<BigInt>) -> Self {
        let mut p = SparsePoly::zero(m.n_vars());
        p.add_term(m, c.into());
        p
    }

    /// `Σ c_j x_j` from 1-based `(j, c_j)` pairs.
    pub fn linear(n_vars: usize, coeffs: &[(usize, i64)]) -> Self {
        let mut p = SparsePoly::zero(n_vars);
        for &(j, c) in coeffs {
            p.add_term(Monomial::var(n_vars, j), BigInt::from(c));
        }
        p
    }

    /// Builds a polynomial from `(monomial, coefficient)` pairs, summing
    /// repeated monomials.
    pub fn from_terms(
        n_vars: usize,
        terms: impl IntoIterator<Item = (Monomial, BigInt)>,
    ) -> Result<Self> {
        let mut p = SparsePoly::zero(n_vars);
        for (m, c) in terms {
            if m.n_vars() != n_vars {
                return Err(Error::VarCountMismatch { left: n_vars, right: m.n_vars() });
            }
            p.add_term(m, c);
        }
        Ok(p)
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in descending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Mutable access to a stored coefficient. Setting it to zero leaves a
    /// non-canonical polynomial; callers restore canonical form with
    /// [`SparsePoly::prune`].
    pub fn coefficient_mut(&mut self, m: &Monomial) -> Option<&mut BigInt> {
        self.terms.get_mut(m)
    }

    pub fn prune(&mut self) {
        self.terms.retain(|_, c| !c.is_zero());
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.keys().map(Monomial::total_degree).max()
    }

    fn same_vars(&self, other: &SparsePoly) -> Result<()> {
        if self.n_vars != other.n_vars {
            return Err(Error::VarCountMismatch { left: self.n_vars, right: other.n_vars });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &SparsePoly) -> Result<SparsePoly> {
        self.same_vars(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    /// In-place sum; panics on a variable count mismatch.
    pub(crate) fn add_assign(&mut self, other: SparsePoly) {
        assert_eq!(self.n_vars, other.n_vars);
        if self.terms.len() < other.terms.len() {
            let mine = std::mem::replace(self, other);
            for (m, c) in mine.terms {
                self.add_term(m, c);
            }
        } else {
            for (m, c) in other.terms {
                self.add_term(m, c);
            }
        }
    }

    pub fn checked_sub(&self, other: &SparsePoly) -> Result<SparsePoly> {
        self.checked_add(&other.scale(-1))
    }

    pub fn checked_mul(&self, other: &SparsePoly) -> Result<SparsePoly> {
        self.same_vars(other)?;
        let mut acc: HashMap<Monomial, BigInt> = HashMap::new();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                *acc.entry(a.times(b)).or_default() += ca * cb;
            }
        }
        Self::from_terms(self.n_vars, acc)
    }

    pub fn scale(&self, c: impl Into<BigInt>) -> SparsePoly {
        let c = c.into();
        if c.is_zero() {
            return SparsePoly::zero(self.n_vars);
        }
        SparsePoly {
            n_vars: self.n_vars,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * &c)).collect(),
        }
    }

    /// Multiplies by the linear form `Σ c_j x_j` given as 0-based
    /// `(index, coefficient)` pairs.
    pub(crate) fn mul_linear(&self, form: &[(usize, BigInt)]) -> SparsePoly {
        let mut acc: HashMap<Monomial, BigInt> = HashMap::with_capacity(self.terms.len() * form.len());
        for (m, c) in &self.terms {
            for (j0, a) in form {
                if a.is_zero() {
                    continue;
                }
                *acc.entry(m.times_var(*j0)).or_default() += c * a;
            }
        }
        let mut out = SparsePoly::zero(self.n_vars);
        out.terms = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        out
    }

    /// Substitutes `x_i -> x_{sigma(i)}`, with `sigma` 0-based.
    pub fn permute_vars(&self, sigma: &[usize]) -> Result<SparsePoly> {
        if sigma.len() != self.n_vars {
            return Err(Error::VarCountMismatch { left: self.n_vars, right: sigma.len() });
        }
        let mut out = SparsePoly::zero(self.n_vars);
        for (m, c) in &self.terms {
            let mut exps = vec![0u32; self.n_vars];
            for (i, &e) in m.exponents.iter().enumerate() {
                exps[sigma[i]] = e;
            }
            out.add_term(Monomial::from_exponents(exps), c.clone());
        }
        Ok(out)
    }

    pub fn evaluate(&self, point: &[BigInt]) -> Result<BigInt> {
        if point.len() != self.n_vars {
            return Err(Error::VarCountMismatch { left: self.n_vars, right: point.len() });
        }
        Ok(self
            .terms
            .iter()
            .map(|(m, c)| {
                m.exponents
                    .iter()
                    .zip(point)
                    .fold(c.clone(), |acc, (&e, x)| acc * num_traits::pow(x.clone(), e as usize))
            })
            .sum())
    }

    /// Sum of all coefficients.
    pub fn evaluate_at_ones(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Parses the JSON term-list format produced by `serde_json::to_string`.
    pub fn from_json(n_vars: usize, json: &str) -> Result<SparsePoly> {
        #[derive(Deserialize)]
        struct TermIn {
            exps: HashMap<String, u32>,
            coeff: String,
        }
        let terms: Vec<TermIn> = serde_json::from_str(json)
            .map_err(|e| Error::invalid(format!("polynomial JSON: {e}")))?;
        let mut p = SparsePoly::zero(n_vars);
        for t in terms {
            let mut exps = vec![0u32; n_vars];
            for (key, e) in t.exps {
                let j: usize = key
                    .parse()
                    .map_err(|_| Error::invalid(format!("variable index {key:?}")))?;
                if j == 0 || j > n_vars {
                    return Err(Error::invalid(format!("variable x{j} outside x1..x{n_vars}")));
                }
                exps[j - 1] = e;
            }
            let c: BigInt = t
                .coeff
                .parse()
                .map_err(|_| Error::invalid(format!("coefficient {:?}", t.coeff)))?;
            if c.is_zero() {
                return Err(Error::invalid("zero coefficient in polynomial JSON"));
            }
            p.add_term(Monomial::from_exponents(exps), c);
        }
        Ok(p)
    }
}

struct ExpsOut<'a>(&'a Monomial);

impl Serialize for ExpsOut<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let nonzero: Vec<(usize, u32)> = self
            .0
            .exponents
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| (i + 1, e))
            .collect();
        let mut map = serializer.serialize_map(Some(nonzero.len()))?;
        for (j, e) in nonzero {
            map.serialize_entry(&j.to_string(), &e)?;
        }
        map.end()
    }
}

#[derive(Serialize)]
struct TermOut<'a> {
    exps: ExpsOut<'a>,
    coeff: String,
}

/// Serializes as `[{"exps": {"j": e, ...}, "coeff": "decimal"}, ...]` in
/// descending graded-lex order.
impl Serialize for SparsePoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (m, c) in self.terms() {
            seq.serialize_element(&TermOut { exps: ExpsOut(m), coeff: c.to_string() })?;
        }
        seq.end()
    }
}

impl fmt::Display for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (idx, (m, c)) in self.terms().enumerate() {
            let mut factors: Vec<String> = m
                .exponents
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| if e == 1 { format!("x{}", i + 1) } else { format!("x{}^{e}", i + 1) })
                .collect();
            let magnitude = if c < &BigInt::zero() { -c.clone() } else { c.clone() };
            if !magnitude.is_one() || factors.is_empty() {
                factors.insert(0, magnitude.to_string());
            }
            let sign = c < &BigInt::zero();
            match (idx, sign) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            f.write_str(&factors.join("*"))?;
        }
        Ok(())
    }
}
