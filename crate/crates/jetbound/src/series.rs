//! Sparse multivariate Laurent arithmetic with truncation policies.
//!
//! Terms live in a BTreeMap keyed by exponent vectors, so storage order,
//! iteration order, and every derived result are deterministic. A truncation
//! policy combines closed per-variable exponent windows with an optional
//! weighted total-degree cap; multiplication with a policy produces exactly
//! the admissible coefficients of the true product (candidate terms are
//! filtered by monomial, never by partial sums, so no admissible coefficient
//! is ever dropped or approximated).

use crate::Coeff;
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SeriesError {
    #[error("window for variable {0} has lo > hi")]
    EmptyWindow(usize),
    #[error("policy arity {policy} does not match series arity {series}")]
    PolicyArityMismatch { policy: usize, series: usize },
    #[error("weighted cap weights have arity {weights}, expected {arity}")]
    CapArityMismatch { weights: usize, arity: usize },
}

/// Exponent vector in a fixed variable order.
///
/// The integrand layer uses the order (d, h, t_1, ..., t_kappa); this type
/// itself is order-agnostic. Comparison is lexicographic, equality is
/// componentwise.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExponentVector(Vec<i32>);

impl ExponentVector {
    pub fn new(exps: Vec<i32>) -> Self {
        ExponentVector(exps)
    }

    pub fn zeros(arity: usize) -> Self {
        ExponentVector(vec![0; arity])
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn get(&self, v: usize) -> i32 {
        self.0[v]
    }

    pub fn exps(&self) -> &[i32] {
        &self.0
    }

    pub fn with(mut self, v: usize, e: i32) -> Self {
        self.0[v] = e;
        self
    }

    fn add(&self, other: &ExponentVector) -> ExponentVector {
        debug_assert_eq!(self.arity(), other.arity());
        ExponentVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }
}

/// Weighted degree sum_i (kappa - i) k_i over a t-exponent slice, 1-based i.
///
/// Equals the total degree after the substitution u_i = t_i / t_(i+1), and
/// the sum of the prefix sums of k.
pub fn weighted_length(t_exps: &[i32]) -> i64 {
    let kappa = t_exps.len() as i64;
    t_exps
        .iter()
        .enumerate()
        .map(|(i, &k)| (kappa - (i as i64 + 1)) * k as i64)
        .sum()
}

/// Per-variable exponent windows plus an optional weighted total-degree cap.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncationPolicy {
    windows: Vec<(i32, i32)>,
    weighted_cap: Option<(Vec<i64>, i64)>,
}

impl TruncationPolicy {
    /// Windows are closed intervals [lo, hi] per variable.
    pub fn new(windows: Vec<(i32, i32)>) -> Result<Self, SeriesError> {
        for (v, &(lo, hi)) in windows.iter().enumerate() {
            if lo > hi {
                return Err(SeriesError::EmptyWindow(v));
            }
        }
        Ok(TruncationPolicy {
            windows,
            weighted_cap: None,
        })
    }

    /// Adds a cap sum_v w_v e_v <= cap on admissible exponents.
    pub fn with_weighted_cap(
        mut self,
        weights: Vec<i64>,
        cap: i64,
    ) -> Result<Self, SeriesError> {
        if weights.len() != self.windows.len() {
            return Err(SeriesError::CapArityMismatch {
                weights: weights.len(),
                arity: self.windows.len(),
            });
        }
        self.weighted_cap = Some((weights, cap));
        Ok(self)
    }

    pub fn arity(&self) -> usize {
        self.windows.len()
    }

    pub fn window(&self, v: usize) -> (i32, i32) {
        self.windows[v]
    }

    pub fn weighted_cap(&self) -> Option<(&[i64], i64)> {
        self.weighted_cap.as_ref().map(|(w, c)| (w.as_slice(), *c))
    }

    pub fn admissible(&self, e: &ExponentVector) -> bool {
        debug_assert_eq!(e.arity(), self.arity());
        for (v, &(lo, hi)) in self.windows.iter().enumerate() {
            let x = e.get(v);
            if x < lo || x > hi {
                return false;
            }
        }
        if let Some((weights, cap)) = &self.weighted_cap {
            let total: i64 = e
                .exps()
                .iter()
                .zip(weights)
                .map(|(&x, &w)| w * x as i64)
                .sum();
            if total > *cap {
                return false;
            }
        }
        true
    }
}

/// Sparse Laurent series: no explicit zero coefficients are ever stored.
#[derive(Clone, PartialEq, Eq)]
pub struct SparseSeries<C> {
    arity: usize,
    terms: BTreeMap<ExponentVector, C>,
}

impl<C: Coeff> SparseSeries<C> {
    pub fn zero(arity: usize) -> Self {
        SparseSeries {
            arity,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(arity: usize) -> Self {
        Self::monomial(ExponentVector::zeros(arity), C::one())
    }

    pub fn monomial(e: ExponentVector, c: C) -> Self {
        let arity = e.arity();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        SparseSeries { arity, terms }
    }

    pub fn from_terms<I>(arity: usize, iter: I) -> Self
    where
        I: IntoIterator<Item = (ExponentVector, C)>,
    {
        let mut s = Self::zero(arity);
        for (e, c) in iter {
            s.add_term(e, c);
        }
        s
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&ExponentVector, &C)> {
        self.terms.iter()
    }

    /// Accumulates one term, dropping the slot if the coefficient cancels.
    pub fn add_term(&mut self, e: ExponentVector, c: C) {
        assert_eq!(e.arity(), self.arity, "term arity mismatch");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    /// Stored coefficient, or zero for absent monomials.
    pub fn coefficient(&self, e: &ExponentVector) -> C {
        self.terms.get(e).cloned().unwrap_or_else(C::zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.arity, other.arity, "series arity mismatch");
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (e.clone(), -c.clone()))
            .collect();
        SparseSeries {
            arity: self.arity,
            terms,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(self.arity);
        }
        let terms = self
            .terms
            .iter()
            .map(|(e, k)| (e.clone(), k.clone() * c.clone()))
            .collect();
        SparseSeries {
            arity: self.arity,
            terms,
        }
    }

    pub fn map<D: Coeff>(&self, mut f: impl FnMut(&C) -> D) -> SparseSeries<D> {
        let mut out = SparseSeries::zero(self.arity);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), f(c));
        }
        out
    }

    /// Exact product. Cauchy sums are accumulated per result monomial.
    pub fn mul(&self, other: &Self) -> Self {
        self.mul_impl(other, None)
    }

    /// Product filtered by `policy`: identical to computing the full product
    /// and then discarding inadmissible monomials, because admissibility is a
    /// predicate on the result monomial alone.
    pub fn mul_truncated(&self, other: &Self, policy: &TruncationPolicy) -> Self {
        assert_eq!(policy.arity(), self.arity, "policy arity mismatch");
        self.mul_impl(other, Some(policy))
    }

    fn mul_impl(&self, other: &Self, policy: Option<&TruncationPolicy>) -> Self {
        assert_eq!(self.arity, other.arity, "series arity mismatch");
        let mut out = Self::zero(self.arity);
        // iterate the smaller operand on the outside for fewer key clones
        let (a, b) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                let e = ea.add(eb);
                if let Some(p) = policy {
                    if !p.admissible(&e) {
                        continue;
                    }
                }
                out.add_term(e, ca.clone() * cb.clone());
            }
        }
        out
    }

    /// Terms whose admissibility fails under `policy` are dropped.
    pub fn filtered(&self, policy: &TruncationPolicy) -> Self {
        assert_eq!(policy.arity(), self.arity, "policy arity mismatch");
        let terms = self
            .terms
            .iter()
            .filter(|(e, _)| policy.admissible(e))
            .map(|(e, c)| (e.clone(), c.clone()))
            .collect();
        SparseSeries {
            arity: self.arity,
            terms,
        }
    }

    /// Sub-series with exponent `exp` at variable `v`, re-emitted with that
    /// variable zeroed (the coefficient of v^exp as a series in the others).
    pub fn slice(&self, v: usize, exp: i32) -> Self {
        let mut out = Self::zero(self.arity);
        for (e, c) in &self.terms {
            if e.get(v) == exp {
                out.add_term(e.clone().with(v, 0), c.clone());
            }
        }
        out
    }
}

impl<C: Coeff> fmt::Debug for SparseSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{:?}*x^{:?}", c, e.exps())?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{rat_int, Rat};
    use proptest::prelude::*;

    fn ev(exps: &[i32]) -> ExponentVector {
        ExponentVector::new(exps.to_vec())
    }

    fn mono(exps: &[i32], c: i64) -> SparseSeries<Rat> {
        SparseSeries::monomial(ev(exps), rat_int(c))
    }

    #[test]
    fn cancellation_removes_term() {
        let s = mono(&[1, 0], 1).add(&mono(&[1, 0], -1));
        assert!(s.is_zero());
        assert_eq!(s.len(), 0);
    }

    #[test]
    fn add_merges_equal_monomials() {
        let s = mono(&[1, -1], 2).add(&mono(&[1, -1], 3));
        assert_eq!(s.coefficient(&ev(&[1, -1])), rat_int(5));
        assert_eq!(s.len(), 1);
    }

    #[test]
    fn product_of_binomials() {
        // (dh + t1)(dh + t2) over (d, h, t1, t2)
        let f1 = mono(&[1, 1, 0, 0], 1).add(&mono(&[0, 0, 1, 0], 1));
        let f2 = mono(&[1, 1, 0, 0], 1).add(&mono(&[0, 0, 0, 1], 1));
        let p = f1.mul(&f2);
        assert_eq!(p.coefficient(&ev(&[2, 2, 0, 0])), rat_int(1));
        assert_eq!(p.coefficient(&ev(&[1, 1, 1, 0])), rat_int(1));
        assert_eq!(p.coefficient(&ev(&[1, 1, 0, 1])), rat_int(1));
        assert_eq!(p.coefficient(&ev(&[0, 0, 1, 1])), rat_int(1));
        assert_eq!(p.len(), 4);
    }

    #[test]
    fn telescoping_product() {
        let one = SparseSeries::one(1);
        let u = mono(&[1], 1);
        let p = one.add(&u).mul(&one.sub(&u));
        assert_eq!(p.coefficient(&ev(&[0])), rat_int(1));
        assert_eq!(p.coefficient(&ev(&[2])), rat_int(-1));
        assert_eq!(p.len(), 2);
    }

    #[test]
    fn coefficient_extraction_quartic() {
        // [t1^2 t2^2] (2 t1 + t2)^4 = 24
        let lin = mono(&[1, 0], 2).add(&mono(&[0, 1], 1));
        let sq = lin.mul(&lin);
        let quart = sq.mul(&sq);
        assert_eq!(quart.coefficient(&ev(&[2, 2])), rat_int(24));
        assert_eq!(quart.coefficient(&ev(&[4, 0])), rat_int(16));
        assert_eq!(quart.coefficient(&ev(&[0, 4])), rat_int(1));
        assert_eq!(quart.coefficient(&ev(&[5, -1])), rat_int(0));
    }

    #[test]
    fn coefficient_of_missing_is_zero() {
        let s = mono(&[1, 1], 1); // d h over (d, h)
        assert_eq!(s.coefficient(&ev(&[0, 0])), rat_int(0));
    }

    #[test]
    fn weighted_length_examples() {
        assert_eq!(weighted_length(&[0, 0, 0]), 0);
        // t_i / t_j has length j - i
        assert_eq!(weighted_length(&[1, -1, 0]), 1);
        assert_eq!(weighted_length(&[1, 0, -1]), 2);
        assert_eq!(weighted_length(&[0, 1, -1]), 1);
    }

    #[test]
    fn policy_windows_and_cap() {
        let p = TruncationPolicy::new(vec![(-2, 4), (0, 3)])
            .unwrap()
            .with_weighted_cap(vec![1, 2], 5)
            .unwrap();
        assert!(p.admissible(&ev(&[4, 0])));
        assert!(!p.admissible(&ev(&[5, 0])));
        assert!(!p.admissible(&ev(&[-3, 0])));
        assert!(p.admissible(&ev(&[1, 2])));
        assert!(!p.admissible(&ev(&[0, 3])));
        assert!(TruncationPolicy::new(vec![(1, 0)]).is_err());
    }

    #[test]
    fn truncated_mul_equals_filtered_full_mul() {
        let a = mono(&[1, 0], 2)
            .add(&mono(&[0, 1], 1))
            .add(&mono(&[-1, 2], 3));
        let b = mono(&[2, -1], 1).add(&mono(&[0, 0], 5)).add(&mono(&[1, 1], -2));
        let policy = TruncationPolicy::new(vec![(-1, 2), (-1, 2)])
            .unwrap()
            .with_weighted_cap(vec![1, 1], 3)
            .unwrap();
        let full_then_filter = a.mul(&b).filtered(&policy);
        let truncated = a.mul_truncated(&b, &policy);
        assert_eq!(full_then_filter, truncated);
    }

    #[test]
    fn slice_picks_one_exponent() {
        let s = mono(&[2, 1], 3).add(&mono(&[1, 5], 7)).add(&mono(&[2, 0], 1));
        let sl = s.slice(0, 2);
        assert_eq!(sl.coefficient(&ev(&[0, 1])), rat_int(3));
        assert_eq!(sl.coefficient(&ev(&[0, 0])), rat_int(1));
        assert_eq!(sl.len(), 2);
    }

    fn arb_series() -> impl Strategy<Value = SparseSeries<Rat>> {
        proptest::collection::vec(((-3i32..4, -3i32..4), -9i64..10), 0..6).prop_map(|terms| {
            SparseSeries::from_terms(
                2,
                terms
                    .into_iter()
                    .map(|((e1, e2), c)| (ExponentVector::new(vec![e1, e2]), rat_int(c))),
            )
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_series(), b in arb_series(), c in arb_series()) {
            prop_assert_eq!(a.add(&b), b.add(&a));
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            let one = SparseSeries::one(2);
            prop_assert_eq!(a.mul(&one), a.clone());
            prop_assert_eq!(a.add(&SparseSeries::zero(2)), a.clone());
            prop_assert_eq!(a.add(&a.neg()), SparseSeries::zero(2));
        }

        #[test]
        fn coefficient_is_linear(a in arb_series(), b in arb_series(), e1 in -3i32..4, e2 in -3i32..4) {
            let e = ExponentVector::new(vec![e1, e2]);
            let sum = a.add(&b);
            prop_assert_eq!(sum.coefficient(&e), a.coefficient(&e) + b.coefficient(&e));
            let scaled = a.scale(&rat_int(3));
            prop_assert_eq!(scaled.coefficient(&e), a.coefficient(&e) * rat_int(3));
        }

        #[test]
        fn truncation_consistency(a in arb_series(), b in arb_series()) {
            let policy = TruncationPolicy::new(vec![(-2, 2), (-2, 2)]).unwrap()
                .with_weighted_cap(vec![2, 1], 4).unwrap();
            prop_assert_eq!(a.mul_truncated(&b, &policy), a.mul(&b).filtered(&policy));
        }
    }
}
