//! Exact combinatorial primitives: factorials, binomial and multinomial
//! coefficients, elementary symmetric functions, and weighted degree sums.
//!
//! Everything is computed over arbitrary-precision integers; the symmetric
//! functions are generic over the coefficient ring so they serve both the
//! rational evaluation layer and the integer fast path.

use crate::{Coeff, Int};
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CombinatoricsError {
    #[error("multinomial part {0} is negative")]
    NegativePart(i64),
    #[error("multinomial parts sum to {parts_sum}, expected {total}")]
    PartSumMismatch { total: i64, parts_sum: i64 },
    #[error("elementary symmetric index {index} exceeds variable count {len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("weight vector entries must be strictly positive")]
    NonPositiveWeight,
    #[error("weight vector must be non-empty")]
    EmptyWeights,
}

/// k! as an exact integer.
pub fn factorial(k: usize) -> Int {
    let mut acc = Int::one();
    for m in 2..=k {
        acc *= Int::from(m);
    }
    acc
}

/// Binomial coefficient C(n, k); zero when k > n.
pub fn binomial(n: usize, k: usize) -> Int {
    if k > n {
        return Int::zero();
    }
    let k = k.min(n - k);
    let mut acc = Int::one();
    for m in 0..k {
        acc = acc * Int::from(n - m) / Int::from(m + 1);
    }
    acc
}

/// Multinomial coefficient total! / (parts[0]! ... parts[m]!).
///
/// Rejects negative parts and part sums that do not match `total`.
pub fn multinomial(total: i64, parts: &[i64]) -> Result<Int, CombinatoricsError> {
    if total < 0 {
        return Err(CombinatoricsError::NegativePart(total));
    }
    let mut sum: i64 = 0;
    for &p in parts {
        if p < 0 {
            return Err(CombinatoricsError::NegativePart(p));
        }
        sum += p;
    }
    if sum != total {
        return Err(CombinatoricsError::PartSumMismatch {
            total,
            parts_sum: sum,
        });
    }
    // Incremental product of binomials keeps every intermediate an integer.
    let mut acc = Int::one();
    let mut remaining = total as usize;
    for &p in parts {
        acc *= binomial(remaining, p as usize);
        remaining -= p as usize;
    }
    Ok(acc)
}

/// Elementary symmetric function s_j(xs) by the Newton-triangle recurrence.
///
/// s_0 = 1; an index beyond the variable count is an error, not zero, to
/// surface index bugs at the call site. O(j * len) ring operations.
pub fn elementary_symmetric<C: Coeff>(j: usize, xs: &[C]) -> Result<C, CombinatoricsError> {
    if j > xs.len() {
        return Err(CombinatoricsError::IndexOutOfRange {
            index: j,
            len: xs.len(),
        });
    }
    let mut e: Vec<C> = vec![C::zero(); j + 1];
    e[0] = C::one();
    for (m, x) in xs.iter().enumerate() {
        let hi = j.min(m + 1);
        for r in (1..=hi).rev() {
            let inc = e[r - 1].clone() * x.clone();
            e[r] += inc;
        }
    }
    Ok(e[j].clone())
}

/// Strictly positive integer weights a_1 >= ... ordering is the caller's choice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightVector {
    entries: Vec<Int>,
}

impl WeightVector {
    pub fn new(entries: Vec<Int>) -> Result<Self, CombinatoricsError> {
        if entries.is_empty() {
            return Err(CombinatoricsError::EmptyWeights);
        }
        if entries.iter().any(|a| !a.is_positive()) {
            return Err(CombinatoricsError::NonPositiveWeight);
        }
        Ok(WeightVector { entries })
    }

    pub fn from_i64(entries: &[i64]) -> Result<Self, CombinatoricsError> {
        Self::new(entries.iter().map(|&a| Int::from(a)).collect())
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, i: usize) -> &Int {
        &self.entries[i]
    }

    pub fn entries(&self) -> &[Int] {
        &self.entries
    }

    /// Nef-cone precondition: a_i >= 3 a_(i+1) for every consecutive pair.
    pub fn nef_ok(&self) -> bool {
        self.entries
            .windows(2)
            .all(|w| w[0] >= Int::from(3) * &w[1])
    }
}

use num_traits::Signed;

/// Weighted sum mu(a) = sum_i i * a_i with 1-based positions.
pub fn mu_weighted(a: &WeightVector) -> Int {
    a.entries()
        .iter()
        .enumerate()
        .map(|(i, ai)| Int::from(i + 1) * ai)
        .sum()
}
