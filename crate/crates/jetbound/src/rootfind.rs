//! Exact univariate root counting and the minimal dominating degree.
//!
//! Sturm chains over BigRational coefficients. Sign evaluations at a point
//! x use the right-limit convention: the sign at x+ is the first nonzero
//! value among p(x), p'(x), p''(x), ..., so root counts on half-open
//! intervals (a, b] stay correct when an endpoint is itself a root of a
//! chain member.

use crate::{Int, Rat};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RootError {
    #[error("polynomial is zero")]
    ZeroPolynomial,
    #[error("leading coefficient of d^n must be positive")]
    NonPositiveLeading,
    #[error("interval bounds are reversed")]
    BadInterval,
}

/// Dense univariate polynomial, ascending degree order, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniPoly {
    coeffs: Vec<Rat>,
}

impl UniPoly {
    /// Builds from ascending coefficients, trimming trailing zeros.
    pub fn from_ascending(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coefficients(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> UniPoly {
        if self.coeffs.len() <= 1 {
            return UniPoly { coeffs: vec![] };
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * Rat::from_integer(Int::from(i)))
            .collect();
        UniPoly::from_ascending(coeffs)
    }

    /// Euclidean remainder of self by other (other nonzero).
    fn rem(&self, other: &UniPoly) -> UniPoly {
        assert!(!other.is_zero());
        let mut r = self.coeffs.clone();
        let dv = other.coeffs.len() - 1;
        let lead = other.coeffs.last().unwrap();
        while r.len() > dv && !r.is_empty() {
            let q = r.last().unwrap() / lead;
            if q.is_zero() {
                r.pop();
                continue;
            }
            let shift = r.len() - 1 - dv;
            for (i, oc) in other.coeffs.iter().enumerate() {
                let t = &q * oc;
                r[shift + i] -= t;
            }
            // the top term cancels exactly
            debug_assert!(r.last().unwrap().is_zero());
            r.pop();
            while r.last().map_or(false, |c| c.is_zero()) {
                r.pop();
            }
        }
        UniPoly { coeffs: r }
    }

    /// Rescales by a positive rational to the primitive integer form,
    /// preserving every sign. The Sturm recurrence only tolerates positive
    /// rescaling.
    fn primitive_scaled(&self) -> UniPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut den_lcm = Int::one();
        for c in &self.coeffs {
            den_lcm = den_lcm.lcm(c.denom());
        }
        let ints: Vec<Int> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&den_lcm / c.denom()))
            .collect();
        let mut g = Int::zero();
        for v in &ints {
            g = g.gcd(v);
        }
        UniPoly {
            coeffs: ints
                .into_iter()
                .map(|v| Rat::from_integer(v / &g))
                .collect(),
        }
    }

    /// primitive_scaled with the leading coefficient forced positive; only
    /// for contexts where the global sign is irrelevant (gcd computation).
    fn primitive_positive(&self) -> UniPoly {
        let p = self.primitive_scaled();
        if p.leading().map_or(false, |c| c.is_negative()) {
            UniPoly {
                coeffs: p.coeffs.into_iter().map(|c| -c).collect(),
            }
        } else {
            p
        }
    }

    /// self / gcd(self, self'): same roots, all simple.
    pub fn squarefree_part(&self) -> UniPoly {
        if self.is_zero() || self.coeffs.len() == 1 {
            return self.clone();
        }
        // gcd by the Euclidean algorithm with primitive rescaling
        let mut a = self.primitive_positive();
        let mut b = self.derivative().primitive_positive();
        while !b.is_zero() {
            let r = a.rem(&b).primitive_positive();
            a = b;
            b = r;
        }
        // exact division self / a
        let g = a;
        if g.degree() == Some(0) {
            return self.clone();
        }
        let mut num = self.coeffs.clone();
        let dv = g.coeffs.len() - 1;
        let lead = g.coeffs.last().unwrap();
        let mut quot = vec![Rat::zero(); num.len() - dv];
        while num.len() > dv {
            let q = num.last().unwrap() / lead;
            let shift = num.len() - 1 - dv;
            quot[shift] = q.clone();
            for (i, oc) in g.coeffs.iter().enumerate() {
                let t = &q * oc;
                num[shift + i] -= t;
            }
            num.pop();
            while num.last().map_or(false, |c| c.is_zero()) {
                num.pop();
            }
        }
        debug_assert!(num.is_empty(), "gcd must divide exactly");
        UniPoly::from_ascending(quot)
    }
}

/// Sturm chain of the squarefree part.
pub struct SturmChain {
    chain: Vec<UniPoly>,
}

impl SturmChain {
    pub fn new(poly: &UniPoly) -> Result<Self, RootError> {
        if poly.is_zero() {
            return Err(RootError::ZeroPolynomial);
        }
        let p0 = poly.squarefree_part().primitive_scaled();
        let p1 = p0.derivative().primitive_scaled();
        let mut chain = vec![p0];
        if !p1.is_zero() {
            chain.push(p1);
            loop {
                let k = chain.len();
                let r = chain[k - 2].rem(&chain[k - 1]);
                if r.is_zero() {
                    break;
                }
                // the sign flip is part of the Sturm recurrence
                let neg = UniPoly {
                    coeffs: r.coeffs.iter().map(|c| -c.clone()).collect(),
                };
                chain.push(neg.primitive_scaled());
            }
        }
        Ok(SturmChain { chain })
    }

    /// Sign of p just right of x: first nonzero among p(x), p'(x), ...
    fn sign_at_right(p: &UniPoly, x: &Rat) -> i32 {
        let mut cur = p.clone();
        loop {
            if cur.is_zero() {
                return 0;
            }
            let v = cur.eval(x);
            if !v.is_zero() {
                return if v.is_positive() { 1 } else { -1 };
            }
            cur = cur.derivative();
        }
    }

    fn variations_at_right(&self, x: &Rat) -> usize {
        let mut count = 0;
        let mut last = 0i32;
        for p in &self.chain {
            let s = Self::sign_at_right(p, x);
            if s != 0 {
                if last != 0 && s != last {
                    count += 1;
                }
                last = s;
            }
        }
        count
    }

    /// Number of distinct real roots in the half-open interval (lo, hi].
    pub fn count_roots(&self, lo: &Rat, hi: &Rat) -> Result<usize, RootError> {
        if lo > hi {
            return Err(RootError::BadInterval);
        }
        // V(lo+) - V(hi+) counts roots in (lo, hi]: shifting both
        // endpoints just right of themselves moves a root at lo out of
        // the interval and keeps a root at hi inside
        let vl = self.variations_at_right(lo);
        let vh = self.variations_at_right(hi);
        Ok(vl.saturating_sub(vh))
    }
}

/// Integer upper bound on the absolute value of every root:
/// M = max_p ceil-ish of (2^p |c_p / c_0|)^(1/p) over p with c_p nonzero,
/// computed exactly with integer nth roots. Requires c_0 != 0.
pub fn root_magnitude_bound(poly: &UniPoly) -> Result<Int, RootError> {
    if poly.is_zero() {
        return Err(RootError::ZeroPolynomial);
    }
    let n = poly.degree().unwrap();
    if n == 0 {
        return Ok(Int::one());
    }
    let lead = poly.leading().unwrap().abs();
    let mut best = Int::one();
    for p in 1..=n {
        let c = &poly.coefficients()[n - p];
        if c.is_zero() {
            continue;
        }
        // smallest m >= 1 with m^p >= 2^p |c / lead|
        let ratio = (c / &lead).abs() * Rat::from_integer(num_traits::pow::pow(Int::from(2), p));
        // ceil of the rational, then adjust around the integer p-th root
        let ceil_num = (ratio.numer() + ratio.denom() - Int::one()) / ratio.denom();
        let mut m = ceil_num.nth_root(p as u32);
        while num_traits::pow::pow(Rat::from_integer(m.clone()), p) < ratio {
            m += 1;
        }
        if m > best {
            best = m;
        }
    }
    Ok(best)
}

/// Smallest positive integer d_0 such that the polynomial has no root in
/// [d_0, infinity): every real root is strictly below d_0. Requires a
/// positive leading coefficient (so the polynomial is eventually positive).
pub fn minimal_positive_degree(poly: &UniPoly) -> Result<Int, RootError> {
    if poly.is_zero() {
        return Err(RootError::ZeroPolynomial);
    }
    if !poly.leading().unwrap().is_positive() {
        return Err(RootError::NonPositiveLeading);
    }
    if poly.degree() == Some(0) {
        return Ok(Int::one());
    }
    let chain = SturmChain::new(poly)?;
    let bound = root_magnitude_bound(poly)?;
    let mut hi = Rat::from_integer(bound);
    let zero = Rat::zero();
    if chain.count_roots(&zero, &hi)? == 0 && !poly.eval(&zero).is_zero() {
        // no positive roots at all (a root exactly at 0 is also fine to
        // clear with d_0 = 1)
        return Ok(Int::one());
    }
    // bisect on integer midpoints: maintain roots in (lo, hi], lo >= 0
    let mut lo = zero;
    while &hi - &lo > Rat::one() {
        let mid = Rat::from_integer(((&hi + &lo) / Rat::from_integer(Int::from(2))).floor().to_integer());
        // keep the bracket strictly shrinking
        let mid = if mid <= lo {
            &lo + Rat::one()
        } else if mid >= hi {
            &hi - Rat::one()
        } else {
            mid
        };
        if chain.count_roots(&mid, &hi)? > 0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    // the largest positive root r_max now sits in (lo, hi] with
    // hi - lo <= 1 and lo integral
    let k = lo.to_integer();
    let at_k_plus_1 = chain
        .count_roots(&Rat::from_integer(k.clone()), &Rat::from_integer(&k + Int::one()))?;
    if at_k_plus_1 > 0 || poly.eval(&Rat::from_integer(&k + Int::one())).is_zero() {
        // r_max in (k, k+1], so k+2 clears it unless k+1 is not a root
        let kp1 = &k + Int::one();
        if poly.eval(&Rat::from_integer(kp1.clone())).is_zero() {
            return Ok(kp1 + Int::one());
        }
        return Ok(kp1);
    }
    Ok(&k + Int::one())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{rat, rat_int};

    fn poly(coeffs: &[i64]) -> UniPoly {
        UniPoly::from_ascending(coeffs.iter().map(|&c| rat_int(c)).collect())
    }

    #[test]
    fn eval_and_derivative() {
        let p = poly(&[-4, -3, 1]); // d^2 - 3d - 4 = (d - 4)(d + 1)
        assert_eq!(p.eval(&rat_int(4)), rat_int(0));
        assert_eq!(p.eval(&rat_int(0)), rat_int(-4));
        assert_eq!(p.derivative(), poly(&[-3, 2]));
        assert_eq!(p.degree(), Some(2));
    }

    #[test]
    fn sturm_counts_simple_roots() {
        let p = poly(&[-2, 0, 1]); // d^2 - 2
        let chain = SturmChain::new(&p).unwrap();
        assert_eq!(chain.count_roots(&rat_int(1), &rat_int(2)).unwrap(), 1);
        assert_eq!(chain.count_roots(&rat_int(-2), &rat_int(2)).unwrap(), 2);
        assert_eq!(chain.count_roots(&rat_int(2), &rat_int(3)).unwrap(), 0);
        let q = poly(&[1, 0, 1]); // d^2 + 1
        let chain = SturmChain::new(&q).unwrap();
        assert_eq!(chain.count_roots(&rat_int(-10), &rat_int(10)).unwrap(), 0);
    }

    #[test]
    fn half_open_convention_at_roots() {
        let p = poly(&[-4, -3, 1]); // roots -1 and 4
        let chain = SturmChain::new(&p).unwrap();
        // root 4 is inside (3, 4], not inside (4, 5]
        assert_eq!(chain.count_roots(&rat_int(3), &rat_int(4)).unwrap(), 1);
        assert_eq!(chain.count_roots(&rat_int(4), &rat_int(5)).unwrap(), 0);
        // interval starting exactly at the root excludes it
        assert_eq!(chain.count_roots(&rat_int(-1), &rat_int(3)).unwrap(), 0);
    }

    #[test]
    fn repeated_roots_are_counted_once() {
        // (d - 1)^2 (d + 2)
        let p = UniPoly::from_ascending(vec![rat_int(2), rat_int(-3), rat_int(0), rat_int(1)]);
        let sf = p.squarefree_part();
        assert_eq!(sf.degree(), Some(2));
        let chain = SturmChain::new(&p).unwrap();
        assert_eq!(chain.count_roots(&rat_int(0), &rat_int(2)).unwrap(), 1);
        assert_eq!(chain.count_roots(&rat_int(-3), &rat_int(2)).unwrap(), 2);
    }

    #[test]
    fn magnitude_bound_examples() {
        assert_eq!(root_magnitude_bound(&poly(&[-4, -3, 1])).unwrap(), Int::from(6));
        assert_eq!(root_magnitude_bound(&poly(&[-1, 0, 1])).unwrap(), Int::from(2));
        // 24 d^2 - 576 d - 3072: the linear term gives 2 * 576 / 24 = 48
        assert_eq!(
            root_magnitude_bound(&poly(&[-3072, -576, 24])).unwrap(),
            Int::from(48)
        );
    }

    #[test]
    fn minimal_degree_worked_examples() {
        // largest root of d^2 - 3d - 4 is 4, so 5 is the first clear degree
        assert_eq!(minimal_positive_degree(&poly(&[-4, -3, 1])).unwrap(), Int::from(5));
        // largest root of the simplified n = 2 example: 12 + sqrt(272) in (28, 29)
        assert_eq!(
            minimal_positive_degree(&poly(&[-3072, -576, 24])).unwrap(),
            Int::from(29)
        );
        // no positive roots
        assert_eq!(minimal_positive_degree(&poly(&[1, 0, 1])).unwrap(), Int::from(1));
        assert_eq!(minimal_positive_degree(&poly(&[2, 3, 1])).unwrap(), Int::from(1));
        // root exactly at an integer
        assert_eq!(minimal_positive_degree(&poly(&[-4, 0, 1])).unwrap(), Int::from(3));
        // fractional coefficients
        let p = UniPoly::from_ascending(vec![rat(-9, 2), rat_int(0), rat(1, 2)]);
        assert_eq!(minimal_positive_degree(&p).unwrap(), Int::from(4));
    }

    #[test]
    fn minimal_degree_postconditions() {
        // for a batch of fixed polynomials: no roots at or above d_0,
        // and d_0 - 1 does not clear unless d_0 = 1
        let cases = vec![
            poly(&[-4, -3, 1]),
            poly(&[-3072, -576, 24]),
            poly(&[6, -5, 1]),      // roots 2, 3
            poly(&[0, 0, 1]),       // double root at 0
            poly(&[-1, 3, -3, 1]),  // (d - 1)^3
            poly(&[5, 1, 3]),
        ];
        for p in cases {
            let d0 = minimal_positive_degree(&p).unwrap();
            let chain = SturmChain::new(&p).unwrap();
            let m = root_magnitude_bound(&p).unwrap();
            let above = chain
                .count_roots(
                    &(Rat::from_integer(d0.clone()) - rat(1, 2)),
                    &Rat::from_integer(&m + Int::one()),
                )
                .unwrap();
            assert_eq!(above, 0, "no roots at or above d_0 for {p:?}");
            assert!(!poly_eval_zero(&p, &d0), "d_0 itself is never a root");
            if d0 > Int::one() {
                // minimality: some root lives in [d_0 - 1, d_0)
                let prev = &d0 - Int::one();
                let has_root_from_prev = poly_eval_zero(&p, &prev)
                    || chain
                        .count_roots(
                            &Rat::from_integer(prev.clone()),
                            &Rat::from_integer(d0.clone()),
                        )
                        .unwrap()
                        > 0;
                assert!(has_root_from_prev, "d_0 is minimal for {p:?}");
            }
        }
    }

    fn poly_eval_zero(p: &UniPoly, at: &Int) -> bool {
        p.eval(&Rat::from_integer(at.clone())).is_zero()
    }

    #[test]
    fn random_polynomials_respect_bound_and_minimality() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5eed);
        for _ in 0..50 {
            let deg = rng.gen_range(1..=6usize);
            let mut coeffs: Vec<i64> = (0..deg).map(|_| rng.gen_range(-20..=20)).collect();
            coeffs.push(rng.gen_range(1..=20));
            let p = poly(&coeffs);
            let d0 = minimal_positive_degree(&p).unwrap();
            let m = root_magnitude_bound(&p).unwrap();
            assert!(d0 <= &m + Int::one(), "{coeffs:?}");
            let chain = SturmChain::new(&p).unwrap();
            // nothing at or above d_0
            assert!(!poly_eval_zero(&p, &d0), "{coeffs:?}");
            let above = chain
                .count_roots(
                    &Rat::from_integer(d0.clone()),
                    &Rat::from_integer(&m + Int::one()),
                )
                .unwrap();
            assert_eq!(above, 0, "{coeffs:?}");
            // minimality: a root in [d_0 - 1, d_0) unless d_0 is already 1
            if d0 > Int::one() {
                let prev = &d0 - Int::one();
                let witnessed = poly_eval_zero(&p, &prev)
                    || chain
                        .count_roots(
                            &Rat::from_integer(prev),
                            &Rat::from_integer(d0.clone()),
                        )
                        .unwrap()
                        > 0;
                assert!(witnessed, "{coeffs:?} gave non-minimal {d0}");
            }
        }
    }

    #[test]
    fn rejects_bad_inputs() {
        assert_eq!(
            minimal_positive_degree(&UniPoly::from_ascending(vec![])),
            Err(RootError::ZeroPolynomial)
        );
        assert_eq!(
            minimal_positive_degree(&poly(&[3, 1, -1])),
            Err(RootError::NonPositiveLeading)
        );
        let chain = SturmChain::new(&poly(&[-2, 0, 1])).unwrap();
        assert_eq!(
            chain.count_roots(&rat_int(2), &rat_int(1)),
            Err(RootError::BadInterval)
        );
    }
}
