//! The intersection polynomial I(d) and its simplified companion.
//!
//! I(d) = sum_p c_p d^(n-p) is assembled from the residue formula as the
//! coefficient of h^n t_1^n ... t_kappa^n in A * B * C. Two independent
//! routes are implemented:
//!
//! * compute_i: per-coefficient Cauchy sums. The d^(n-p) slice of A is a
//!   combination of f_j s_r pieces, so c_p reduces to integer sums of
//!   F(j, r, i) = [t^(n+i)] f_j s_r against the B and C coefficient tables.
//!   Everything inside the sums is a BigInt; the rational alpha and beta
//!   multipliers enter once per (p, q) pair.
//! * compute_i_product: literal truncated series multiplication A * B * C.
//!   Slower, used as the cross-check oracle.
//!
//! The beta branch of a slice (p, q) needs the same inner sum as the alpha
//! branch of (p + 1, q), so the engine computes the triangular table
//! S(P, q) = sum_j B_j sum_k C_k F(P-q, kappa-n+P, j-k) once and assembles
//! c_p = sum_q alpha_(p-q) S(p, q) - sum_q beta_(p+1-q) S(p+1, q),
//! with the subtracted row absent at p = n where the symmetric index would
//! pass kappa.

use crate::combinatorics::elementary_symmetric;
use crate::integrand::{
    alpha, beta, build_a, build_b_truncated, build_c_truncated, build_f_p, c_table_int,
    coeff_f_sym, default_policy, estimate_c_terms, sym_poly, var_t, IntegrandError, Parameters,
    VAR_D, VAR_H,
};
use crate::series::{ExponentVector, TruncationPolicy};
use crate::{Int, Rat};
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum IntersectError {
    #[error(transparent)]
    Integrand(#[from] IntegrandError),
    #[error(transparent)]
    Series(#[from] crate::series::SeriesError),
    #[error("policy is narrower than the proven-sufficient default: {0}")]
    PolicyTooNarrow(String),
    #[error("term budget {budget} is below the estimated C table size {estimate}")]
    BudgetTooSmall { budget: usize, estimate: u128 },
    #[error("leading-coefficient split needs kappa = n, got kappa = {kappa}, n = {n}")]
    KappaMismatch { kappa: usize, n: usize },
}

/// I(d) with coefficients indexed by p: coeffs[p] multiplies d^(n-p).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionPolynomial {
    n: usize,
    coeffs: Vec<Rat>,
}

impl IntersectionPolynomial {
    pub fn new(coeffs: Vec<Rat>) -> Self {
        assert!(!coeffs.is_empty());
        IntersectionPolynomial {
            n: coeffs.len() - 1,
            coeffs,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Coefficient of d^(n-p).
    pub fn coefficient(&self, p: usize) -> &Rat {
        &self.coeffs[p]
    }

    pub fn coefficients(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn eval(&self, d: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in &self.coeffs {
            acc = acc * d + c;
        }
        acc
    }

    /// Coefficients in ascending degree order (index = power of d).
    pub fn to_ascending(&self) -> Vec<Rat> {
        self.coeffs.iter().rev().cloned().collect()
    }
}

/// The sign-pessimized companion polynomial built from positive values
/// v_0, ..., v_n: v_0 d^n - v_1 d^(n-1) - ... - v_n. Its largest positive
/// root dominates the region where the v_0 term may fail to dominate.
pub fn envelope_polynomial(values: &[Rat]) -> IntersectionPolynomial {
    assert!(!values.is_empty());
    let coeffs = values
        .iter()
        .enumerate()
        .map(|(p, v)| if p == 0 { v.clone() } else { -v.clone() })
        .collect();
    IntersectionPolynomial::new(coeffs)
}

/// Exact I(d) over the proven-sufficient default truncation windows.
pub fn compute_i(params: &Parameters) -> Result<IntersectionPolynomial, IntersectError> {
    let policy = default_policy(params);
    compute_core(params, &policy, None, true, true)
}

/// compute_i with a hard cap on the C table size; fails fast when the
/// upfront estimate already exceeds the budget.
pub fn compute_i_budgeted(
    params: &Parameters,
    budget: usize,
) -> Result<IntersectionPolynomial, IntersectError> {
    let policy = default_policy(params);
    let estimate = estimate_c_terms(params.kappa(), &policy);
    if estimate > budget as u128 {
        return Err(IntersectError::BudgetTooSmall { budget, estimate });
    }
    compute_core(params, &policy, Some(budget), true, true)
}

/// compute_i over caller-supplied windows. The policy must contain the
/// default windows and length cap; narrower policies would silently drop
/// contributing monomials, so they are rejected.
pub fn compute_i_with_policy(
    params: &Parameters,
    policy: &TruncationPolicy,
    budget: Option<usize>,
) -> Result<IntersectionPolynomial, IntersectError> {
    let base = default_policy(params);
    for v in 0..params.arity() {
        let (lo, hi) = policy.window(v);
        let (blo, bhi) = base.window(v);
        if lo > blo || hi < bhi {
            return Err(IntersectError::PolicyTooNarrow(format!(
                "window for variable {v} is [{lo}, {hi}], needs [{blo}, {bhi}]"
            )));
        }
    }
    let (bw, bcap) = base.weighted_cap().expect("default policy carries the cap");
    match policy.weighted_cap() {
        None => {
            return Err(IntersectError::PolicyTooNarrow(
                "missing weighted length cap".into(),
            ))
        }
        Some((w, cap)) => {
            if w != bw {
                return Err(IntersectError::PolicyTooNarrow(
                    "cap weights differ from the length weights".into(),
                ));
            }
            if cap < bcap {
                return Err(IntersectError::PolicyTooNarrow(format!(
                    "length cap {cap} is below the required {bcap}"
                )));
            }
        }
    }
    if let Some(b) = budget {
        let estimate = estimate_c_terms(params.kappa(), policy);
        if estimate > b as u128 {
            return Err(IntersectError::BudgetTooSmall {
                budget: b,
                estimate,
            });
        }
    }
    compute_core(params, policy, budget, true, true)
}

/// The Cauchy-sum engine. use_b / use_c replace the corresponding factor
/// by 1 (keeping only its constant term), which turns the computation into
/// the diagnostic reduced forms used by tests.
pub(crate) fn compute_core(
    params: &Parameters,
    policy: &TruncationPolicy,
    budget: Option<usize>,
    use_b: bool,
    use_c: bool,
) -> Result<IntersectionPolynomial, IntersectError> {
    params.require_tower()?;
    let n = params.n();
    let kappa = params.kappa();

    // C coefficient table, keyed by t-exponent
    let c_terms: Vec<(Vec<i32>, Int)> = if use_c {
        c_table_int(kappa, policy, budget)?.into_iter().collect()
    } else {
        vec![(vec![0; kappa], Int::one())]
    };

    // B multi-indices grouped by total degree q, with unsigned coefficients
    let h_max = if use_b { n as i64 } else { 0 };
    let mut b_groups: Vec<Vec<(Vec<i64>, Int)>> = vec![Vec::new(); n + 1];
    let b_series_caps: Vec<i64> = (0..kappa)
        .map(|i| (-(policy.window(var_t(i)).0 as i64)).clamp(0, h_max))
        .collect();
    let mut j = vec![0i64; kappa];
    loop {
        let total: i64 = j.iter().sum();
        if total <= h_max {
            let mut coef = Int::one();
            for &jm in &j {
                coef *= crate::combinatorics::binomial(n + jm as usize, n);
            }
            b_groups[total as usize].push((j.clone(), coef));
        }
        let mut m = 0;
        loop {
            if m == kappa {
                break;
            }
            if j[m] < b_series_caps[m] {
                j[m] += 1;
                break;
            }
            j[m] = 0;
            m += 1;
        }
        if m == kappa {
            break;
        }
    }

    // triangular table S[P][q], all BigInt
    let mut s = vec![vec![Int::zero(); n + 1]; n + 1];
    let mut i_vec = vec![0i32; kappa];
    for (p_idx, row) in s.iter_mut().enumerate() {
        let r = kappa - n + p_idx;
        for (q, cell) in row.iter_mut().enumerate().take(p_idx + 1) {
            let fj = p_idx - q;
            let mut acc = Int::zero();
            for (jv, bcoef) in &b_groups[q] {
                let mut inner = Int::zero();
                for (kv, ccoef) in &c_terms {
                    for m in 0..kappa {
                        i_vec[m] = jv[m] as i32 - kv[m];
                    }
                    let f = coeff_f_sym(params, fj, r, &i_vec);
                    if !f.is_zero() {
                        inner += ccoef * f;
                    }
                }
                if q % 2 == 1 {
                    acc -= bcoef * inner;
                } else {
                    acc += bcoef * inner;
                }
            }
            *cell = acc;
        }
    }

    let mut coeffs = Vec::with_capacity(n + 1);
    for p in 0..=n {
        let mut cp = Rat::zero();
        for q in 0..=p {
            cp += alpha(params, p - q)? * Rat::from_integer(s[p][q].clone());
        }
        if p < n {
            for q in 0..=p {
                cp -= beta(params, p + 1 - q)? * Rat::from_integer(s[p + 1][q].clone());
            }
        }
        coeffs.push(cp);
    }
    Ok(IntersectionPolynomial::new(coeffs))
}

/// Independent oracle: literal truncated product A * B * C, coefficients
/// read off at d^(n-p) h^n t^n.
pub fn compute_i_product(params: &Parameters) -> Result<IntersectionPolynomial, IntersectError> {
    params.require_tower()?;
    let n = params.n();
    let kappa = params.kappa();
    let nk = params.n_kappa();
    let arity = params.arity();
    let policy = default_policy(params);

    let a = build_a(params)?;
    let b = build_b_truncated(params, &policy)?;
    // windows wide enough for every A*B monomial that can still reach t^n
    // after multiplication by an admissible C monomial
    let mut ab_windows = vec![(0, n as i32), (0, n as i32)];
    ab_windows.extend(
        std::iter::repeat((-(n as i32), (nk + 1) as i32)).take(kappa),
    );
    let ab_policy = TruncationPolicy::new(ab_windows)?;
    let ab = a.mul_truncated(&b, &ab_policy);

    let c = build_c_truncated(kappa, &policy)?;
    // only the extraction targets survive the final multiplication
    let mut final_windows = vec![(0, n as i32), (n as i32, n as i32)];
    final_windows.extend(std::iter::repeat((n as i32, n as i32)).take(kappa));
    let final_policy = TruncationPolicy::new(final_windows)?;
    let product = ab.mul_truncated(&c, &final_policy);

    let mut coeffs = Vec::with_capacity(n + 1);
    for p in 0..=n {
        let mut e = ExponentVector::zeros(arity)
            .with(VAR_D, (n - p) as i32)
            .with(VAR_H, n as i32);
        for i in 0..kappa {
            e = e.with(var_t(i), n as i32);
        }
        coeffs.push(product.coefficient(&e));
    }
    Ok(IntersectionPolynomial::new(coeffs))
}

/// Closed form of the simplified coefficients I~_p, p = 0..n:
/// I~_n = n_kappa! (2 mu)^n (prod a)^(n-1) / ((n-1)!)^kappa and
/// I~_p = s_(n-p)(a_1/(2 n mu), ..., a_kappa/(2 n mu)) I~_n.
pub fn compute_i_tilde(params: &Parameters) -> Result<Vec<Rat>, IntersectError> {
    params.require_tower()?;
    let n = params.n();
    let top = i_tilde_n(params);
    let ratios = params.scaled_b_ratios();
    let mut out = Vec::with_capacity(n + 1);
    for p in 0..=n {
        let sym = elementary_symmetric(n - p, &ratios).map_err(IntegrandError::from)?;
        out.push(sym * &top);
    }
    Ok(out)
}

/// I~_n in closed form.
pub fn i_tilde_n(params: &Parameters) -> Rat {
    let n = params.n();
    let kappa = params.kappa();
    let nk = params.n_kappa();
    let mut num = crate::combinatorics::factorial(nk);
    num *= num_traits::pow::pow(Int::from(2) * params.mu(), n);
    for i in 0..kappa {
        num *= num_traits::pow::pow(params.a(i).clone(), n - 1);
    }
    let den = num_traits::pow::pow(crate::combinatorics::factorial(n - 1), kappa);
    Rat::new(num, den)
}

/// The same numbers recomputed from the series route: I~_p is the
/// coefficient of t_1^n ... t_kappa^n in f_p s_(kappa-n+p).
pub fn compute_i_tilde_direct(params: &Parameters) -> Result<Vec<Rat>, IntersectError> {
    params.require_tower()?;
    let n = params.n();
    let kappa = params.kappa();
    let arity = params.arity();
    let mut target = ExponentVector::zeros(arity);
    for i in 0..kappa {
        target = target.with(var_t(i), n as i32);
    }
    let mut out = Vec::with_capacity(n + 1);
    for p in 0..=n {
        let prod = build_f_p(params, p)?.mul(&sym_poly(params, kappa - n + p)?);
        out.push(prod.coefficient(&target));
    }
    Ok(out)
}

/// Split of the leading coefficient c_0 into the contributions of C terms
/// by sign, plus the slope of its delta dependence:
/// c_0 = plus - minus - delta * slope exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeadingDecomposition {
    pub plus: Rat,
    pub minus: Rat,
    pub slope: Rat,
}

pub fn decompose_i0(params: &Parameters) -> Result<LeadingDecomposition, IntersectError> {
    let kappa = params.kappa();
    let n = params.n();
    if kappa != n {
        return Err(IntersectError::KappaMismatch { kappa, n });
    }
    let policy = default_policy(params);
    let table = c_table_int(kappa, &policy, None)?;
    let mut plus = Int::zero();
    let mut minus = Int::zero();
    let mut slope = Int::zero();
    let mut i_vec = vec![0i32; kappa];
    for (kv, ccoef) in &table {
        for m in 0..kappa {
            i_vec[m] = -kv[m];
        }
        let f0 = coeff_f_sym(params, 0, kappa - n, &i_vec);
        let contrib = ccoef * &f0;
        if contrib.is_positive() {
            plus += contrib;
        } else {
            minus -= contrib;
        }
        slope += ccoef * coeff_f_sym(params, 1, kappa - n + 1, &i_vec);
    }
    Ok(LeadingDecomposition {
        plus: Rat::from_integer(plus),
        minus: Rat::from_integer(minus),
        slope: Rat::from_integer(slope),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::WeightVector;
    use crate::{rat, rat_int};
    use rand::{Rng, SeedableRng};

    fn params(n: usize, weights: &[i64], delta: Rat) -> Parameters {
        Parameters::new(
            n,
            weights.len(),
            WeightVector::from_i64(weights).unwrap(),
            delta,
        )
        .unwrap()
    }

    #[test]
    fn frozen_quadratic() {
        // hand-computed from the residue formula: 34 d^2 - 459 d - 1104
        let p = params(2, &[2, 1], Rat::zero());
        let expect = vec![rat_int(34), rat_int(-459), rat_int(-1104)];
        let cauchy = compute_i(&p).unwrap();
        assert_eq!(cauchy.coefficients(), &expect[..]);
        let product = compute_i_product(&p).unwrap();
        assert_eq!(product.coefficients(), &expect[..]);
        assert_eq!(cauchy.eval(&rat_int(0)), rat_int(-1104));
        assert_eq!(
            cauchy.eval(&rat_int(16)),
            rat_int(34 * 256 - 459 * 16 - 1104)
        );
    }

    #[test]
    fn routes_agree_with_delta() {
        let cases = [
            params(2, &[2, 1], rat(1, 70)),
            params(2, &[9, 3, 1], rat(1, 140)),
            params(3, &[9, 3, 1], rat(1, 945)),
        ];
        for p in &cases {
            let cauchy = compute_i(p).unwrap();
            let product = compute_i_product(p).unwrap();
            assert_eq!(cauchy, product, "n={} kappa={}", p.n(), p.kappa());
        }
    }

    #[test]
    fn tilde_closed_values() {
        let p = params(2, &[2, 1], Rat::zero());
        let tilde = compute_i_tilde(&p).unwrap();
        assert_eq!(tilde, vec![rat_int(24), rat_int(576), rat_int(3072)]);
        assert_eq!(compute_i_tilde_direct(&p).unwrap(), tilde);
    }

    #[test]
    fn tilde_routes_agree_on_random_weights() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x1e7b0d);
        for _ in 0..6 {
            let n = rng.gen_range(2..=3usize);
            let kappa = rng.gen_range(n..=4usize);
            // nef-style decreasing weights keep sizes moderate
            let mut w = vec![0i64; kappa];
            let mut last = rng.gen_range(1..=3i64);
            for i in (0..kappa).rev() {
                w[i] = last;
                last *= rng.gen_range(3..=4i64);
            }
            let p = params(n, &w, Rat::zero());
            assert_eq!(
                compute_i_tilde(&p).unwrap(),
                compute_i_tilde_direct(&p).unwrap(),
                "n={n} w={w:?}"
            );
        }
    }

    #[test]
    fn envelope_polynomial_shape() {
        let env = envelope_polynomial(&[rat_int(24), rat_int(576), rat_int(3072)]);
        assert_eq!(
            env.coefficients(),
            &[rat_int(24), rat_int(-576), rat_int(-3072)]
        );
        assert_eq!(env.to_ascending(), vec![rat_int(-3072), rat_int(-576), rat_int(24)]);
    }

    #[test]
    fn coefficients_scale_with_weights() {
        let base = compute_i(&params(2, &[2, 1], rat(1, 140))).unwrap();
        let doubled = compute_i(&params(2, &[4, 2], rat(1, 140))).unwrap();
        let factor = rat_int(16); // 2^(n_kappa) with n_kappa = 4
        for p in 0..=2 {
            assert_eq!(
                doubled.coefficient(p).clone(),
                base.coefficient(p) * &factor
            );
        }
    }

    #[test]
    fn reduced_form_matches_tilde_pattern() {
        // with B and C both replaced by 1 and delta = 0 the engine must
        // return c_p = (1 - p) / p! * I~_p
        for (n, w) in [(2usize, vec![2i64, 1]), (3, vec![9, 3, 1])] {
            let p = params(n, &w, Rat::zero());
            let policy = default_policy(&p);
            let reduced = compute_core(&p, &policy, None, false, false).unwrap();
            let tilde = compute_i_tilde(&p).unwrap();
            for q in 0..=n {
                let factor = Rat::new(
                    Int::from(1i64 - q as i64),
                    crate::combinatorics::factorial(q),
                );
                assert_eq!(reduced.coefficient(q).clone(), factor * &tilde[q]);
            }
        }
    }

    #[test]
    fn leading_decomposition_identity() {
        for (n, w, d) in [
            (2usize, vec![2i64, 1], rat(1, 140)),
            (2, vec![6, 1], Rat::zero()),
            (3, vec![9, 3, 1], rat(1, 945)),
        ] {
            let p = params(n, &w, d);
            let dec = decompose_i0(&p).unwrap();
            let full = compute_i(&p).unwrap();
            let c0 = dec.plus.clone() - &dec.minus - p.delta() * dec.slope.clone();
            assert_eq!(&c0, full.coefficient(0));
            if p.kappa() == 2 {
                assert!(dec.minus.is_zero(), "no negative C terms at kappa 2");
            }
            let tilde0 = compute_i_tilde(&p).unwrap()[0].clone();
            assert!(dec.plus >= tilde0, "plus part dominates the diagonal");
        }
    }

    #[test]
    fn budget_is_enforced() {
        let p = params(2, &[2, 1], Rat::zero());
        match compute_i_budgeted(&p, 1) {
            Err(IntersectError::BudgetTooSmall { budget: 1, estimate }) => {
                assert!(estimate > 1);
            }
            other => panic!("expected budget failure, got {other:?}"),
        }
        assert!(compute_i_budgeted(&p, 100_000).is_ok());
    }

    #[test]
    fn narrow_policy_is_rejected() {
        let p = params(2, &[2, 1], Rat::zero());
        let base = default_policy(&p);
        let mut windows: Vec<(i32, i32)> = (0..p.arity()).map(|v| base.window(v)).collect();
        windows[2].0 += 1; // shrink one t window
        let (w, cap) = base.weighted_cap().unwrap();
        let narrow = TruncationPolicy::new(windows)
            .unwrap()
            .with_weighted_cap(w.to_vec(), cap)
            .unwrap();
        assert!(matches!(
            compute_i_with_policy(&p, &narrow, None),
            Err(IntersectError::PolicyTooNarrow(_))
        ));
        // widening is accepted and exact
        let mut wide: Vec<(i32, i32)> = (0..p.arity()).map(|v| base.window(v)).collect();
        for wdw in wide.iter_mut().skip(2) {
            wdw.0 -= 2;
            wdw.1 += 2;
        }
        let wide = TruncationPolicy::new(wide)
            .unwrap()
            .with_weighted_cap(w.to_vec(), cap + 4)
            .unwrap();
        let via_wide = compute_i_with_policy(&p, &wide, None).unwrap();
        assert_eq!(via_wide, compute_i(&p).unwrap());
    }
}
