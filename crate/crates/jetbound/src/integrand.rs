//! The three factors of the residue formula as truncated Laurent series.
//!
//! Variable order is fixed as (d, h, t_1, ..., t_kappa). The factors:
//!
//! * A: the product (dh + t_1)...(dh + t_kappa) f(t), where f collects the
//!   integrand's h-expansion with coefficients alpha_i - d beta_i and
//!   h^(n+1) = 0.
//! * B: the alternating binomial tail sum over multi-indices j, truncated by
//!   total h-degree.
//! * C: the universal degree-zero ratio product, expanded with respect to the
//!   variable order t_1 << ... << t_kappa << 1.
//!
//! C is expanded through the substitution u_i = t_i / t_(i+1): a support
//! vector k contributes t^k = prod u_i^(p_i) with p_i the prefix sums of k,
//! so the expansion is an ordinary power series in u and the weighted length
//! cap is a total-degree cap. Every u-exponent is nonnegative in every
//! factor, so truncating intermediate products against the policy loses
//! nothing admissible.
//!
//! The second-kind C factor expands as a geometric series in
//! t_(i-1) / (t_j - 2 t_i), each layer re-expanded in 2 t_i / t_j.
//! Degree-zero homogeneity forces the t_j exponent of every term to be
//! negative, so the support lands in the u-cone.

use crate::combinatorics::{
    binomial, factorial, multinomial, mu_weighted, CombinatoricsError, WeightVector,
};
use crate::series::{ExponentVector, SparseSeries, TruncationPolicy, SeriesError};
use crate::{Int, Rat};
use num_traits::{One, Signed, Zero};
use std::collections::{BTreeMap, HashMap};
use thiserror::Error;

/// Index of the degree variable d.
pub const VAR_D: usize = 0;
/// Index of the hyperplane variable h.
pub const VAR_H: usize = 1;

/// Index of t_(i+1) for 0-based i.
pub fn var_t(i: usize) -> usize {
    2 + i
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum IntegrandError {
    #[error("n must be at least 1")]
    BadN,
    #[error("weight count {0} does not match kappa {1}")]
    WeightCountMismatch(usize, usize),
    #[error("delta must be nonnegative")]
    NegativeDelta,
    #[error("kappa {kappa} must be at least n {n} for this operation")]
    KappaBelowN { kappa: usize, n: usize },
    #[error("index {index} out of range 0..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("policy must carry the weighted length cap for the C expansion")]
    MissingLengthCap,
    #[error("policy weighted cap does not use the length weights (kappa-i on t_i)")]
    WrongCapWeights,
    #[error("term budget {budget} exceeded while expanding C")]
    BudgetExceeded { budget: usize },
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    Combinatorics(#[from] CombinatoricsError),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EvalError {
    #[error("evaluation point has a zero coordinate at position {0}")]
    ZeroCoordinate(usize),
    #[error("point lies outside the expansion's convergence domain: factor ({i}, {j}) has ratio of absolute value >= 1")]
    OutsideConvergence { i: usize, j: usize },
}

/// Validated parameter block for one computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Parameters {
    n: usize,
    kappa: usize,
    weights: WeightVector,
    delta: Rat,
}

impl Parameters {
    pub fn new(
        n: usize,
        kappa: usize,
        weights: WeightVector,
        delta: Rat,
    ) -> Result<Self, IntegrandError> {
        if n < 1 {
            return Err(IntegrandError::BadN);
        }
        if weights.len() != kappa {
            return Err(IntegrandError::WeightCountMismatch(weights.len(), kappa));
        }
        if delta.is_negative() {
            return Err(IntegrandError::NegativeDelta);
        }
        Ok(Parameters {
            n,
            kappa,
            weights,
            delta,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn kappa(&self) -> usize {
        self.kappa
    }

    pub fn weights(&self) -> &WeightVector {
        &self.weights
    }

    pub fn delta(&self) -> &Rat {
        &self.delta
    }

    /// Highest t-degree in the integrand: n + kappa (n - 1).
    pub fn n_kappa(&self) -> usize {
        self.n + self.kappa * (self.n - 1)
    }

    /// Weighted degree mu = sum_i i a_i.
    pub fn mu(&self) -> Int {
        mu_weighted(&self.weights)
    }

    /// Series arity: d, h, and the kappa tower variables.
    pub fn arity(&self) -> usize {
        self.kappa + 2
    }

    pub fn a(&self, i: usize) -> &Int {
        self.weights.get(i)
    }

    /// The reciprocal point (1/a_1, ..., 1/a_kappa).
    pub fn reciprocal_point(&self) -> Vec<Rat> {
        self.weights
            .entries()
            .iter()
            .map(|a| Rat::new(Int::one(), a.clone()))
            .collect()
    }

    /// Ratios a_i / (2 n mu) of the scaled evaluation point for |B|.
    pub fn scaled_b_ratios(&self) -> Vec<Rat> {
        let denom = Int::from(2 * self.n) * self.mu();
        self.weights
            .entries()
            .iter()
            .map(|a| Rat::new(a.clone(), denom.clone()))
            .collect()
    }

    /// Requires kappa >= n, the standing assumption of the main computation.
    pub fn require_tower(&self) -> Result<(), IntegrandError> {
        if self.kappa < self.n {
            return Err(IntegrandError::KappaBelowN {
                kappa: self.kappa,
                n: self.n,
            });
        }
        Ok(())
    }
}

/// h-expansion coefficient alpha_i = (1 - (1 - delta n - delta) i) / i!.
pub fn alpha(params: &Parameters, i: usize) -> Result<Rat, IntegrandError> {
    if i > params.n() {
        return Err(IntegrandError::IndexOutOfRange {
            index: i,
            max: params.n(),
        });
    }
    let one = Rat::one();
    let slope = &one - params.delta() * Rat::from_integer(Int::from(params.n() + 1));
    let num = one - slope * Rat::from_integer(Int::from(i));
    Ok(num / Rat::from_integer(factorial(i)))
}

/// h-expansion coefficient beta_i = delta i / i!.
pub fn beta(params: &Parameters, i: usize) -> Result<Rat, IntegrandError> {
    if i > params.n() {
        return Err(IntegrandError::IndexOutOfRange {
            index: i,
            max: params.n(),
        });
    }
    Ok(params.delta() * Rat::new(Int::from(i), factorial(i)))
}

/// f_p = n_kappa! / (n_kappa - p)! (2 mu)^p (sum_j a_j t_j)^(n_kappa - p),
/// built by direct multinomial enumeration.
pub fn build_f_p(params: &Parameters, p: usize) -> Result<SparseSeries<Rat>, IntegrandError> {
    let nk = params.n_kappa();
    if p > params.n() {
        return Err(IntegrandError::IndexOutOfRange {
            index: p,
            max: params.n(),
        });
    }
    let deg = nk - p;
    let kappa = params.kappa();
    let mut falling = Int::one();
    for m in 0..p {
        falling *= Int::from(nk - m);
    }
    let two_mu_pow = num_traits::pow::pow(Int::from(2) * params.mu(), p);
    let prefactor = falling * two_mu_pow;

    // powers of each weight up to the homogeneous degree
    let powers: Vec<Vec<Int>> = (0..kappa)
        .map(|i| {
            let mut row = Vec::with_capacity(deg + 1);
            row.push(Int::one());
            for _ in 0..deg {
                let last = row.last().unwrap() * params.a(i);
                row.push(last);
            }
            row
        })
        .collect();

    let arity = params.arity();
    let mut out = SparseSeries::zero(arity);
    let mut parts = vec![0i64; kappa];
    enumerate_compositions(deg as i64, kappa, &mut parts, &mut |parts| {
        let coeff = multinomial(deg as i64, parts).expect("valid composition");
        let mut c = &prefactor * coeff;
        let mut e = ExponentVector::zeros(arity);
        for (i, &pi) in parts.iter().enumerate() {
            c *= &powers[i][pi as usize];
            e = e.with(var_t(i), pi as i32);
        }
        out.add_term(e, Rat::from_integer(c));
    });
    Ok(out)
}

fn enumerate_compositions(
    total: i64,
    slots: usize,
    parts: &mut Vec<i64>,
    f: &mut impl FnMut(&[i64]),
) {
    fn rec(total: i64, at: usize, parts: &mut Vec<i64>, f: &mut impl FnMut(&[i64])) {
        if at + 1 == parts.len() {
            parts[at] = total;
            f(parts);
            return;
        }
        for v in 0..=total {
            parts[at] = v;
            rec(total - v, at + 1, parts, f);
        }
    }
    assert!(slots >= 1);
    rec(total, 0, parts, f);
}

/// Elementary symmetric polynomial s_j(t_1, ..., t_kappa) as a series.
pub fn sym_poly(params: &Parameters, j: usize) -> Result<SparseSeries<Rat>, IntegrandError> {
    let kappa = params.kappa();
    if j > kappa {
        return Err(IntegrandError::IndexOutOfRange {
            index: j,
            max: kappa,
        });
    }
    let arity = params.arity();
    let mut out = SparseSeries::zero(arity);
    // iterate all j-subsets of the kappa variables
    let mut idx: Vec<usize> = (0..j).collect();
    loop {
        let mut e = ExponentVector::zeros(arity);
        for &i in &idx {
            e = e.with(var_t(i), 1);
        }
        out.add_term(e, Rat::one());
        if j == 0 {
            break;
        }
        // next combination in lexicographic order
        let mut m = j;
        loop {
            if m == 0 {
                return Ok(out);
            }
            m -= 1;
            if idx[m] + 1 <= kappa - (j - m) {
                idx[m] += 1;
                for r in m + 1..j {
                    idx[r] = idx[r - 1] + 1;
                }
                break;
            }
        }
    }
    Ok(out)
}

/// The full factor A with h truncated at h^n.
pub fn build_a(params: &Parameters) -> Result<SparseSeries<Rat>, IntegrandError> {
    let n = params.n();
    let kappa = params.kappa();
    let nk = params.n_kappa();
    let arity = params.arity();

    // f = sum_i (alpha_i - d beta_i) h^i f_i, h-truncated at n
    let mut f = SparseSeries::zero(arity);
    for i in 0..=n {
        let fi = build_f_p(params, i)?;
        let ai = alpha(params, i)?;
        let bi = beta(params, i)?;
        let h_shift = SparseSeries::monomial(
            ExponentVector::zeros(arity).with(VAR_H, i as i32),
            Rat::one(),
        );
        let dh_shift = SparseSeries::monomial(
            ExponentVector::zeros(arity)
                .with(VAR_D, 1)
                .with(VAR_H, i as i32),
            -bi,
        );
        f = f.add(&fi.scale(&ai).mul(&h_shift));
        f = f.add(&fi.mul(&dh_shift));
    }

    // wide windows: only the h cap is a real truncation
    let mut windows = vec![(0, (kappa + 1) as i32), (0, n as i32)];
    windows.extend(std::iter::repeat((0, (nk + 1) as i32)).take(kappa));
    let policy = TruncationPolicy::new(windows)?;

    let mut acc = f.filtered(&policy);
    for i in 0..kappa {
        let lin = SparseSeries::monomial(
            ExponentVector::zeros(arity).with(VAR_D, 1).with(VAR_H, 1),
            Rat::one(),
        )
        .add(&SparseSeries::monomial(
            ExponentVector::zeros(arity).with(var_t(i), 1),
            Rat::one(),
        ));
        acc = acc.mul_truncated(&lin, &policy);
    }
    Ok(acc)
}

/// The d^(n-p) slice of A, assembled from the closed coefficient formula
/// rather than from build_a. The d exponent of the result is zero.
pub fn build_a_slice(params: &Parameters, p: usize) -> Result<SparseSeries<Rat>, IntegrandError> {
    params.require_tower()?;
    let n = params.n();
    let kappa = params.kappa();
    if p > n {
        return Err(IntegrandError::IndexOutOfRange { index: p, max: n });
    }
    let arity = params.arity();
    let mut out = SparseSeries::zero(arity);
    for q in 0..=p {
        let h_shift = SparseSeries::monomial(
            ExponentVector::zeros(arity).with(VAR_H, (n - q) as i32),
            Rat::one(),
        );
        let mut slice = build_f_p(params, p - q)?
            .scale(&alpha(params, p - q)?)
            .mul(&sym_poly(params, kappa - n + p)?);
        // the subtracted branch vanishes when its symmetric index passes kappa
        if kappa - n + p + 1 <= kappa {
            let sub = build_f_p(params, p + 1 - q)?
                .scale(&beta(params, p + 1 - q)?)
                .mul(&sym_poly(params, kappa - n + p + 1)?);
            slice = slice.sub(&sub);
        }
        out = out.add(&slice.mul(&h_shift));
    }
    Ok(out)
}

/// The binomial tail factor B, truncated by the policy's h window and
/// t windows (B's t exponents are nonpositive).
pub fn build_b_truncated(
    params: &Parameters,
    policy: &TruncationPolicy,
) -> Result<SparseSeries<Rat>, IntegrandError> {
    let n = params.n();
    let kappa = params.kappa();
    let arity = params.arity();
    assert_eq!(policy.arity(), arity, "policy arity mismatch");
    let h_max = policy.window(VAR_H).1.max(0) as i64;
    let j_caps: Vec<i64> = (0..kappa)
        .map(|i| {
            let lo = policy.window(var_t(i)).0;
            (-(lo as i64)).clamp(0, h_max)
        })
        .collect();

    let mut out = SparseSeries::zero(arity);
    let mut j = vec![0i64; kappa];
    loop {
        let total: i64 = j.iter().sum();
        if total <= h_max {
            let mut c = Int::one();
            for &jm in &j {
                c *= binomial(n + jm as usize, n);
            }
            if total % 2 == 1 {
                c = -c;
            }
            let mut e = ExponentVector::zeros(arity).with(VAR_H, total as i32);
            for (m, &jm) in j.iter().enumerate() {
                e = e.with(var_t(m), -(jm as i32));
            }
            if policy.admissible(&e) {
                out.add_term(e, Rat::from_integer(c));
            }
        }
        // odometer over the box prod [0, j_caps[i]]
        let mut m = 0;
        loop {
            if m == kappa {
                return Ok(out);
            }
            if j[m] < j_caps[m] {
                j[m] += 1;
                break;
            }
            j[m] = 0;
            m += 1;
        }
    }
}

/// Default computation policy: per-variable windows that provably cover every
/// contributing monomial of the Cauchy sums, plus the implied length cap.
///
/// t_i window [n - n_kappa - 1, 2n]: the per-variable exponent of f_j s_r is
/// at most n_kappa + 1 and the B multi-index entries are at most n.
pub fn default_policy(params: &Parameters) -> TruncationPolicy {
    let n = params.n() as i64;
    let kappa = params.kappa();
    let nk = params.n_kappa() as i64;
    let lo = (n - nk - 1) as i32;
    let hi = (2 * n) as i32;
    let mut windows = vec![(0, params.n() as i32), (0, params.n() as i32)];
    windows.extend(std::iter::repeat((lo, hi)).take(kappa));
    let mut weights = vec![0i64; params.arity()];
    for i in 0..kappa {
        weights[var_t(i)] = (kappa - 1 - i) as i64;
    }
    let cap = default_length_cap(params);
    TruncationPolicy::new(windows)
        .expect("windows are well formed")
        .with_weighted_cap(weights, cap)
        .expect("weights match arity")
}

/// Length cap implied by the default windows:
/// sum_i min(2 n i, (n_kappa + 1 - n)(kappa - i)) over i = 1 .. kappa-1.
pub fn default_length_cap(params: &Parameters) -> i64 {
    let n = params.n() as i64;
    let kappa = params.kappa() as i64;
    let nk = params.n_kappa() as i64;
    (1..kappa)
        .map(|i| (2 * n * i).min((nk + 1 - n) * (kappa - i)))
        .sum()
}

/// Exact integer coefficient table of the C expansion, keyed by t-exponent.
///
/// All C coefficients are integers: both factor kinds expand with integer
/// coefficients (powers of two and signed binomials).
pub(crate) fn c_table_int(
    kappa: usize,
    policy: &TruncationPolicy,
    budget: Option<usize>,
) -> Result<BTreeMap<Vec<i32>, Int>, IntegrandError> {
    let arity = kappa + 2;
    assert_eq!(policy.arity(), arity, "policy arity mismatch");
    let (weights, cap) = policy.weighted_cap().ok_or(IntegrandError::MissingLengthCap)?;
    for v in 0..arity {
        let expect = if v >= 2 { (kappa - (v - 2) - 1) as i64 } else { 0 };
        if weights[v] != expect {
            return Err(IntegrandError::WrongCapWeights);
        }
    }
    if kappa <= 1 {
        // empty product
        let mut out = BTreeMap::new();
        let zero_key = vec![0i32; kappa];
        let e = ExponentVector::zeros(arity);
        if policy.admissible(&e) {
            out.insert(zero_key, Int::one());
        }
        return Ok(out);
    }

    let nu = kappa - 1;
    // prefix-sum caps from the t windows; u_m exponent is the prefix sum
    // through t_(m+1)
    let t_lo: Vec<i64> = (0..kappa).map(|i| policy.window(var_t(i)).0 as i64).collect();
    let t_hi: Vec<i64> = (0..kappa).map(|i| policy.window(var_t(i)).1 as i64).collect();
    let mut u_caps = vec![0i64; nu];
    for m in 0..nu {
        let from_hi: i64 = t_hi[..=m].iter().sum();
        let from_lo: i64 = -t_lo[m + 1..].iter().sum::<i64>();
        u_caps[m] = from_hi.min(from_lo).min(cap);
        if u_caps[m] < 0 {
            // no admissible support at all
            return Ok(BTreeMap::new());
        }
    }

    let admissible_u = |e: &[i64]| -> bool {
        let mut total = 0i64;
        for (m, &x) in e.iter().enumerate() {
            if x > u_caps[m] {
                return false;
            }
            total += x;
        }
        total <= cap
    };

    // factors as u-monomial lists (exponents, integer coefficient)
    let mut factors: Vec<Vec<(Vec<i64>, Int)>> = Vec::new();
    // first kind, pairs 0 <= i < j <= kappa-1:
    // 1 + sum_(k>=1) 2^(k-1) (u_i ... u_(j-1))^k
    for i in 0..kappa {
        for j in i + 1..kappa {
            let mut terms = vec![(vec![0i64; nu], Int::one())];
            let mut k = 1i64;
            loop {
                let mut e = vec![0i64; nu];
                for m in i..j {
                    e[m] = k;
                }
                if !admissible_u(&e) {
                    break;
                }
                terms.push((e, num_traits::pow::pow(Int::from(2), (k - 1) as usize)));
                k += 1;
            }
            factors.push(terms);
        }
    }
    // second kind, pairs 1 <= i < j <= kappa-1 (0-based; the math indices
    // are 2 <= i < j <= kappa):
    // 1 - sum_(k>=0) sum_(l=0..k) (-1)^l 2^(k-l) C(k,l)
    //     u_(i-1)^(l+1) (u_i ... u_(j-1))^(k+1)
    for i in 1..kappa {
        for j in i + 1..kappa {
            let mut terms = vec![(vec![0i64; nu], Int::one())];
            let mut k = 0i64;
            // admissibility is monotone in both k and l, so the first
            // failure at l = 0 ends the whole factor
            'outer: loop {
                for l in 0..=k {
                    let mut e = vec![0i64; nu];
                    e[i - 1] += l + 1;
                    for m in i..j {
                        e[m] += k + 1;
                    }
                    if !admissible_u(&e) {
                        if l == 0 {
                            break 'outer;
                        }
                        break;
                    }
                    let mut c = num_traits::pow::pow(Int::from(2), (k - l) as usize)
                        * binomial(k as usize, l as usize);
                    if l % 2 == 0 {
                        c = -c;
                    }
                    terms.push((e, c));
                }
                k += 1;
            }
            factors.push(terms);
        }
    }

    // smallest factors first keeps intermediate supports lean
    factors.sort_by_key(|f| f.len());

    let mut acc: HashMap<Vec<i64>, Int> = HashMap::new();
    acc.insert(vec![0i64; nu], Int::one());
    for factor in &factors {
        let mut next: HashMap<Vec<i64>, Int> =
            HashMap::with_capacity(acc.len() + acc.len() / 2);
        for (ea, ca) in &acc {
            for (eb, cb) in factor {
                let e: Vec<i64> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                if !admissible_u(&e) {
                    continue;
                }
                let c = ca * cb;
                match next.entry(e) {
                    std::collections::hash_map::Entry::Vacant(slot) => {
                        slot.insert(c);
                    }
                    std::collections::hash_map::Entry::Occupied(mut slot) => {
                        *slot.get_mut() += c;
                        if slot.get().is_zero() {
                            slot.remove();
                        }
                    }
                }
            }
        }
        if let Some(b) = budget {
            if next.len() > b {
                return Err(IntegrandError::BudgetExceeded { budget: b });
            }
        }
        acc = next;
    }

    // map u-monomials back to t-exponents and apply the final window filter
    let mut out = BTreeMap::new();
    for (p, c) in acc {
        let mut k = vec![0i32; kappa];
        k[0] = p[0] as i32;
        for m in 1..nu {
            k[m] = (p[m] - p[m - 1]) as i32;
        }
        k[kappa - 1] = (-p[nu - 1]) as i32;
        let mut e = ExponentVector::zeros(arity);
        for (i, &ki) in k.iter().enumerate() {
            e = e.with(var_t(i), ki);
        }
        if policy.admissible(&e) {
            out.insert(k, c);
        }
    }
    Ok(out)
}

/// Upper bound on the number of C terms the policy admits (the u-box size).
pub fn estimate_c_terms(kappa: usize, policy: &TruncationPolicy) -> u128 {
    if kappa <= 1 {
        return 1;
    }
    let cap = match policy.weighted_cap() {
        Some((_, c)) => c,
        None => return u128::MAX,
    };
    let nu = kappa - 1;
    let t_lo: Vec<i64> = (0..kappa).map(|i| policy.window(var_t(i)).0 as i64).collect();
    let t_hi: Vec<i64> = (0..kappa).map(|i| policy.window(var_t(i)).1 as i64).collect();
    let mut prod: u128 = 1;
    for m in 0..nu {
        let from_hi: i64 = t_hi[..=m].iter().sum();
        let from_lo: i64 = -t_lo[m + 1..].iter().sum::<i64>();
        let c = from_hi.min(from_lo).min(cap);
        if c < 0 {
            return 0;
        }
        prod = prod.saturating_mul((c + 1) as u128);
    }
    prod
}

/// The ratio-product factor C, exact for every monomial the policy admits.
pub fn build_c_truncated(
    kappa: usize,
    policy: &TruncationPolicy,
) -> Result<SparseSeries<Rat>, IntegrandError> {
    let table = c_table_int(kappa, policy, None)?;
    let arity = kappa + 2;
    Ok(SparseSeries::from_terms(
        arity,
        table.into_iter().map(|(k, c)| {
            let mut e = ExponentVector::zeros(arity);
            for (i, &ki) in k.iter().enumerate() {
                e = e.with(var_t(i), ki);
            }
            (e, Rat::from_integer(c))
        }),
    ))
}

/// Support test for C: zero total degree with every prefix sum nonnegative
/// (equivalently every suffix sum nonpositive).
pub fn c_support_valid(k: &[i32]) -> bool {
    let mut prefix = 0i64;
    for &ki in k {
        prefix += ki as i64;
        if prefix < 0 {
            return false;
        }
    }
    prefix == 0
}

fn check_point(point: &[Rat]) -> Result<(), EvalError> {
    for (i, x) in point.iter().enumerate() {
        if x.is_zero() {
            return Err(EvalError::ZeroCoordinate(i));
        }
    }
    Ok(())
}

/// C evaluated at a point inside the expansion's convergence domain.
///
/// Each factor is checked: the geometric ratio of its expansion must have
/// absolute value < 1 (this also rules out zero denominators).
pub fn eval_c_at(point: &[Rat]) -> Result<Rat, EvalError> {
    eval_c_impl(point, false)
}

/// The coefficientwise majorant of C (second-kind factors sign-flipped),
/// evaluated at a point inside its convergence domain.
pub fn eval_abs_c_at(point: &[Rat]) -> Result<Rat, EvalError> {
    eval_c_impl(point, true)
}

fn eval_c_impl(point: &[Rat], majorant: bool) -> Result<Rat, EvalError> {
    check_point(point)?;
    let kappa = point.len();
    let one = Rat::one();
    let two = Rat::from_integer(Int::from(2));
    let mut acc = Rat::one();
    // first kind: (x_j - x_i) / (x_j - 2 x_i), ratio 2 x_i / x_j
    for i in 0..kappa {
        for j in i + 1..kappa {
            let ratio = &two * &point[i] / &point[j];
            if ratio.abs() >= one {
                return Err(EvalError::OutsideConvergence { i: i + 1, j: j + 1 });
            }
            let num = &point[j] - &point[i];
            let den = &point[j] - &two * &point[i];
            acc *= num / den;
        }
    }
    // second kind: (x_j - 2 x_i) / (x_j - 2 x_i +- x_(i-1)),
    // ratio (2 x_i -+ x_(i-1)) / x_j
    for i in 1..kappa {
        for j in i + 1..kappa {
            let shifted = if majorant {
                &two * &point[i] + &point[i - 1]
            } else {
                &two * &point[i] - &point[i - 1]
            };
            let ratio = &shifted / &point[j];
            if ratio.abs() >= one {
                return Err(EvalError::OutsideConvergence { i: i + 1, j: j + 1 });
            }
            let num = &point[j] - &two * &point[i];
            let den = &point[j] - shifted;
            acc *= num / den;
        }
    }
    Ok(acc)
}

/// |B| at ratios r_i = h / t_i: prod (1 - r_i)^-(n+1), requiring |r_i| < 1.
pub fn eval_abs_b_at(n: usize, ratios: &[Rat]) -> Result<Rat, EvalError> {
    let one = Rat::one();
    let mut acc = Rat::one();
    for (i, r) in ratios.iter().enumerate() {
        if r.abs() >= one {
            return Err(EvalError::OutsideConvergence { i: i + 1, j: 0 });
        }
        let base = (&one - r).recip();
        acc *= num_traits::pow::pow(base, n + 1);
    }
    Ok(acc)
}

/// |B| at the scaled point h / t_i = a_i / (2 n mu); always convergent.
pub fn eval_abs_b_scaled(params: &Parameters) -> Rat {
    eval_abs_b_at(params.n(), &params.scaled_b_ratios())
        .expect("a_i < 2 n mu holds for positive weights")
}

/// Exact coefficient of t^(n + i) in f_j s_r, by the closed multinomial sum
/// over the r-subsets the symmetric function distributes over:
///
/// sum over eps in {0,1}^kappa, |eps| = r, all n + i_m - eps_m >= 0, of
/// n_kappa! (2 mu)^j / prod (n + i_m - eps_m)! * prod a_m^(n + i_m - eps_m).
///
/// Always an integer. Returns zero when the homogeneous degrees mismatch.
pub fn coeff_f_sym(params: &Parameters, j: usize, r: usize, i_vec: &[i32]) -> Int {
    let n = params.n() as i64;
    let kappa = params.kappa();
    let nk = params.n_kappa() as i64;
    debug_assert_eq!(i_vec.len(), kappa);
    if r > kappa || j > nk as usize {
        return Int::zero();
    }
    let base: Vec<i64> = i_vec.iter().map(|&i| n + i as i64).collect();
    if base.iter().any(|&b| b < 0) {
        return Int::zero();
    }
    let sum: i64 = base.iter().sum();
    if sum != nk - j as i64 + r as i64 {
        return Int::zero();
    }
    // n_kappa! / (n_kappa - j)! * (2 mu)^j
    let mut prefactor = Int::one();
    for m in 0..j {
        prefactor *= Int::from(nk - m as i64);
    }
    prefactor *= num_traits::pow::pow(Int::from(2) * params.mu(), j);

    let max_pow = base.iter().copied().max().unwrap_or(0).max(0) as usize;
    let powers: Vec<Vec<Int>> = (0..kappa)
        .map(|m| {
            let mut row = Vec::with_capacity(max_pow + 1);
            row.push(Int::one());
            for _ in 0..max_pow {
                let last = row.last().unwrap() * params.a(m);
                row.push(last);
            }
            row
        })
        .collect();

    let total = nk - j as i64;
    let mut acc = Int::zero();
    // iterate r-subsets as bitmasks; kappa stays small in practice
    assert!(kappa < 64, "subset enumeration uses u64 bitmasks");
    let full: u64 = 1 << kappa;
    for mask in 0..full {
        if (mask.count_ones() as usize) != r {
            continue;
        }
        let mut parts = Vec::with_capacity(kappa);
        let mut ok = true;
        for m in 0..kappa {
            let e = base[m] - ((mask >> m) & 1) as i64;
            if e < 0 {
                ok = false;
                break;
            }
            parts.push(e);
        }
        if !ok {
            continue;
        }
        let mut term = multinomial(total, &parts).expect("parts sum to total");
        for (m, &e) in parts.iter().enumerate() {
            term *= &powers[m][e as usize];
        }
        acc += term;
    }
    acc * prefactor
}
