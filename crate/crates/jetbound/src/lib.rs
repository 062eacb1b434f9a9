//! Exact computer-algebra engine for degree bounds of intersection polynomials
//! on towers of projectivized jet bundles.
//!
//! The pipeline: expand the three factors of the residue formula as iterated
//! Laurent series ([`integrand`]), extract the polynomial coefficients by exact
//! Cauchy-product sums ([`intersection`]), isolate the largest positive root
//! with Sturm chains ([`rootfind`]), and certify every inequality of the
//! degree-bound argument with arbitrary-precision rational arithmetic
//! ([`bounds`]). No floating point is used anywhere.

pub mod bounds;
pub mod combinatorics;
pub mod integrand;
pub mod intersection;
pub mod rootfind;
pub mod series;

/// Exact arbitrary-precision integer used throughout.
pub type Int = num_bigint::BigInt;

/// Exact rational scalar: always reduced, denominator positive.
pub type Rat = num_rational::BigRational;

/// Coefficient ring for the generic series kernel.
///
/// `Rat` and `Int` are the instantiations the engine uses; any num-traits
/// numeric type (including floats) satisfies the bound, but the certification
/// layers are deliberately concrete over `Rat`.
pub trait Coeff:
    num_traits::NumAssign + std::ops::Neg<Output = Self> + Clone + std::fmt::Debug
{
}

impl<T> Coeff for T where
    T: num_traits::NumAssign + std::ops::Neg<Output = T> + Clone + std::fmt::Debug
{
}

/// Shorthand for an exact rational from an integer pair.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(Int::from(num), Int::from(den))
}

/// Shorthand for an exact integer rational.
pub fn rat_int(num: i64) -> Rat {
    Rat::from_integer(Int::from(num))
}
