//! Exact rational thresholds.
//!
//! Constants and densities arrive as `f64`; each is converted to the
//! rational it denotes exactly, so membership tests like
//! `d_B(x) < (1 - 2ε)np/4` have no floating-point boundary cases.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

pub(crate) fn rat(x: f64) -> BigRational {
    BigRational::from_float(x).expect("finite parameter")
}

pub(crate) fn int(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

/// Smallest integer `c` with `d < thr  <=>  d < c` for every integer `d`,
/// i.e. `ceil(thr)`, clamped to the `i64` range.
pub(crate) fn strict_cutoff(thr: &BigRational) -> i64 {
    let c = thr.ceil().to_integer();
    c.to_i64().unwrap_or(if c < BigInt::zero() { i64::MIN } else { i64::MAX })
}

pub(crate) fn half() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(2))
}

/// `ceil(x)` as `i64`.
pub(crate) fn ceil(x: &BigRational) -> i64 {
    strict_cutoff(x)
}
