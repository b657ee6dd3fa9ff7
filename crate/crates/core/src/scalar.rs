//! Scalar abstraction for the real-valued reformulation arithmetic.
//!
//! Every reformulated objective here is a function of the integer objective
//! pair with rational coefficients, so the same formula serves two concrete
//! scalar types: `f64` for solver runs (the dyadic parameters keep that path
//! exact) and [`crate::Rational`] for the analytic oracles, where optimal-set
//! classification sits on knife-edge equalities that tolerate no rounding.

use num_traits::{FromPrimitive, Num, Signed};

/// Number type the weighted-sum, penalty, and subproblem values are computed
/// in. Implemented by `f64` and [`crate::Rational`].
pub trait Scalar: Num + Signed + FromPrimitive + PartialOrd + Clone {}

impl<T: Num + Signed + FromPrimitive + PartialOrd + Clone> Scalar for T {}

/// Embed an integer exactly.
pub fn from_int<S: Scalar>(v: i64) -> S {
    S::from_i64(v).expect("integer out of scalar range")
}

/// Embed a finite `f64` exactly. Every finite `f64` is a dyadic rational, so
/// the conversion is lossless for both scalar instantiations.
///
/// Panics on non-finite input or rational overflow.
pub fn from_dyadic<S: Scalar>(v: f64) -> S {
    assert!(v.is_finite(), "parameter must be finite, got {v}");
    S::from_f64(v).expect("dyadic parameter out of scalar range")
}

/// Ratio `num/den` as a scalar; exact for the rational instantiation.
pub fn from_ratio<S: Scalar>(num: i64, den: i64) -> S {
    assert!(den != 0);
    from_int::<S>(num) / from_int::<S>(den)
}
