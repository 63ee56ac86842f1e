//! Scalar abstraction for the numeric core.

use std::fmt;
use std::iter::Sum;
use std::ops::{AddAssign, DivAssign, MulAssign, SubAssign};

/// Floating-point scalar used throughout the core.
///
/// Everything in this crate is generic over `Real` so the same models run in
/// `f32` or `f64`; the shipped simulator and CLI fix `f64` (see the aliases at
/// the crate root).
pub trait Real:
    num_traits::Float
    + num_traits::FloatConst
    + num_traits::FromPrimitive
    + num_traits::ToPrimitive
    + AddAssign
    + SubAssign
    + MulAssign
    + DivAssign
    + Sum
    + fmt::Debug
    + fmt::Display
    + Default
    + Send
    + Sync
    + 'static
{
    /// Lossy conversion from an `f64` literal or parameter.
    fn real(v: f64) -> Self {
        Self::from_f64(v).expect("f64 constant representable in scalar type")
    }

    fn to_f64_lossy(self) -> f64 {
        self.to_f64().expect("scalar convertible to f64")
    }
}

impl Real for f32 {}
impl Real for f64 {}

/// `true` iff every entry is finite.
pub fn all_finite<F: Real>(xs: &[F]) -> bool {
    xs.iter().all(|x| x.is_finite())
}

/// Max-norm of a slice (zero for the empty slice).
pub fn inf_norm<F: Real>(xs: &[F]) -> F {
    xs.iter().fold(F::zero(), |m, &x| m.max(x.abs()))
}

/// Max-norm of the difference of two equally long slices.
pub fn inf_norm_diff<F: Real>(a: &[F], b: &[F]) -> F {
    debug_assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .fold(F::zero(), |m, (&x, &y)| m.max((x - y).abs()))
}

/// Euclidean inner product.
pub fn dot<F: Real>(a: &[F], b: &[F]) -> F {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(&x, &y)| x * y).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn real_conversion_round_trips() {
        assert_eq!(<f64 as Real>::real(1.5), 1.5);
        assert_eq!(<f32 as Real>::real(0.25), 0.25_f32);
    }

    #[test]
    fn norms_and_dot() {
        let a = [1.0_f64, -3.0, 2.0];
        let b = [0.5, 1.0, -1.0];
        assert_eq!(inf_norm(&a), 3.0);
        assert_eq!(dot(&a, &b), 0.5 - 3.0 - 2.0);
        assert_eq!(inf_norm_diff(&a, &a), 0.0);
        assert!(all_finite(&a));
        assert!(!all_finite(&[f64::NAN]));
    }
}
