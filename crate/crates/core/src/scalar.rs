//! Scalar abstraction shared by the polynomial and optimization code.
//!
//! Exact checks instantiate [`Scalar`] with [`crate::Rational`]; numerical
//! sweeps use `f64` or `f32`. Integer rings (`BigInt`, `i128`) also satisfy the
//! ring-only bound [`Ring`] and are used for scaled grid evaluation.

use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, Signed};

/// Commutative ring with ordering, enough for homogeneous polynomial evaluation.
pub trait Ring: Clone + Debug + Display + Num + Signed + PartialOrd {}

impl<T> Ring for T where T: Clone + Debug + Display + Num + Signed + PartialOrd {}

/// An ordered field usable as a polynomial coefficient.
pub trait Scalar: Ring + FromPrimitive {
    /// Lossy conversion for reporting.
    fn to_f64_lossy(&self) -> f64;

    fn from_i64(v: i64) -> Self {
        <Self as FromPrimitive>::from_i64(v).expect("integer representable in scalar")
    }
}

impl Scalar for f64 {
    fn to_f64_lossy(&self) -> f64 {
        *self
    }
}

impl Scalar for f32 {
    fn to_f64_lossy(&self) -> f64 {
        f64::from(*self)
    }
}

impl Scalar for BigRational {
    fn to_f64_lossy(&self) -> f64 {
        use num_traits::ToPrimitive;
        self.to_f64().unwrap_or(f64::NAN)
    }

    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
}

/// `base^exp` by repeated squaring; works for any ring including big integers.
pub fn pow<T: Clone + Num>(base: &T, mut exp: u32) -> T {
    let mut acc = T::one();
    let mut sq = base.clone();
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * sq.clone();
        }
        exp >>= 1;
        if exp > 0 {
            sq = sq.clone() * sq;
        }
    }
    acc
}

/// Binomial coefficient as a scalar, built from exact integer arithmetic.
pub fn binomial<T: Scalar>(n: u32, k: u32) -> T {
    if k > n {
        return T::zero();
    }
    let k = k.min(n - k);
    let mut c = BigInt::from(1u32);
    for i in 0..k {
        c = c * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    use num_traits::ToPrimitive;
    match c.to_i64() {
        Some(v) => <T as Scalar>::from_i64(v),
        None => T::from_f64(c.to_f64().unwrap_or(f64::INFINITY)).expect("binomial overflow"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pow_matches_repeated_product() {
        assert_eq!(pow(&3i128, 5), 243);
        assert_eq!(pow(&BigInt::from(2), 100), BigInt::from(1u8) << 100);
        assert_eq!(pow(&7.0f64, 0), 1.0);
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial::<f64>(5, 2), 10.0);
        assert_eq!(binomial::<BigRational>(8, 0), BigRational::from_integer(1.into()));
        assert_eq!(binomial::<f64>(8, 8), 1.0);
        assert_eq!(binomial::<f64>(10, 3), 120.0);
    }
}
