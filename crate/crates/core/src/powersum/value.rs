use std::hash::Hash;

use num_bigint::BigUint;

/// Arithmetic the power-sum searches need from their integer type.
///
/// `u128` is used when every intermediate is provably below `2^128`,
/// otherwise [`BigUint`]. Callers never subtract past zero.
pub(crate) trait PowValue: Clone + Ord + Hash + Send + Sync {
    fn from_big(v: BigUint) -> Self;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn add_small(&self, s: u64) -> Self;
    fn mul_small(&self, s: u64) -> Self;
}

impl PowValue for u128 {
    fn from_big(v: BigUint) -> Self {
        u128::try_from(v).expect("value exceeds the u128 fast path")
    }

    #[inline]
    fn add(&self, other: &Self) -> Self {
        self + other
    }

    #[inline]
    fn sub(&self, other: &Self) -> Self {
        self - other
    }

    #[inline]
    fn add_small(&self, s: u64) -> Self {
        self + s as u128
    }

    #[inline]
    fn mul_small(&self, s: u64) -> Self {
        self * s as u128
    }
}

impl PowValue for BigUint {
    fn from_big(v: BigUint) -> Self {
        v
    }

    fn add(&self, other: &Self) -> Self {
        self + other
    }

    fn sub(&self, other: &Self) -> Self {
        self - other
    }

    fn add_small(&self, s: u64) -> Self {
        self + s
    }

    fn mul_small(&self, s: u64) -> Self {
        self * s
    }
}
