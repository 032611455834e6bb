//! Integer types usable as exact counts.

use std::fmt::{Debug, Display};

use num_integer::Integer;
use num_traits::{CheckedAdd, CheckedDiv, CheckedMul, CheckedSub, FromPrimitive, ToPrimitive};

/// An exact, overflow-checked unsigned count: `u64`, `u128` or `BigUint`.
pub trait Count:
    Clone
    + Debug
    + Display
    + Integer
    + CheckedAdd
    + CheckedSub
    + CheckedMul
    + CheckedDiv
    + FromPrimitive
    + ToPrimitive
    + Send
    + Sync
{
}

impl<T> Count for T where
    T: Clone
        + Debug
        + Display
        + Integer
        + CheckedAdd
        + CheckedSub
        + CheckedMul
        + CheckedDiv
        + FromPrimitive
        + ToPrimitive
        + Send
        + Sync
{
}

/// Lifts a machine integer into `T`.
pub fn lift<T: Count>(x: usize) -> Option<T> {
    T::from_usize(x)
}

pub fn add<T: Count>(a: &T, b: &T) -> Option<T> {
    a.checked_add(b)
}

pub fn mul<T: Count>(a: &T, b: &T) -> Option<T> {
    a.checked_mul(b)
}

/// `C(n, r)` with checked arithmetic.
pub fn binomial<T: Count>(n: usize, r: usize) -> Option<T> {
    if r > n {
        return Some(T::zero());
    }
    let r = r.min(n - r);
    let mut acc = T::one();
    for i in 0..r {
        // acc = C(n, i); (i + 1) divides acc * (n - i), split it so the
        // product never exceeds C(n, i + 1)
        let d: T = lift(i + 1)?;
        let g = acc.gcd(&d);
        let top: T = lift::<T>(n - i)?.checked_div(&d.checked_div(&g)?)?;
        acc = acc.checked_div(&g)?.checked_mul(&top)?;
    }
    Some(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    #[test]
    fn binomials() {
        assert_eq!(binomial::<u64>(5, 2), Some(10));
        assert_eq!(binomial::<u64>(3, 5), Some(0));
        assert_eq!(binomial::<u64>(64, 32), Some(1_832_624_140_942_590_534));
        assert_eq!(binomial::<u64>(70, 35), None);
        assert_eq!(
            binomial::<BigUint>(70, 35).unwrap().to_string(),
            "112186277816662845432"
        );
        assert_eq!(binomial::<u128>(70, 35), Some(112_186_277_816_662_845_432));
    }
}
