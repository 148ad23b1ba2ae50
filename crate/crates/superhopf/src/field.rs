//! Scalar traits shared by the linear algebra and structure-constant code.
//!
//! Everything downstream is generic over [`Field`]; code that needs roots of
//! unity (characters, group-likes, presentations) asks for [`RootField`].
//! Only exact fields are meaningful here: every check is an equality test.

use std::fmt::{Debug, Display};
use std::ops::{AddAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub trait Field:
    Clone
    + PartialEq
    + Debug
    + Display
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
    + Send
    + Sync
    + 'static
{
    fn mul_ref(&self, rhs: &Self) -> Self;

    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self>;

    fn from_i64(n: i64) -> Self;

    fn from_ratio(n: i64, d: i64) -> Self {
        Self::from_i64(n).mul_ref(&Self::from_i64(d).inv().expect("zero denominator"))
    }

    /// `self += a * b`
    fn add_mul(&mut self, a: &Self, b: &Self) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        let p = a.mul_ref(b);
        *self += &p;
    }

    fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_ref(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_ref(&base);
            }
        }
        acc
    }

    /// Integer power, negative exponents through the inverse.
    fn powi(&self, e: i64) -> Option<Self> {
        if e >= 0 {
            Some(self.pow(e as u64))
        } else {
            self.inv().map(|i| i.pow(e.unsigned_abs()))
        }
    }
}

/// A field that may contain roots of unity.
pub trait RootField: Field {
    /// ζ_n^k if the field can represent it.
    fn zeta(n: u64, k: i64) -> Option<Self>;

    /// Least m ≥ 1 with self^m = 1.
    fn unity_order(&self) -> Option<u64>;

    /// Brings a value into the field of conductor `n` (identity where that
    /// notion does not apply).
    fn with_conductor(&self, _n: u64) -> Self {
        self.clone()
    }
}

impl Field for BigRational {
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn from_ratio(n: i64, d: i64) -> Self {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }
}

impl RootField for BigRational {
    fn zeta(n: u64, k: i64) -> Option<Self> {
        let n = n as i64;
        let twice = 2 * k;
        if twice.rem_euclid(n) != 0 {
            return None;
        }
        // ζ_n^k = (-1)^(2k/n)
        if (twice / n).rem_euclid(2) == 0 {
            Some(Self::one())
        } else {
            Some(-Self::one())
        }
    }

    fn unity_order(&self) -> Option<u64> {
        if self.is_one() {
            Some(1)
        } else if (-self.clone()).is_one() {
            Some(2)
        } else {
            None
        }
    }
}

/// Absolute value helper used by display code of rationals.
pub(crate) fn rational_string(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        let sign = if r.is_negative() { "-" } else { "" };
        format!("{}{}/{}", sign, r.numer().abs(), r.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_roots_of_unity() {
        assert_eq!(BigRational::zeta(2, 1), Some(-BigRational::one()));
        assert_eq!(BigRational::zeta(4, 2), Some(-BigRational::one()));
        assert_eq!(BigRational::zeta(4, 1), None);
        assert_eq!(BigRational::from_i64(-1).unity_order(), Some(2));
        assert_eq!(BigRational::from_i64(2).unity_order(), None);
    }

    #[test]
    fn negative_powers() {
        let two = BigRational::from_i64(2);
        assert_eq!(two.powi(-2), Some(BigRational::from_ratio(1, 4)));
        assert_eq!(BigRational::zero().powi(-1), None);
    }
}
