//! Coefficient arithmetic for the eliminators. Each context fixes a ring;
//! operations return `None` on overflow so a bounded fast path can escalate
//! to unbounded integers.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub(crate) trait Arith {
    type E: Clone + Debug;

    fn from_i64(&self, x: i64) -> Self::E;
    fn is_zero(&self, x: &Self::E) -> bool;
    /// Multiplicative inverse, when `x` is a unit.
    fn inverse(&self, x: &Self::E) -> Option<Self::E>;
    fn mul(&self, a: &Self::E, b: &Self::E) -> Option<Self::E>;
    /// `x - f * y`.
    fn sub_mul(&self, x: &Self::E, f: &Self::E, y: &Self::E) -> Option<Self::E>;
    /// Integer representative (only meaningful for the integer rings).
    fn lift(&self, x: &Self::E) -> BigInt;
}

/// Integers in `i64` with overflow detection.
pub(crate) struct CheckedZ;

impl Arith for CheckedZ {
    type E = i64;

    fn from_i64(&self, x: i64) -> i64 {
        x
    }
    fn is_zero(&self, x: &i64) -> bool {
        *x == 0
    }
    fn inverse(&self, x: &i64) -> Option<i64> {
        (x.abs() == 1).then_some(*x)
    }
    fn mul(&self, a: &i64, b: &i64) -> Option<i64> {
        a.checked_mul(*b)
    }
    fn sub_mul(&self, x: &i64, f: &i64, y: &i64) -> Option<i64> {
        x.checked_sub(f.checked_mul(*y)?)
    }
    fn lift(&self, x: &i64) -> BigInt {
        BigInt::from(*x)
    }
}

/// Unbounded integers.
pub(crate) struct BigZ;

impl Arith for BigZ {
    type E = BigInt;

    fn from_i64(&self, x: i64) -> BigInt {
        BigInt::from(x)
    }
    fn is_zero(&self, x: &BigInt) -> bool {
        x.is_zero()
    }
    fn inverse(&self, x: &BigInt) -> Option<BigInt> {
        x.abs().is_one().then(|| x.clone())
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> Option<BigInt> {
        Some(a * b)
    }
    fn sub_mul(&self, x: &BigInt, f: &BigInt, y: &BigInt) -> Option<BigInt> {
        Some(x - f * y)
    }
    fn lift(&self, x: &BigInt) -> BigInt {
        x.clone()
    }
}

/// The field with `p` elements, `p` prime and below 2³².
pub(crate) struct Fp {
    pub p: u64,
}

impl Fp {
    fn pow(&self, mut b: u64, mut e: u64) -> u64 {
        let mut acc = 1u64;
        b %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * b % self.p;
            }
            b = b * b % self.p;
            e >>= 1;
        }
        acc
    }
}

impl Arith for Fp {
    type E = u32;

    fn from_i64(&self, x: i64) -> u32 {
        x.rem_euclid(self.p as i64) as u32
    }
    fn is_zero(&self, x: &u32) -> bool {
        *x == 0
    }
    fn inverse(&self, x: &u32) -> Option<u32> {
        (*x != 0).then(|| self.pow(*x as u64, self.p - 2) as u32)
    }
    fn mul(&self, a: &u32, b: &u32) -> Option<u32> {
        Some((*a as u64 * *b as u64 % self.p) as u32)
    }
    fn sub_mul(&self, x: &u32, f: &u32, y: &u32) -> Option<u32> {
        let fy = *f as u64 * *y as u64 % self.p;
        Some(((*x as u64 + self.p - fy) % self.p) as u32)
    }
    fn lift(&self, x: &u32) -> BigInt {
        BigInt::from(*x)
    }
}

/// The rationals.
pub(crate) struct Q;

impl Arith for Q {
    type E = BigRational;

    fn from_i64(&self, x: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(x))
    }
    fn is_zero(&self, x: &BigRational) -> bool {
        x.is_zero()
    }
    fn inverse(&self, x: &BigRational) -> Option<BigRational> {
        (!x.is_zero()).then(|| x.recip())
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> Option<BigRational> {
        Some(a * b)
    }
    fn sub_mul(&self, x: &BigRational, f: &BigRational, y: &BigRational) -> Option<BigRational> {
        Some(x - f * y)
    }
    fn lift(&self, x: &BigRational) -> BigInt {
        x.to_integer()
    }
}

pub(crate) fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

pub(crate) fn to_u64(x: &BigInt) -> crate::error::Result<u64> {
    x.to_u64().ok_or_else(|| crate::error::Error::Overflow(x.to_string()))
}
