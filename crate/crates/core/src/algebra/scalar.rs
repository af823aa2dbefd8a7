//! The scalar ring abstraction shared by every exact computation.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational numbers over arbitrary-precision integers.
///
/// `BigRational` keeps itself in lowest terms with a positive denominator,
/// so structural equality is value equality.
pub type Rational = BigRational;

/// An exact commutative ring with enough structure for series, Riordan and
/// determinant work.
///
/// Every instance must contain the rationals: `from_rational` is how integer
/// and rational constants (binomials, the `1/2` in a square root) enter a
/// computation. `inv` returns `None` for non-units.
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn from_rational(q: &Rational) -> Self;
    fn is_zero(&self) -> bool;
    fn inv(&self) -> Option<Self>;

    fn from_i64(n: i64) -> Self {
        Self::from_rational(&Rational::from_integer(BigInt::from(n)))
    }

    fn from_bigint(n: &BigInt) -> Self {
        Self::from_rational(&Rational::from_integer(n.clone()))
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn checked_div(&self, rhs: &Self) -> Option<Self> {
        rhs.inv().map(|r| self.clone() * r)
    }

    fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            e >>= 1;
            if e > 0 {
                base = base.clone() * base;
            }
        }
        acc
    }

    /// A nonzero multiplier that makes `self` integral: the denominator of a
    /// rational, the denominator polynomial of a rational function.
    fn denominator(&self) -> Self {
        Self::one()
    }

    /// Least common multiple of two integral denominators.
    fn denominator_lcm(a: &Self, b: &Self) -> Self {
        if a.is_one() {
            b.clone()
        } else if b.is_one() {
            a.clone()
        } else {
            a.clone() * b.clone()
        }
    }
}

impl Scalar for Rational {
    fn zero() -> Self {
        Zero::zero()
    }

    fn one() -> Self {
        One::one()
    }

    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }

    fn denominator(&self) -> Self {
        Rational::from_integer(self.denom().clone())
    }

    fn denominator_lcm(a: &Self, b: &Self) -> Self {
        Rational::from_integer(a.to_integer().abs().lcm(&b.to_integer().abs()))
    }
}

/// Parses `"3"`, `"-7/2"` style rationals.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Rational::new(n, d))
            }
        }
        None => s.parse::<BigInt>().ok().map(Rational::from_integer),
    }
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}
