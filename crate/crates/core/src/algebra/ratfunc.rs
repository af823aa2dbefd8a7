//! The field `Q(b, c)` of rational functions in the recurrence parameters.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::bivar::BivarPoly;
use super::scalar::{Rational, Scalar};

/// A quotient of two [`BivarPoly`]s in canonical form.
///
/// Canonical form: numerator and denominator are coprime, both have integer
/// coefficients whose joint gcd is 1, and the leading coefficient of the
/// denominator (lexicographic, `b > c`) is positive. Zero is `0/1`.
/// Equality is still decided by cross-multiplication so it never relies on
/// the reduction.
#[derive(Clone)]
pub struct RationalFunction {
    num: BivarPoly,
    den: BivarPoly,
}

impl RationalFunction {
    /// Builds `num / den`; `None` when `den` is zero.
    pub fn new(num: BivarPoly, den: BivarPoly) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        Some(Self::normalized(num, den))
    }

    pub fn from_poly(p: BivarPoly) -> Self {
        Self::normalized(p, BivarPoly::one())
    }

    /// The symbolic parameter `b`.
    pub fn b() -> Self {
        Self::from_poly(BivarPoly::var_b())
    }

    /// The symbolic parameter `c`.
    pub fn c() -> Self {
        Self::from_poly(BivarPoly::var_c())
    }

    pub fn numer(&self) -> &BivarPoly {
        &self.num
    }

    pub fn denom(&self) -> &BivarPoly {
        &self.den
    }

    /// The underlying polynomial when the denominator is a constant.
    pub fn as_poly(&self) -> Option<BivarPoly> {
        self.den.as_constant().map(|d| self.num.scale(&d.recip()))
    }

    /// Evaluates at rational `(b, c)`; `None` on a pole.
    pub fn evaluate(&self, b: &Rational, c: &Rational) -> Option<Rational> {
        let d = self.den.evaluate(b, c);
        if Zero::is_zero(&d) {
            None
        } else {
            Some(self.num.evaluate(b, c) / d)
        }
    }

    fn normalized(mut num: BivarPoly, mut den: BivarPoly) -> Self {
        if num.is_zero() {
            return Self {
                num,
                den: BivarPoly::one(),
            };
        }
        if den.as_constant().is_none() && num.as_constant().is_none() {
            let g = BivarPoly::gcd(&num, &den);
            if g.as_constant().is_none() {
                num = num.div_exact(&g).expect("gcd divides numerator");
                den = den.div_exact(&g).expect("gcd divides denominator");
            }
        }
        let l = num.denominator_lcm().lcm(&den.denominator_lcm());
        if !l.is_one() {
            let s = Rational::from_integer(l);
            num = num.scale(&s);
            den = den.scale(&s);
        }
        let mut g = num.numerator_gcd().gcd(&den.numerator_gcd());
        if den.leading().is_some_and(|(_, lc)| lc.is_negative()) {
            g = -g;
        }
        if g != BigInt::one() {
            let s = Rational::new(BigInt::one(), g);
            num = num.scale(&s);
            den = den.scale(&s);
        }
        Self { num, den }
    }
}

impl PartialEq for RationalFunction {
    fn eq(&self, other: &Self) -> bool {
        if self.den == other.den {
            return self.num == other.num;
        }
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for RationalFunction {}

impl<'a> Add<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.den == rhs.den {
            return RationalFunction::normalized(&self.num + &rhs.num, self.den.clone());
        }
        RationalFunction::normalized(&(&self.num * &rhs.den) + &(&rhs.num * &self.den), &self.den * &rhs.den)
    }
}

impl<'a> Sub<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        if self.num.is_zero() || rhs.num.is_zero() {
            return RationalFunction::zero();
        }
        RationalFunction::normalized(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Add for RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl Sub for RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: Self) -> Self {
        &self - &rhs
    }
}

impl Mul for RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> Self {
        -&self
    }
}

impl Scalar for RationalFunction {
    fn zero() -> Self {
        Self {
            num: BivarPoly::zero(),
            den: BivarPoly::one(),
        }
    }

    fn one() -> Self {
        Self {
            num: BivarPoly::one(),
            den: BivarPoly::one(),
        }
    }

    fn from_rational(q: &Rational) -> Self {
        Self::normalized(BivarPoly::constant(q.clone()), BivarPoly::one())
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn inv(&self) -> Option<Self> {
        if self.num.is_zero() {
            None
        } else {
            Some(Self::normalized(self.den.clone(), self.num.clone()))
        }
    }

    fn denominator(&self) -> Self {
        Self::from_poly(self.den.clone())
    }

    fn denominator_lcm(a: &Self, b: &Self) -> Self {
        let (p, q) = (&a.num, &b.num);
        if p.as_constant().is_some() {
            return b.clone();
        }
        if q.as_constant().is_some() {
            return a.clone();
        }
        let g = BivarPoly::gcd(p, q);
        Self::from_poly(&p.div_exact(&g).expect("gcd divides") * q)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.as_constant().is_some_and(|d| One::is_one(&d)) {
            return write!(f, "{}", self.num);
        }
        let wrap = |p: &BivarPoly| {
            if p.num_terms() > 1 {
                format!("({p})")
            } else {
                p.to_string()
            }
        };
        write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunction({self})")
    }
}
