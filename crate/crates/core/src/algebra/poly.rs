//! Dense univariate polynomials in the formal variable `x`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::scalar::{Rational, Scalar};

/// Polynomial with coefficients in ascending powers of `x`, trailing zeros
/// trimmed. The zero polynomial has no coefficients.
#[derive(Clone, PartialEq)]
pub struct Poly<S> {
    coeffs: Vec<S>,
}

impl<S: Scalar> Poly<S> {
    pub fn new(mut coeffs: Vec<S>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn constant(c: S) -> Self {
        Self::new(vec![c])
    }

    pub fn x() -> Self {
        Self::new(vec![S::zero(), S::one()])
    }

    /// `coeff * x^k`.
    pub fn monomial(k: usize, coeff: S) -> Self {
        let mut v = vec![S::zero(); k + 1];
        v[k] = coeff;
        Self::new(v)
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> S {
        self.coeffs.get(k).cloned().unwrap_or_else(S::zero)
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&S> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    pub fn scale(&self, s: &S) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.clone() * s.clone()).collect())
    }

    pub fn evaluate(&self, x: &S) -> S {
        self.coeffs
            .iter()
            .rev()
            .fold(S::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    /// Coefficients padded with zeros to length `n + 1`.
    pub fn padded(&self, n: usize) -> Vec<S> {
        (0..=n).map(|k| self.coeff(k)).collect()
    }
}

impl<S: Scalar> Add for Poly<S> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl<S: Scalar> Sub for Poly<S> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<S: Scalar> Neg for Poly<S> {
    type Output = Self;
    fn neg(self) -> Self {
        Self {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl<S: Scalar> Mul for Poly<S> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return Self::new(Vec::new());
        }
        let mut out = vec![S::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::new(out)
    }
}

/// Polynomials over a field form a ring whose units are the nonzero
/// constants, which is all the series machinery needs.
impl<S: Scalar> Scalar for Poly<S> {
    fn zero() -> Self {
        Self::new(Vec::new())
    }

    fn one() -> Self {
        Self::constant(S::one())
    }

    fn from_rational(q: &Rational) -> Self {
        Self::constant(S::from_rational(q))
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn inv(&self) -> Option<Self> {
        match self.coeffs.as_slice() {
            [c] => c.inv().map(Self::constant),
            _ => None,
        }
    }
}

impl<S: Scalar> fmt::Display for Poly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*x")?,
                _ => write!(f, "({c})*x^{k}")?,
            }
        }
        Ok(())
    }
}

impl<S: Scalar> fmt::Debug for Poly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[{self}]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::int;

    #[test]
    fn arithmetic_and_trim() {
        let p = Poly::new(vec![int(1), int(1)]);
        let q = Poly::new(vec![int(-1), int(1)]);
        let pq = p.clone() * q;
        assert_eq!(pq.coeffs(), &[int(-1), int(0), int(1)]);
        assert_eq!((pq.clone() - pq).degree(), None);
        assert_eq!(p.evaluate(&int(3)), int(4));
        assert!(Poly::<Rational>::x().inv().is_none());
        assert_eq!(
            Poly::constant(int(2)).inv(),
            Some(Poly::constant(crate::algebra::scalar::rat(1, 2)))
        );
    }
}
