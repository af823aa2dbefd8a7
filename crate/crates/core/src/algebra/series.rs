//! Truncated formal power series in `t`.
//!
//! A series of order `N` carries exact coefficients for `t^0..=t^N`; nothing
//! past `N` is ever read. Binary operations return the smaller of the two
//! operand orders.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

use super::scalar::{Rational, Scalar};

#[derive(Clone, PartialEq)]
pub struct TruncatedSeries<S> {
    coeffs: Vec<S>,
}

impl<S: Scalar> TruncatedSeries<S> {
    /// Series of order `order` from a coefficient prefix, zero padded or
    /// truncated as needed.
    pub fn new(mut coeffs: Vec<S>, order: usize) -> Self {
        coeffs.resize(order + 1, S::zero());
        Self { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::constant(S::one(), order)
    }

    pub fn constant(c: S, order: usize) -> Self {
        Self::new(vec![c], order)
    }

    /// The formal variable `t`.
    pub fn t(order: usize) -> Self {
        Self::monomial(1, S::one(), order)
    }

    pub fn monomial(k: usize, coeff: S, order: usize) -> Self {
        let mut v = vec![S::zero(); order + 1];
        if k <= order {
            v[k] = coeff;
        }
        Self { coeffs: v }
    }

    /// Builds a series from a function of the index.
    pub fn from_fn(order: usize, f: impl FnMut(usize) -> S) -> Self {
        Self {
            coeffs: (0..=order).map(f).collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<S> {
        self.coeffs
    }

    pub fn coeff(&self, n: usize) -> &S {
        &self.coeffs[n]
    }

    /// Same series with a lower truncation order.
    pub fn truncate(&self, order: usize) -> Self {
        Self::new(
            self.coeffs[..=order.min(self.order())].to_vec(),
            order.min(self.order()),
        )
    }

    pub fn scale(&self, s: &S) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| c.clone() * s.clone()).collect(),
        }
    }

    /// Multiplication by `t`, same order.
    pub fn mul_t(&self) -> Self {
        let mut v = Vec::with_capacity(self.coeffs.len());
        v.push(S::zero());
        v.extend_from_slice(&self.coeffs[..self.order()]);
        Self { coeffs: v }
    }

    /// Division by `t`; requires a zero constant term and loses one order.
    pub fn div_t(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NonzeroInnerConstant);
        }
        if self.order() == 0 {
            return Err(Error::OrderTooSmall { needed: 1, have: 0 });
        }
        Ok(Self {
            coeffs: self.coeffs[1..].to_vec(),
        })
    }

    /// Multiplicative inverse; the constant term must be a unit.
    pub fn recip(&self) -> Result<Self> {
        let inv0 = self.coeffs[0].inv().ok_or(Error::NonInvertibleConstant)?;
        let n = self.order();
        let mut out: Vec<S> = Vec::with_capacity(n + 1);
        out.push(inv0.clone());
        for k in 1..=n {
            let mut acc = S::zero();
            for j in 1..=k {
                if !self.coeffs[j].is_zero() {
                    acc = acc + self.coeffs[j].clone() * out[k - j].clone();
                }
            }
            out.push(-(acc * inv0.clone()));
        }
        Ok(Self { coeffs: out })
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.recip()?)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.order());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// `self(inner(t))`; `inner` must have zero constant term.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::NonzeroInnerConstant);
        }
        let order = self.order().min(inner.order());
        let inner = inner.truncate(order);
        let mut acc = Self::zero(order);
        for k in (0..=order).rev() {
            acc = &(&acc * &inner) + &Self::constant(self.coeffs[k].clone(), order);
        }
        Ok(acc)
    }

    /// Compositional inverse, solved order by order from `f(g(t)) = t`.
    pub fn reversion(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() || self.order() == 0 {
            return Err(Error::NotReversible);
        }
        let lin_inv = self.coeffs[1].inv().ok_or(Error::NotReversible)?;
        let n = self.order();
        let mut g = Self::monomial(1, lin_inv.clone(), n);
        for k in 2..=n {
            let err = self.compose(&g)?.coeffs[k].clone();
            g.coeffs[k] = -(err * lin_inv.clone());
        }
        Ok(g)
    }

    /// Square root with constant term 1.
    pub fn sqrt(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::SqrtConstantTerm);
        }
        let half = S::from_rational(&Rational::new(1.into(), 2.into()));
        let n = self.order();
        let mut s: Vec<S> = Vec::with_capacity(n + 1);
        s.push(S::one());
        for k in 1..=n {
            let mut acc = self.coeffs[k].clone();
            for j in 1..k {
                acc = acc - s[j].clone() * s[k - j].clone();
            }
            s.push(acc * half.clone());
        }
        Ok(Self { coeffs: s })
    }

    /// Coefficientwise map into another scalar ring.
    pub fn map<T: Scalar>(&self, f: impl FnMut(&S) -> T) -> TruncatedSeries<T> {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }
}

impl<S: Scalar> Add for &TruncatedSeries<S> {
    type Output = TruncatedSeries<S>;
    fn add(self, rhs: Self) -> TruncatedSeries<S> {
        let n = self.order().min(rhs.order());
        TruncatedSeries::from_fn(n, |k| self.coeffs[k].clone() + rhs.coeffs[k].clone())
    }
}

impl<S: Scalar> Sub for &TruncatedSeries<S> {
    type Output = TruncatedSeries<S>;
    fn sub(self, rhs: Self) -> TruncatedSeries<S> {
        let n = self.order().min(rhs.order());
        TruncatedSeries::from_fn(n, |k| self.coeffs[k].clone() - rhs.coeffs[k].clone())
    }
}

impl<S: Scalar> Mul for &TruncatedSeries<S> {
    type Output = TruncatedSeries<S>;
    fn mul(self, rhs: Self) -> TruncatedSeries<S> {
        let n = self.order().min(rhs.order());
        let mut out = vec![S::zero(); n + 1];
        for (i, a) in self.coeffs[..=n].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs[..=n - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = out[i + j].clone() + a.clone() * b.clone();
                }
            }
        }
        TruncatedSeries { coeffs: out }
    }
}

impl<S: Scalar> Neg for &TruncatedSeries<S> {
    type Output = TruncatedSeries<S>;
    fn neg(self) -> TruncatedSeries<S> {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

impl<S: fmt::Display> fmt::Debug for TruncatedSeries<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries(self.coeffs.iter().map(|c| c.to_string()))
            .finish()?;
        write!(f, " + O(t^{})", self.coeffs.len())
    }
}
