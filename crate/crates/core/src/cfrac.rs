//! S-, J- and T-shaped continued fractions as finite-depth descriptors.
//!
//! All three expand bottom-up with the innermost tail replaced by 1. Each
//! shape has an adequacy rule giving the highest order whose coefficient the
//! stored levels determine:
//!
//! * S-fraction `1/(1 - a1 t/(1 - a2 t/ ...))` with `K` levels: order `K`.
//! * T-fraction `1/(1 - c0 t - b1 t/(1 - c1 t - b2 t/ ...))` with `K` levels:
//!   order `K`.
//! * J-fraction `1/(1 - d0 t - l1 t^2/(1 - d1 t - l2 t^2/ ...))` with `K`
//!   levels: order `2K`.

use crate::algebra::{Scalar, TruncatedSeries};
use crate::error::{Error, Result};
use crate::hankel_toeplitz::hankel_matrix;
use crate::lbp::discriminant_sqrt;
use crate::report::{Check, ScenarioReport};
use crate::riordan::Matrix;

pub trait ContinuedFraction<S: Scalar>: Sized {
    /// Number of stored levels.
    fn levels(&self) -> usize;

    /// Highest order determined by the stored levels.
    fn valid_order(&self) -> usize;

    /// Levels needed for a given order.
    fn levels_for(order: usize) -> usize;

    fn expand_unchecked(&self, order: usize) -> Result<TruncatedSeries<S>>;

    fn expand(&self, order: usize) -> Result<TruncatedSeries<S>> {
        if self.valid_order() < order {
            return Err(Error::InsufficientLevels {
                order,
                needed: Self::levels_for(order),
                have: self.levels(),
            });
        }
        self.expand_unchecked(order)
    }
}

/// Repeats `prefix` then cycles `period` until `len` values exist.
pub fn cycled<S: Clone>(prefix: &[S], period: &[S], len: usize) -> Vec<S> {
    prefix
        .iter()
        .cloned()
        .chain(period.iter().cloned().cycle())
        .take(len)
        .collect()
}

#[derive(Clone, Debug, PartialEq)]
pub struct SFraction<S> {
    pub alphas: Vec<S>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct JFraction<S> {
    /// `d_0, d_1, ...` from the `1 - d_k t` denominators.
    pub diag: Vec<S>,
    /// `l_1, l_2, ...` from the `l_k t^2` numerators.
    pub sub: Vec<S>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct TFraction<S> {
    /// `c_0, c_1, ...` from the `1 - c_k t` denominators.
    pub diag: Vec<S>,
    /// `b_1, b_2, ...` from the `b_k t` numerators.
    pub num: Vec<S>,
}

impl<S: Scalar> SFraction<S> {
    /// `alpha = (c, b, b+c, b, b+c, ...)`, the S-fraction of the LBP moments.
    pub fn lbp(b: &S, c: &S, levels: usize) -> Self {
        Self {
            alphas: cycled(std::slice::from_ref(c), &[b.clone(), b.clone() + c.clone()], levels),
        }
    }
}

impl<S: Scalar> ContinuedFraction<S> for SFraction<S> {
    fn levels(&self) -> usize {
        self.alphas.len()
    }

    fn valid_order(&self) -> usize {
        self.alphas.len()
    }

    fn levels_for(order: usize) -> usize {
        order
    }

    fn expand_unchecked(&self, order: usize) -> Result<TruncatedSeries<S>> {
        let one = TruncatedSeries::one(order);
        let t = TruncatedSeries::t(order);
        let mut tail = one.clone();
        for a in self.alphas.iter().rev() {
            tail = (&one - &(&t * &tail).scale(a)).recip()?;
        }
        Ok(tail)
    }
}

impl<S: Scalar> JFraction<S> {
    /// `d = (c, 2b+c, 2b+c, ...)`, `l = (bc, b(b+c), b(b+c), ...)`.
    pub fn lbp(b: &S, c: &S, levels: usize) -> Self {
        let d = S::from_i64(2) * b.clone() + c.clone();
        let l = b.clone() * (b.clone() + c.clone());
        Self {
            diag: cycled(std::slice::from_ref(c), &[d], levels),
            sub: cycled(&[b.clone() * c.clone()], &[l], levels),
        }
    }

    /// `prod_k l_1^n l_2^(n-1) ... l_n`, the Hankel determinant `h_n` that
    /// the coefficients determine.
    pub fn hankel_product(&self, n: usize) -> S {
        (1..=n).fold(S::one(), |acc, k| acc * self.sub[k - 1].pow((n + 1 - k) as u32))
    }
}

impl<S: Scalar> ContinuedFraction<S> for JFraction<S> {
    fn levels(&self) -> usize {
        self.diag.len().min(self.sub.len())
    }

    fn valid_order(&self) -> usize {
        2 * self.levels()
    }

    fn levels_for(order: usize) -> usize {
        order.div_ceil(2)
    }

    fn expand_unchecked(&self, order: usize) -> Result<TruncatedSeries<S>> {
        let one = TruncatedSeries::one(order);
        let t = TruncatedSeries::t(order);
        let t2 = &t * &t;
        let mut tail = one.clone();
        for k in (0..self.levels()).rev() {
            let lin = TruncatedSeries::new(vec![S::one(), -self.diag[k].clone()], order);
            tail = (&lin - &(&t2 * &tail).scale(&self.sub[k])).recip()?;
        }
        Ok(tail)
    }
}

impl<S: Scalar> TFraction<S> {
    /// Constant T-fraction `1/(1 - ct - bt/(1 - ct - bt/ ...))`.
    pub fn constant(b: &S, c: &S, levels: usize) -> Self {
        Self {
            diag: vec![c.clone(); levels],
            num: vec![b.clone(); levels],
        }
    }
}

impl<S: Scalar> ContinuedFraction<S> for TFraction<S> {
    fn levels(&self) -> usize {
        self.diag.len().min(self.num.len())
    }

    fn valid_order(&self) -> usize {
        self.levels()
    }

    fn levels_for(order: usize) -> usize {
        order
    }

    fn expand_unchecked(&self, order: usize) -> Result<TruncatedSeries<S>> {
        let one = TruncatedSeries::one(order);
        let t = TruncatedSeries::t(order);
        let mut tail = one.clone();
        for k in (0..self.levels()).rev() {
            let lin = TruncatedSeries::new(vec![S::one(), -self.diag[k].clone()], order);
            tail = (&lin - &(&t * &tail).scale(&self.num[k])).recip()?;
        }
        Ok(tail)
    }
}

/// `mu~(t) = (1 - ct - sqrt(1 - 2(2b+c)t + c^2 t^2)) / (2bt)`.
pub fn tfraction_closed_form<S: Scalar>(b: &S, c: &S, order: usize) -> Result<TruncatedSeries<S>> {
    let inv = (S::from_i64(2) * b.clone()).inv().ok_or(Error::ZeroParameter("b"))?;
    let root = discriminant_sqrt(b, c, order + 1)?;
    let lin = TruncatedSeries::new(vec![S::one(), -c.clone()], order + 1);
    Ok((&lin - &root).div_t()?.scale(&inv))
}

/// The same series as the fixed point of `u = 1/(1 - ct - btu)`, iterated;
/// needs no square root, so it works in any scalar ring.
pub fn tfraction_by_iteration<S: Scalar>(b: &S, c: &S, order: usize) -> Result<TruncatedSeries<S>> {
    let lin = TruncatedSeries::new(vec![S::one(), -c.clone()], order);
    let bt = TruncatedSeries::monomial(1, b.clone(), order);
    let mut u = TruncatedSeries::one(order);
    // each pass fixes one more coefficient
    for _ in 0..=order {
        u = (&lin - &(&bt * &u)).recip()?;
    }
    Ok(u)
}

/// J-fraction coefficients from moments by Hankel determinant ratios.
///
/// With `H_n = det(mu_{i+j})_{0..n}` and `X_n` the same determinant with its
/// last column shifted by one, `l_n = H_n H_{n-2} / H_{n-1}^2` and
/// `d_n = X_n / H_n - X_{n-1} / H_{n-1}`. `depth` levels (`d_0..d_{depth-1}`,
/// `l_1..l_depth`) need `mu_0..=mu_{2 depth}` and reproduce them on expansion.
pub fn jfraction_from_moments<S: Scalar>(mu: &[S], depth: usize) -> Result<JFraction<S>> {
    let needed = 2 * depth + 1;
    if mu.len() < needed {
        return Err(Error::InsufficientMoments { needed, have: mu.len() });
    }
    let h: Vec<S> = (0..=depth).map(|n| hankel_matrix(mu, n, 0).determinant()).collect();
    let h_inv: Vec<S> = h[..depth]
        .iter()
        .enumerate()
        .map(|(n, v)| v.inv().ok_or(Error::VanishingHankel(n)))
        .collect::<Result<_>>()?;
    let ratio: Vec<S> = (0..depth)
        .map(|n| {
            let x = Matrix::from_fn(n + 1, |i, j| mu[i + j + usize::from(j == n)].clone()).determinant();
            x * h_inv[n].clone()
        })
        .collect();
    let diag = (0..depth)
        .map(|n| {
            if n == 0 {
                ratio[0].clone()
            } else {
                ratio[n].clone() - ratio[n - 1].clone()
            }
        })
        .collect();
    let sub = (1..=depth)
        .map(|n| {
            let prev2 = if n >= 2 { h[n - 2].clone() } else { S::one() };
            h[n].clone() * prev2 * h_inv[n - 1].clone() * h_inv[n - 1].clone()
        })
        .collect();
    Ok(JFraction { diag, sub })
}

/// Checks that `u` (T-shape, diag `c`, numerators 1) and `v` (S-shape,
/// `alpha = (c+1, 1, c+1, 1, ...)`) expand to the same series.
pub fn verify_uv_equality<S: Scalar>(c: &S, order: usize) -> ScenarioReport {
    let mut report = ScenarioReport::new("uv-equality");
    let u = TFraction::constant(&S::one(), c, order).expand(order);
    let v = SFraction {
        alphas: cycled(&[], &[c.clone() + S::one(), S::one()], order),
    }
    .expand(order);
    match (u, v) {
        (Ok(u), Ok(v)) => report.push(Check::sequences("u = v", u.coeffs(), v.coeffs())),
        (Err(e), _) | (_, Err(e)) => report.push(Check::error("u = v", &e)),
    }
    report
}
