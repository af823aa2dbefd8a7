//! Laurent biorthogonal polynomial families and their moments.
//!
//! A family is fixed by the recurrence
//! `P_n(x) = (x - c_{n-1}) P_{n-1}(x) - b_{n-1} x P_{n-2}(x)` with `P_0 = 1`,
//! `P_1 = x - c_0`. The moment matrix is the inverse of the coefficient
//! array and the moments `mu_n` are its first column.

use std::fmt;

use crate::algebra::combin::{binomial, catalan};
use crate::algebra::{Poly, Rational, Scalar, TruncatedSeries};
use crate::cfrac::{ContinuedFraction, TFraction};
use crate::error::{Error, Result};
use crate::riordan::{LowerTriangularMatrix, RiordanArray};

/// Coefficients of `P_n(x)` in ascending powers of `x`.
pub type PolynomialRow<S> = Poly<S>;

/// A recurrence coefficient sequence: one constant, or a finite pattern
/// cycled forever (`[1, 2]` is `1, 2, 1, 2, ...`), indexed from 0.
#[derive(Clone, Debug, PartialEq)]
pub enum CoefficientSeq<S> {
    Constant(S),
    Periodic(Vec<S>),
}

impl<S: Scalar> CoefficientSeq<S> {
    pub fn get(&self, n: usize) -> &S {
        match self {
            Self::Constant(s) => s,
            Self::Periodic(v) => &v[n % v.len()],
        }
    }

    pub fn as_constant(&self) -> Option<&S> {
        match self {
            Self::Constant(s) => Some(s),
            Self::Periodic(v) if v.iter().all(|x| *x == v[0]) => Some(&v[0]),
            Self::Periodic(_) => None,
        }
    }

    fn values(&self) -> &[S] {
        match self {
            Self::Constant(s) => std::slice::from_ref(s),
            Self::Periodic(v) => v,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct LbpFamily<S> {
    b: CoefficientSeq<S>,
    c: CoefficientSeq<S>,
    order: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MomentRoute {
    /// First column of the inverted coefficient matrix; any family.
    MatrixInverse,
    /// `sum_k binom(2n-k-1, 2n-2k) C_{n-k} b^{n-k} c^k`.
    CatalanSum,
    /// The `k = 0` column of the Lagrange-inversion entry formula.
    Lagrange,
    /// `1 + c t mu~(t)` with `mu~` expanded from the constant T-fraction.
    ShiftedTFraction,
    /// `(c + 2b - c^2 t - c sqrt(1 - 2(2b+c)t + c^2 t^2)) / (2b)`.
    GfExpansion,
}

impl MomentRoute {
    pub const ALL: [MomentRoute; 5] = [
        Self::MatrixInverse,
        Self::CatalanSum,
        Self::Lagrange,
        Self::ShiftedTFraction,
        Self::GfExpansion,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::MatrixInverse => "matrix-inverse",
            Self::CatalanSum => "catalan-sum",
            Self::Lagrange => "lagrange",
            Self::ShiftedTFraction => "shifted-tfraction",
            Self::GfExpansion => "gf-expansion",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|r| r.name() == s)
    }
}

impl fmt::Display for MomentRoute {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Moments `mu_0..=mu_N` tagged with the route that produced them.
#[derive(Clone, Debug, PartialEq)]
pub struct MomentSequence<S> {
    pub values: Vec<S>,
    pub route: MomentRoute,
}

impl<S: Scalar> LbpFamily<S> {
    /// Constant-coefficient family `b_n = b`, `c_n = c`.
    pub fn constant(b: S, c: S, order: usize) -> Result<Self> {
        Self::new(CoefficientSeq::Constant(b), CoefficientSeq::Constant(c), order)
    }

    pub fn new(b: CoefficientSeq<S>, c: CoefficientSeq<S>, order: usize) -> Result<Self> {
        if b.values().is_empty() || b.values().iter().any(Scalar::is_zero) {
            return Err(Error::ZeroParameter("b"));
        }
        if c.values().is_empty() || c.values().iter().any(Scalar::is_zero) {
            return Err(Error::ZeroParameter("c"));
        }
        Ok(Self { b, c, order })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn b_seq(&self) -> &CoefficientSeq<S> {
        &self.b
    }

    pub fn c_seq(&self) -> &CoefficientSeq<S> {
        &self.c
    }

    /// `(b, c)` for a constant family.
    pub fn constants(&self) -> Option<(&S, &S)> {
        Some((self.b.as_constant()?, self.c.as_constant()?))
    }

    fn require_constant(&self, route: &'static str) -> Result<(S, S)> {
        self.constants()
            .map(|(b, c)| (b.clone(), c.clone()))
            .ok_or(Error::RouteInapplicable(route))
    }

    /// Rows `P_0..=P_{n_max}` from the three-term recurrence.
    pub fn rows(&self, n_max: usize) -> Result<Vec<PolynomialRow<S>>> {
        if n_max > self.order {
            return Err(Error::OrderTooSmall {
                needed: n_max,
                have: self.order,
            });
        }
        let x = Poly::x();
        let mut rows: Vec<PolynomialRow<S>> = Vec::with_capacity(n_max + 1);
        rows.push(Poly::one());
        for n in 1..=n_max {
            let lin = x.clone() - Poly::constant(self.c.get(n - 1).clone());
            let mut next = lin * rows[n - 1].clone();
            if n >= 2 {
                next = next - x.scale(self.b.get(n - 1)) * rows[n - 2].clone();
            }
            rows.push(next);
        }
        Ok(rows)
    }

    /// Coefficient array rows `0..=N` generated by the recurrence.
    pub fn coefficient_matrix(&self) -> Result<LowerTriangularMatrix<S>> {
        let rows = self.rows(self.order)?;
        LowerTriangularMatrix::from_rows(rows.iter().enumerate().map(|(n, p)| p.padded(n)).collect())
    }

    /// The moment matrix: inverse of the coefficient array.
    pub fn moment_matrix(&self) -> Result<LowerTriangularMatrix<S>> {
        self.coefficient_matrix()?.inverse()
    }

    /// The Riordan array `(1/(1+ct), t(1-bt)/(1+ct))`; constant families only.
    pub fn coefficient_array(&self) -> Result<RiordanArray<S>> {
        let (b, c) = self.require_constant("riordan")?;
        lbp_array(&b, &c, self.order)
    }

    pub fn moments(&self, route: MomentRoute) -> Result<MomentSequence<S>> {
        let n = self.order;
        let values = match route {
            MomentRoute::MatrixInverse => self.moment_matrix()?.first_column(),
            MomentRoute::CatalanSum => {
                let (b, c) = self.require_constant(route.name())?;
                (0..=n).map(|m| moment_catalan_sum(m, &b, &c)).collect()
            }
            MomentRoute::Lagrange => {
                let (b, c) = self.require_constant(route.name())?;
                (0..=n)
                    .map(|m| {
                        if m == 0 {
                            Ok(S::one())
                        } else {
                            inverse_entry_lagrange(m, 0, &b, &c)
                        }
                    })
                    .collect::<Result<_>>()?
            }
            MomentRoute::ShiftedTFraction => {
                let (b, c) = self.require_constant(route.name())?;
                let levels = n.max(1);
                let tilde = TFraction::constant(&b, &c, levels).expand(n)?;
                let shifted = &TruncatedSeries::one(n) + &tilde.mul_t().scale(&c);
                shifted.into_coeffs()
            }
            MomentRoute::GfExpansion => {
                let (b, c) = self.require_constant(route.name())?;
                moment_gf(&b, &c, n)?.into_coeffs()
            }
        };
        Ok(MomentSequence { values, route })
    }
}

/// The LBP coefficient array `(1/(1+ct), t(1-bt)/(1+ct))` to order `order`.
pub fn lbp_array<S: Scalar>(b: &S, c: &S, order: usize) -> Result<RiordanArray<S>> {
    let g = TruncatedSeries::new(vec![S::one(), c.clone()], order).recip()?;
    let f = &TruncatedSeries::new(vec![S::zero(), S::one(), -b.clone()], order) * &g;
    RiordanArray::new(g, f)
}

/// `a_{n,k} = sum_j binom(k,j) binom(n-j, n-k-j) (-b)^j (-c)^(n-k-j)`.
pub fn coefficient_entry<S: Scalar>(n: usize, k: usize, b: &S, c: &S) -> S {
    if k > n {
        return S::zero();
    }
    let (n, k) = (n as i64, k as i64);
    let (nb, nc) = (-b.clone(), -c.clone());
    (0..=k.min(n - k))
        .map(|j| {
            S::from_bigint(&(binomial(k, j) * binomial(n - j, n - k - j)))
                * nb.pow(j as u32)
                * nc.pow((n - k - j) as u32)
        })
        .fold(S::zero(), |a, x| a + x)
}

/// `mu_n = sum_k binom(2n-k-1, 2n-2k) C_{n-k} b^{n-k} c^k`, with the `n = 0`
/// term read as 1.
pub fn moment_catalan_sum<S: Scalar>(n: usize, b: &S, c: &S) -> S {
    if n == 0 {
        return S::one();
    }
    let m = n as i64;
    (0..=n)
        .map(|k| {
            let kk = k as i64;
            let coef = binomial(2 * m - kk - 1, 2 * m - 2 * kk) * catalan(n - k);
            S::from_bigint(&coef) * b.pow((n - k) as u32) * c.pow(k as u32)
        })
        .fold(S::zero(), |a, x| a + x)
}

/// Entry `(n, k)` of the inverse coefficient matrix by the closed formula
/// obtained from Lagrange inversion:
///
/// `(k/n) sum_j binom(n,j) binom(2n-k-j-1, n-k-j) c^j b^(n-k-j)
///  + (c(k+1)/n) sum_j binom(n,j) binom(2n-k-j-2, n-k-j-1) c^j b^(n-k-j-1)`.
///
/// Both sums run over `j = 0..=n`; terms whose binomial vanishes are skipped,
/// which also keeps negative powers of `b` out.
pub fn inverse_entry_lagrange<S: Scalar>(n: usize, k: usize, b: &S, c: &S) -> Result<S> {
    if n == 0 || k > n {
        return Err(Error::IndexOutOfRange { n, k, order: n });
    }
    let (ni, ki) = (n as i64, k as i64);
    let mut first = S::zero();
    let mut second = S::zero();
    for j in 0..=ni {
        let c1 = binomial(ni, j) * binomial(2 * ni - ki - j - 1, ni - ki - j);
        if c1 != 0.into() {
            first = first + S::from_bigint(&c1) * c.pow(j as u32) * b.pow((ni - ki - j) as u32);
        }
        let c2 = binomial(ni, j) * binomial(2 * ni - ki - j - 2, ni - ki - j - 1);
        if c2 != 0.into() {
            second = second + S::from_bigint(&c2) * c.pow(j as u32) * b.pow((ni - ki - j - 1) as u32);
        }
    }
    let over_n = |m: i64| S::from_rational(&Rational::new(m.into(), ni.into()));
    Ok(over_n(ki) * first + over_n(ki + 1) * c.clone() * second)
}

/// `sqrt(1 - 2(2b+c)t + c^2 t^2)` to order `order`.
pub(crate) fn discriminant_sqrt<S: Scalar>(b: &S, c: &S, order: usize) -> Result<TruncatedSeries<S>> {
    let two = S::from_i64(2);
    let lin = -(two.clone() * (two * b.clone() + c.clone()));
    TruncatedSeries::new(vec![S::one(), lin, c.clone() * c.clone()], order).sqrt()
}

/// `mu(t) = (c + 2b - c^2 t - c sqrt(1 - 2(2b+c)t + c^2 t^2)) / (2b)`.
pub fn moment_gf<S: Scalar>(b: &S, c: &S, order: usize) -> Result<TruncatedSeries<S>> {
    let two_b = S::from_i64(2) * b.clone();
    let inv = two_b.inv().ok_or(Error::ZeroParameter("b"))?;
    let root = discriminant_sqrt(b, c, order)?;
    let lin = TruncatedSeries::new(vec![c.clone() + two_b, -(c.clone() * c.clone())], order);
    Ok((&lin - &root.scale(c)).scale(&inv))
}

/// `mu(t) = 1 + (ct/(1-ct)) C(bt/(1-ct)^2)` with `C` the Catalan series.
pub fn moment_gf_catalan<S: Scalar>(b: &S, c: &S, order: usize) -> Result<TruncatedSeries<S>> {
    let cat = TruncatedSeries::from_fn(order, |n| S::from_bigint(&catalan(n)));
    let geo = TruncatedSeries::new(vec![S::one(), -c.clone()], order).recip()?;
    let inner = (&geo * &geo).mul_t().scale(b);
    let outer = geo.mul_t().scale(c);
    Ok(&TruncatedSeries::one(order) + &(&outer * &cat.compose(&inner)?))
}
