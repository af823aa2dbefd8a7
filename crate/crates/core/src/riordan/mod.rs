//! Riordan arrays `(g, f)`, their group law and materialization.

mod matrix;

pub use matrix::{has_riordan_column_shift, LowerTriangularMatrix, Matrix};

use crate::algebra::{Scalar, TruncatedSeries};
use crate::error::{Error, Result};

/// The Riordan array `(g(t), f(t))` with entries `[t^n] g(t) f(t)^k`.
///
/// Invariants: `g(0)` is a unit, `f(0) = 0`, `f'(0)` is a unit. Both series
/// share one truncation order `N`, and every entry with `n <= N` is exact.
/// Equality is coefficientwise on `(g, f)`.
#[derive(Clone, PartialEq)]
pub struct RiordanArray<S> {
    g: TruncatedSeries<S>,
    f: TruncatedSeries<S>,
}

impl<S: Scalar> RiordanArray<S> {
    pub fn new(g: TruncatedSeries<S>, f: TruncatedSeries<S>) -> Result<Self> {
        let order = g.order().min(f.order());
        let (g, f) = (g.truncate(order), f.truncate(order));
        if g.coeff(0).inv().is_none() {
            return Err(Error::InvalidRiordan("g(0) must be invertible"));
        }
        if !f.coeff(0).is_zero() {
            return Err(Error::InvalidRiordan("f(0) must vanish"));
        }
        if order == 0 || f.coeff(1).inv().is_none() {
            return Err(Error::InvalidRiordan("f'(0) must be invertible"));
        }
        Ok(Self { g, f })
    }

    /// The group identity `(1, t)`.
    pub fn identity(order: usize) -> Self {
        Self {
            g: TruncatedSeries::one(order),
            f: TruncatedSeries::t(order),
        }
    }

    /// The generalized binomial matrix `B(b) = (1/(1-bt), t/(1-bt))` with
    /// entries `binom(n, k) b^(n-k)`.
    pub fn binomial(b: &S, order: usize) -> Self {
        let g = TruncatedSeries::from_fn(order, |n| b.pow(n as u32));
        let f = g.mul_t();
        Self { g, f }
    }

    pub fn g(&self) -> &TruncatedSeries<S> {
        &self.g
    }

    pub fn f(&self) -> &TruncatedSeries<S> {
        &self.f
    }

    pub fn order(&self) -> usize {
        self.g.order()
    }

    /// `[t^n] g f^k`.
    pub fn entry(&self, n: usize, k: usize) -> Result<S> {
        if k > n || n > self.order() {
            return Err(Error::IndexOutOfRange {
                n,
                k,
                order: self.order(),
            });
        }
        Ok((&self.g * &self.f.pow(k as u32)).coeff(n).clone())
    }

    /// The leading `(N+1) x (N+1)` block.
    pub fn matrix(&self) -> LowerTriangularMatrix<S> {
        self.matrix_dim(self.order() + 1)
    }

    /// Leading `dim x dim` block, `dim <= N + 1`.
    pub fn matrix_dim(&self, dim: usize) -> LowerTriangularMatrix<S> {
        let dim = dim.min(self.order() + 1);
        let mut rows: Vec<Vec<S>> = (0..dim).map(|n| Vec::with_capacity(n + 1)).collect();
        let mut col = self.g.clone();
        for k in 0..dim {
            for (n, row) in rows.iter_mut().enumerate().skip(k) {
                row.push(col.coeff(n).clone());
            }
            col = &col * &self.f;
        }
        LowerTriangularMatrix::from_rows(rows).expect("rows built triangular")
    }

    /// `self * rhs = (g_A * g_B(f_A), f_B(f_A))`.
    pub fn multiply(&self, rhs: &Self) -> Result<Self> {
        let g = &self.g * &rhs.g.compose(&self.f)?;
        let f = rhs.f.compose(&self.f)?;
        Self::new(g, f)
    }

    /// `(g, f)^{-1} = (1 / g(fbar), fbar)` with `fbar` the reversion of `f`.
    pub fn inverse(&self) -> Result<Self> {
        let fbar = self.f.reversion()?;
        let g = self.g.compose(&fbar)?.recip()?;
        Self::new(g, fbar)
    }

    pub fn map<T: Scalar>(&self, mut f: impl FnMut(&S) -> T) -> RiordanArray<T> {
        RiordanArray {
            g: self.g.map(&mut f),
            f: self.f.map(&mut f),
        }
    }
}

impl<S: Scalar> std::fmt::Debug for RiordanArray<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("RiordanArray")
            .field("g", &self.g)
            .field("f", &self.f)
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::{int, rat};
    use crate::algebra::{Rational, RationalFunction};
    use proptest::prelude::*;

    type R = RationalFunction;

    fn lbp_array(b: &R, c: &R, n: usize) -> RiordanArray<R> {
        let g = TruncatedSeries::new(vec![R::one(), c.clone()], n).recip().unwrap();
        let f = &TruncatedSeries::new(vec![R::zero(), R::one(), -b.clone()], n) * &g;
        RiordanArray::new(g, f).unwrap()
    }

    #[test]
    fn lbp_entries() {
        let (b, c) = (R::b(), R::c());
        let l = lbp_array(&b, &c, 6);
        // P2 = (x - c)^2 - b x
        assert_eq!(l.entry(2, 1).unwrap(), -(R::from_i64(2) * c.clone() + b.clone()));
        for n in 0..=6 {
            assert_eq!(l.entry(n, n).unwrap(), R::one());
        }
        assert!(matches!(l.entry(7, 1), Err(Error::IndexOutOfRange { .. })));
        let delannoy = lbp_array(&c, &c, 6);
        let row4: Vec<R> = (0..=4).map(|k| delannoy.entry(4, k).unwrap()).collect();
        let expect = [(1, 4), (-7, 3), (13, 2), (-7, 1), (1, 0)].map(|(a, e)| R::from_i64(a) * c.pow(e));
        assert_eq!(row4, expect);
    }

    #[test]
    fn invalid_arrays_rejected() {
        let t = TruncatedSeries::<Rational>::t(4);
        assert!(RiordanArray::new(TruncatedSeries::zero(4), t.clone()).is_err());
        assert!(RiordanArray::new(TruncatedSeries::<Rational>::one(4), TruncatedSeries::one(4)).is_err());
        assert!(RiordanArray::new(TruncatedSeries::one(4), t.pow(2)).is_err());
    }

    #[test]
    fn binomial_array() {
        let b1 = RiordanArray::binomial(&int(1), 4).matrix();
        assert_eq!(b1.rows()[2], vec![int(1), int(2), int(1)]);
        let b2 = RiordanArray::binomial(&int(2), 4);
        assert_eq!(b2.entry(3, 1).unwrap(), int(12));
        let b = R::b();
        let bb = RiordanArray::binomial(&b, 8);
        assert_eq!(bb.inverse().unwrap(), RiordanArray::binomial(&-b, 8));
    }

    #[test]
    fn inverse_of_one_over_one_plus_t() {
        let g = TruncatedSeries::new(vec![int(1), int(1)], 8).recip().unwrap();
        let a = RiordanArray::new(g.clone(), g.mul_t()).unwrap();
        let g2 = TruncatedSeries::new(vec![int(1), int(-1)], 8).recip().unwrap();
        let expect = RiordanArray::new(g2.clone(), g2.mul_t()).unwrap();
        assert_eq!(a.inverse().unwrap(), expect);
    }

    #[test]
    fn lbp_inverse_first_column_is_moments() {
        let (b, c) = (R::b(), R::c());
        let inv = lbp_array(&b, &c, 5).inverse().unwrap();
        let m = inv.matrix().first_column();
        assert_eq!(m[1], c.clone());
        assert_eq!(m[2], c.clone() * (b.clone() + c.clone()));
        assert_eq!(
            m[3],
            c.clone() * (b.clone() + c.clone()) * (R::from_i64(2) * b.clone() + c.clone())
        );
        assert_eq!(inv.inverse().unwrap(), lbp_array(&b, &c, 5));
    }

    #[test]
    fn matrix_product_matches_series_product() {
        let (b, c) = (R::b(), R::c());
        let a = lbp_array(&b, &c, 6);
        let bb = RiordanArray::binomial(&c, 6);
        let prod = a.multiply(&bb).unwrap();
        assert_eq!(prod.matrix(), a.matrix().mul(&bb.matrix()).unwrap());
        assert_eq!(a.multiply(&a.inverse().unwrap()).unwrap(), RiordanArray::identity(6));
    }

    fn arb_array() -> impl Strategy<Value = RiordanArray<Rational>> {
        let coef = (-9i64..10, 1i64..4).prop_map(|(a, b)| rat(a, b));
        (
            prop::collection::vec(coef.clone(), 7),
            prop::collection::vec(coef, 7),
            1i64..4,
            1i64..4,
        )
            .prop_map(|(mut g, mut f, g0, f1)| {
                g[0] = int(g0);
                f[0] = int(0);
                f[1] = int(f1);
                RiordanArray::new(TruncatedSeries::new(g, 6), TruncatedSeries::new(f, 6)).unwrap()
            })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]
        #[test]
        fn group_axioms(a in arb_array(), b in arb_array(), c in arb_array()) {
            let id = RiordanArray::identity(6);
            prop_assert_eq!(a.multiply(&id).unwrap(), a.clone());
            prop_assert_eq!(id.multiply(&a).unwrap(), a.clone());
            let ab_c = a.multiply(&b).unwrap().multiply(&c).unwrap();
            let a_bc = a.multiply(&b.multiply(&c).unwrap()).unwrap();
            prop_assert_eq!(ab_c, a_bc);
            let inv = a.inverse().unwrap();
            prop_assert_eq!(a.multiply(&inv).unwrap(), id.clone());
            prop_assert_eq!(inv.multiply(&a).unwrap(), id);
            prop_assert_eq!(inv.matrix(), a.matrix().inverse().unwrap());
        }

        #[test]
        fn riordan_production_matrices_shift(a in arb_array()) {
            let p = a.matrix().production_matrix().unwrap();
            prop_assert!(has_riordan_column_shift(&p));
        }
    }
}
