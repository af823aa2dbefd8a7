//! The orthogonal families `Q`, `Q~`, `Q^` attached to the LBP family, and the
//! factorizations of the LBP coefficient array through them.
//!
//! All three share `f = t/D` with `D = 1 + (2b+c)t + b(b+c)t^2` and so the
//! recurrence `R_n = (x - (2b+c)) R_{n-1} - b(b+c) R_{n-2}`; they differ in
//! `g`, which fixes the first rows.

use std::fmt;

use crate::algebra::combin::binomial;
use crate::algebra::{Poly, Scalar, TruncatedSeries};
use crate::cfrac::tfraction_closed_form;
use crate::error::Result;
use crate::lbp::{discriminant_sqrt, lbp_array, moment_gf, PolynomialRow};
use crate::report::{Check, ScenarioReport};
use crate::riordan::RiordanArray;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrthoKind {
    /// `g = (1+bt)^2 / D`
    Q,
    /// `g = (1+bt) / D`
    QTilde,
    /// `g = 1 / D`
    QHat,
}

impl OrthoKind {
    pub const ALL: [OrthoKind; 3] = [OrthoKind::Q, OrthoKind::QTilde, OrthoKind::QHat];

    pub fn name(self) -> &'static str {
        match self {
            OrthoKind::Q => "q",
            OrthoKind::QTilde => "q-tilde",
            OrthoKind::QHat => "q-hat",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|k| k.name() == s)
    }

    /// First index from which the three-term recurrence reproduces the rows.
    pub fn recurrence_start(self) -> usize {
        match self {
            OrthoKind::Q => 3,
            OrthoKind::QTilde | OrthoKind::QHat => 2,
        }
    }
}

impl fmt::Display for OrthoKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

fn denominator<S: Scalar>(b: &S, c: &S, order: usize) -> TruncatedSeries<S> {
    let two = S::from_i64(2);
    TruncatedSeries::new(
        vec![
            S::one(),
            two * b.clone() + c.clone(),
            b.clone() * (b.clone() + c.clone()),
        ],
        order,
    )
}

/// The coefficient array of the given kind to order `order`.
pub fn ortho_array<S: Scalar>(kind: OrthoKind, b: &S, c: &S, order: usize) -> Result<RiordanArray<S>> {
    let d_inv = denominator(b, c, order).recip()?;
    let one_bt = TruncatedSeries::new(vec![S::one(), b.clone()], order);
    let g = match kind {
        OrthoKind::Q => &(&one_bt * &one_bt) * &d_inv,
        OrthoKind::QTilde => &one_bt * &d_inv,
        OrthoKind::QHat => d_inv.clone(),
    };
    RiordanArray::new(g, d_inv.mul_t())
}

#[derive(Clone, PartialEq)]
pub struct OrthoFamily<S> {
    pub kind: OrthoKind,
    pub b: S,
    pub c: S,
    pub array: RiordanArray<S>,
}

impl<S: Scalar> fmt::Debug for OrthoFamily<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("OrthoFamily")
            .field("kind", &self.kind)
            .field("b", &self.b)
            .field("c", &self.c)
            .field("array", &self.array)
            .finish()
    }
}

impl<S: Scalar> OrthoFamily<S> {
    pub fn new(kind: OrthoKind, b: S, c: S, order: usize) -> Result<Self> {
        let array = ortho_array(kind, &b, &c, order)?;
        Ok(Self { kind, b, c, array })
    }

    /// Rows `0..=N` of the coefficient array as polynomials.
    pub fn rows(&self) -> Vec<PolynomialRow<S>> {
        self.array
            .matrix()
            .rows()
            .iter()
            .map(|r| Poly::new(r.clone()))
            .collect()
    }

    /// Rows from the three-term recurrence, seeded with the array's rows
    /// below [`OrthoKind::recurrence_start`].
    pub fn recurrence_rows(&self) -> Vec<PolynomialRow<S>> {
        let array_rows = self.rows();
        let start = self.kind.recurrence_start().min(array_rows.len());
        let mut rows: Vec<PolynomialRow<S>> = array_rows[..start].to_vec();
        let shift = Poly::x() - Poly::constant(S::from_i64(2) * self.b.clone() + self.c.clone());
        let beta = self.b.clone() * (self.b.clone() + self.c.clone());
        for n in start..array_rows.len() {
            let next = shift.clone() * rows[n - 1].clone() - rows[n - 2].scale(&beta);
            rows.push(next);
        }
        rows
    }
}

/// Weight of `R_k` in `P_n` for each polynomial transform.
fn transform_weight<S: Scalar>(kind: OrthoKind, b: &S, n: usize, k: usize) -> S {
    let (ni, ki) = (n as i64, k as i64);
    let coef = match kind {
        OrthoKind::Q => binomial(ni - 1, ni - ki),
        OrthoKind::QTilde => binomial(ni, ki),
        OrthoKind::QHat => binomial(ni + 1, ki + 1),
    };
    S::from_bigint(&coef) * b.pow((n - k) as u32)
}

/// `sum_k w(n, k) R_k(x)` for the given kind's weights.
pub fn binomial_transform_row<S: Scalar>(
    kind: OrthoKind,
    b: &S,
    rows: &[PolynomialRow<S>],
    n: usize,
) -> PolynomialRow<S> {
    (0..=n).fold(Poly::new(Vec::new()), |acc, k| {
        acc + rows[k].scale(&transform_weight(kind, b, n, k))
    })
}

fn array_check<S: Scalar>(name: &str, lhs: Result<RiordanArray<S>>, rhs: Result<RiordanArray<S>>) -> Check {
    match (lhs, rhs) {
        (Ok(l), Ok(r)) => Check::rows(name, l.matrix().rows(), r.matrix().rows()),
        (Err(e), _) | (_, Err(e)) => Check::error(name, &e),
    }
}

/// The four array factorizations of `L`, the binomial expansions of `P_n`,
/// the moment equalities and the inverse of `Q`'s `f`, all to order `order`.
pub fn verify_factorizations<S: Scalar>(b: &S, c: &S, order: usize) -> ScenarioReport {
    let mut report = ScenarioReport::new("factorizations");
    let arrays = lbp_array(b, c, order).and_then(|l| {
        let rest: Result<Vec<RiordanArray<S>>> = OrthoKind::ALL.iter().map(|&k| ortho_array(k, b, c, order)).collect();
        Ok((l, rest?))
    });
    let (l, arrays) = match arrays {
        Ok(v) => v,
        Err(e) => {
            report.push(Check::error("arrays", &e));
            return report;
        }
    };
    let (o, ot, oh) = (&arrays[0], &arrays[1], &arrays[2]);
    let geo = TruncatedSeries::new(vec![S::one(), -b.clone()], order).recip();
    let left = |g: TruncatedSeries<S>| -> Result<RiordanArray<S>> { RiordanArray::new(g, geo.clone()?.mul_t()) };

    report.push(array_check(
        "L = (1, t/(1-bt)) O",
        left(TruncatedSeries::one(order)).and_then(|a| a.multiply(o)),
        Ok(l.clone()),
    ));
    report.push(array_check(
        "L = B(b) O~",
        RiordanArray::binomial(b, order).multiply(ot),
        Ok(l.clone()),
    ));
    report.push(array_check(
        "O = (1+bt, t) O~",
        RiordanArray::new(
            TruncatedSeries::new(vec![S::one(), b.clone()], order),
            TruncatedSeries::t(order),
        )
        .and_then(|a| a.multiply(ot)),
        Ok(o.clone()),
    ));
    report.push(array_check(
        "L = (1/(1-bt)^2, t/(1-bt)) O^",
        geo.clone().and_then(|g| left(&g * &g)).and_then(|a| a.multiply(oh)),
        Ok(l.clone()),
    ));

    let p_rows: Vec<PolynomialRow<S>> = l.matrix().rows().iter().map(|r| Poly::new(r.clone())).collect();
    for (kind, array, label) in [
        (OrthoKind::Q, o, "P_n = sum binom(n-1,n-k) b^(n-k) Q_k"),
        (OrthoKind::QTilde, ot, "P_n = sum binom(n,k) b^(n-k) Q~_k"),
        (OrthoKind::QHat, oh, "P_n = sum binom(n+1,k+1) b^(n-k) Q^_k"),
    ] {
        let rows: Vec<PolynomialRow<S>> = array.matrix().rows().iter().map(|r| Poly::new(r.clone())).collect();
        let got: Vec<Vec<S>> = (0..=order)
            .map(|n| binomial_transform_row(kind, b, &rows, n).padded(n))
            .collect();
        let expected: Vec<Vec<S>> = p_rows.iter().enumerate().map(|(n, p)| p.padded(n)).collect();
        report.push(Check::rows(label, &got, &expected));
    }

    for kind in OrthoKind::ALL {
        let fam = OrthoFamily {
            kind,
            b: b.clone(),
            c: c.clone(),
            array: arrays[kind as usize].clone(),
        };
        let got: Vec<Vec<S>> = fam
            .recurrence_rows()
            .iter()
            .enumerate()
            .map(|(n, p)| p.padded(n))
            .collect();
        let expected: Vec<Vec<S>> = fam.rows().iter().enumerate().map(|(n, p)| p.padded(n)).collect();
        report.push(Check::rows(format!("{kind} recurrence"), &got, &expected));
    }

    let moment_check = |name: &str, array: &RiordanArray<S>, expected: Result<TruncatedSeries<S>>| match array
        .inverse()
        .and_then(|inv| expected.map(|e| (inv, e)))
    {
        Ok((inv, e)) => Check::sequences(name, &inv.matrix().first_column(), e.coeffs()),
        Err(e) => Check::error(name, &e),
    };
    report.push(moment_check("O^-1 first column = mu", o, moment_gf(b, c, order)));
    report.push(moment_check(
        "O~^-1 first column = mu~",
        ot,
        tfraction_closed_form(b, c, order),
    ));

    let fbar = o.inverse().map(|inv| inv.f().clone());
    let expected = (|| -> Result<TruncatedSeries<S>> {
        let denom = S::from_i64(2) * b.clone() * (b.clone() + c.clone());
        let inv = denom.inv().ok_or(crate::Error::DivisionByZero)?;
        let lin = TruncatedSeries::new(vec![S::one(), -(S::from_i64(2) * b.clone() + c.clone())], order + 1);
        Ok((&lin - &discriminant_sqrt(b, c, order + 1)?).div_t()?.scale(&inv))
    })();
    report.push(match (fbar, expected) {
        (Ok(f), Ok(e)) => Check::sequences("f of O^-1", f.coeffs(), e.coeffs()),
        (Err(e), _) | (_, Err(e)) => Check::error("f of O^-1", &e),
    });
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::int;
    use crate::algebra::RationalFunction;

    type R = RationalFunction;

    #[test]
    fn q_initial_rows() {
        let (b, c) = (R::b(), R::c());
        let fam = OrthoFamily::new(OrthoKind::Q, b.clone(), c.clone(), 4).unwrap();
        let rows = fam.rows();
        assert_eq!(rows[0], Poly::one());
        assert_eq!(rows[1].coeffs(), &[-c.clone(), R::one()]);
        let two = R::from_i64(2);
        let q2 = [
            c.clone() * (b.clone() + c.clone()),
            -(two * (b.clone() + c.clone())),
            R::one(),
        ];
        assert_eq!(rows[2].coeffs(), &q2);
    }

    #[test]
    fn first_rows_of_other_kinds() {
        let (b, c) = (R::b(), R::c());
        let qt = OrthoFamily::new(OrthoKind::QTilde, b.clone(), c.clone(), 3)
            .unwrap()
            .rows();
        assert_eq!(qt[1].coeffs(), &[-(b.clone() + c.clone()), R::one()]);
        let qh = OrthoFamily::new(OrthoKind::QHat, b.clone(), c.clone(), 3)
            .unwrap()
            .rows();
        assert_eq!(qh[1].coeffs(), &[-(R::from_i64(2) * b.clone() + c.clone()), R::one()]);
    }

    #[test]
    fn recurrences_match_arrays() {
        let (b, c) = (R::b(), R::c());
        for kind in OrthoKind::ALL {
            let fam = OrthoFamily::new(kind, b.clone(), c.clone(), 6).unwrap();
            assert_eq!(fam.recurrence_rows(), fam.rows(), "{kind}");
        }
    }

    #[test]
    fn q_recurrence_fails_at_two() {
        // The pure recurrence from Q_0, Q_1 misses Q_2 by b^2.
        let (b, c) = (R::b(), R::c());
        let rows = OrthoFamily::new(OrthoKind::Q, b.clone(), c.clone(), 3).unwrap().rows();
        let shift = Poly::x() - Poly::constant(R::from_i64(2) * b.clone() + c.clone());
        let naive = shift * rows[1].clone() - rows[0].scale(&(b.clone() * (b.clone() + c)));
        assert_eq!(rows[2].clone() - naive, Poly::constant(b.pow(2)));
    }

    #[test]
    fn q_tilde_inverse_gives_mu_tilde() {
        let (b, c) = (R::b(), R::c());
        let inv = ortho_array(OrthoKind::QTilde, &b, &c, 4).unwrap().inverse().unwrap();
        let col = inv.matrix().first_column();
        let bc = b.clone() + c.clone();
        assert_eq!(col[..3], [R::one(), bc.clone(), bc * (R::from_i64(2) * b + c)]);
    }

    #[test]
    fn factorizations_symbolic() {
        let report = verify_factorizations(&R::b(), &R::c(), 6);
        assert!(report.passed(), "{report}");
        assert_eq!(report.checks.len(), 13);
    }

    #[test]
    fn factorizations_numeric() {
        for (b, c) in [(1, 1), (2, -5), (-3, 7)] {
            let report = verify_factorizations(&int(b), &int(c), 10);
            assert!(report.passed(), "{report}");
        }
    }

    #[test]
    fn transform_weights_by_hand() {
        // P_2 = b^2 Q~_0 + 2b Q~_1 + Q~_2
        let (b, c) = (R::b(), R::c());
        let rows = OrthoFamily::new(OrthoKind::QTilde, b.clone(), c.clone(), 2)
            .unwrap()
            .rows();
        let p2 = binomial_transform_row(OrthoKind::QTilde, &b, &rows, 2);
        let two = R::from_i64(2);
        assert_eq!(p2.coeffs(), &[c.pow(2), -(two * c + b), R::one()]);
    }
}
