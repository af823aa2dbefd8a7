//! Hankel and Toeplitz determinants of moment sequences, parameter recovery
//! and the determinantal formula for `P_n(x)`.

use crate::algebra::{Poly, Scalar};
use crate::error::{Error, Result};
use crate::lbp::PolynomialRow;
use crate::riordan::Matrix;

/// `(mu_{i+j+shift})_{0 <= i,j <= n}`.
pub fn hankel_matrix<S: Scalar>(mu: &[S], n: usize, shift: usize) -> Matrix<S> {
    Matrix::from_fn(n + 1, |i, j| mu[i + j + shift].clone())
}

/// `h_n = det(mu_{i+j})_{0..n}` for `n = 0..=n_max`.
pub fn hankel_transform<S: Scalar>(mu: &[S], n_max: usize) -> Result<Vec<S>> {
    let needed = 2 * n_max + 1;
    if mu.len() < needed {
        return Err(Error::InsufficientMoments { needed, have: mu.len() });
    }
    Ok((0..=n_max).map(|n| hankel_matrix(mu, n, 0).determinant()).collect())
}

/// `(bc)^n (b(b+c))^binom(n,2)`.
pub fn hankel_closed_form<S: Scalar>(b: &S, c: &S, n: usize) -> S {
    let pairs = (n * n.saturating_sub(1) / 2) as u32;
    (b.clone() * c.clone()).pow(n as u32) * (b.clone() * (b.clone() + c.clone())).pow(pairs)
}

/// `(-b/c)^binom(n+1,2)`.
pub fn toeplitz_closed_form<S: Scalar>(b: &S, c: &S, n: usize) -> Result<S> {
    let ratio = -(b.clone() * c.inv().ok_or(Error::ZeroParameter("c"))?);
    Ok(ratio.pow((n * (n + 1) / 2) as u32))
}

/// Moments on both sides of zero: `mu_{-k} = mu_{1+k} / c^(1+2k)`.
#[derive(Clone, Debug, PartialEq)]
pub struct BiInfiniteMoments<S> {
    forward: Vec<S>,
    backward: Vec<S>,
}

impl<S: Scalar> BiInfiniteMoments<S> {
    /// `mu_i` for `-depth <= i <= N`.
    pub fn get(&self, i: i64) -> Option<&S> {
        if i >= 0 {
            self.forward.get(i as usize)
        } else {
            self.backward.get((-i - 1) as usize)
        }
    }

    pub fn forward(&self) -> &[S] {
        &self.forward
    }

    /// `mu_{-1}, mu_{-2}, ...`
    pub fn backward(&self) -> &[S] {
        &self.backward
    }

    fn at(&self, i: i64) -> Result<S> {
        self.get(i).cloned().ok_or(Error::InsufficientMoments {
            needed: i.unsigned_abs() as usize + 1,
            have: if i >= 0 {
                self.forward.len()
            } else {
                self.backward.len()
            },
        })
    }

    /// `(mu_{shift - j + k})_{0 <= j,k <= n}`.
    pub fn toeplitz_matrix(&self, n: usize, shift: i64) -> Result<Matrix<S>> {
        let mut rows = Vec::with_capacity(n + 1);
        for j in 0..=n as i64 {
            rows.push(
                (0..=n as i64)
                    .map(|k| self.at(shift - j + k))
                    .collect::<Result<Vec<_>>>()?,
            );
        }
        Ok(Matrix::from_rows(rows))
    }
}

/// Extends `mu_0..mu_N` to negative indices down to `-depth`.
pub fn extend_moments<S: Scalar>(mu: &[S], c: &S, depth: usize) -> Result<BiInfiniteMoments<S>> {
    let c_inv = c.inv().ok_or(Error::ZeroParameter("c"))?;
    if depth > 0 && mu.len() < depth + 2 {
        return Err(Error::InsufficientMoments {
            needed: depth + 2,
            have: mu.len(),
        });
    }
    let backward = (1..=depth)
        .map(|k| mu[1 + k].clone() * c_inv.pow((1 + 2 * k) as u32))
        .collect();
    Ok(BiInfiniteMoments {
        forward: mu.to_vec(),
        backward,
    })
}

/// `t_n = det(mu_{-j+k})` and `t'_n = det(mu_{1-j+k})` for `n = 0..=n_max`.
pub fn toeplitz_dets<S: Scalar>(bm: &BiInfiniteMoments<S>, n_max: usize) -> Result<(Vec<S>, Vec<S>)> {
    let mut t = Vec::with_capacity(n_max + 1);
    let mut tp = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        t.push(bm.toeplitz_matrix(n, 0)?.determinant());
        tp.push(bm.toeplitz_matrix(n, 1)?.determinant());
    }
    Ok((t, tp))
}

/// `b = -t_{n-1} t'_{n+1} / (t_n t'_n)`, `c = t_n t'_{n+1} / (t_{n+1} t'_n)`.
pub fn recover_parameters<S: Scalar>(t: &[S], tp: &[S], n: usize) -> Result<(S, S)> {
    if n == 0 {
        return Err(Error::IndexOutOfRange {
            n,
            k: 0,
            order: t.len(),
        });
    }
    if t.len() < n + 2 || tp.len() < n + 2 {
        return Err(Error::InsufficientMoments {
            needed: n + 2,
            have: t.len().min(tp.len()),
        });
    }
    let d_b = (t[n].clone() * tp[n].clone())
        .inv()
        .ok_or(Error::VanishingToeplitz(n))?;
    let d_c = (t[n + 1].clone() * tp[n].clone())
        .inv()
        .ok_or(Error::VanishingToeplitz(n))?;
    let b = -(t[n - 1].clone() * tp[n + 1].clone() * d_b);
    let c = t[n].clone() * tp[n + 1].clone() * d_c;
    Ok((b, c))
}

/// `P_n(x)` as the bordered Toeplitz determinant with rows
/// `mu_{-j}, ..., mu_{n-j}` for `j = 0..n-1` and last row `1, x, ..., x^n`,
/// normalized to be monic.
///
/// Expanded along the last row; each cofactor is a numeric determinant. The
/// coefficient of `x^n` is `t_{n-1}`, which must be invertible.
pub fn lbp_by_determinant<S: Scalar>(bm: &BiInfiniteMoments<S>, n: usize) -> Result<PolynomialRow<S>> {
    if n == 0 {
        return Ok(Poly::one());
    }
    let mut rows = Vec::with_capacity(n + 1);
    for j in 0..n as i64 {
        rows.push((0..=n as i64).map(|k| bm.at(k - j)).collect::<Result<Vec<_>>>()?);
    }
    rows.push(vec![S::zero(); n + 1]);
    let bordered = Matrix::from_rows(rows);
    let coeffs: Vec<S> = (0..=n)
        .map(|k| {
            let minor = bordered.minor(n, k).determinant();
            if (n + k).is_multiple_of(2) {
                minor
            } else {
                -minor
            }
        })
        .collect();
    let lead_inv = coeffs[n].inv().ok_or(Error::VanishingToeplitz(n - 1))?;
    Ok(Poly::new(coeffs).scale(&lead_inv))
}
