//! Finite lower-triangular and dense square matrices over a [`Scalar`].

use crate::algebra::Scalar;
use crate::error::{Error, Result};

/// Lower-triangular block; row `n` stores entries `0..=n`.
#[derive(Clone, Debug, PartialEq)]
pub struct LowerTriangularMatrix<S> {
    rows: Vec<Vec<S>>,
}

impl<S: Scalar> LowerTriangularMatrix<S> {
    pub fn from_rows(rows: Vec<Vec<S>>) -> Result<Self> {
        for (n, r) in rows.iter().enumerate() {
            if r.len() != n + 1 {
                return Err(Error::Shape(format!(
                    "row {n} has {} entries, expected {}",
                    r.len(),
                    n + 1
                )));
            }
        }
        Ok(Self { rows })
    }

    /// Takes the lower triangle of a square block, ignoring anything above
    /// the diagonal.
    pub fn from_square(m: &[Vec<S>]) -> Self {
        Self {
            rows: m.iter().enumerate().map(|(n, r)| r[..=n].to_vec()).collect(),
        }
    }

    pub fn identity(dim: usize) -> Self {
        Self {
            rows: (0..dim)
                .map(|n| (0..=n).map(|k| if k == n { S::one() } else { S::zero() }).collect())
                .collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<S>] {
        &self.rows
    }

    /// Entry `(n, k)`, zero above the diagonal.
    pub fn get(&self, n: usize, k: usize) -> S {
        if k > n {
            S::zero()
        } else {
            self.rows[n][k].clone()
        }
    }

    pub fn column(&self, k: usize) -> Vec<S> {
        (k..self.dim()).map(|n| self.rows[n][k].clone()).collect()
    }

    pub fn first_column(&self) -> Vec<S> {
        self.column(0)
    }

    /// Leading `dim x dim` block.
    pub fn block(&self, dim: usize) -> Self {
        Self {
            rows: self.rows[..dim.min(self.dim())].to_vec(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        if self.dim() != rhs.dim() {
            return Err(Error::Shape(format!("{} vs {}", self.dim(), rhs.dim())));
        }
        let rows = (0..self.dim())
            .map(|n| {
                (0..=n)
                    .map(|k| {
                        (k..=n).fold(S::zero(), |acc, j| {
                            acc + self.rows[n][j].clone() * rhs.rows[j][k].clone()
                        })
                    })
                    .collect()
            })
            .collect();
        Ok(Self { rows })
    }

    /// Inverse by forward substitution, column by column.
    pub fn inverse(&self) -> Result<Self> {
        let n = self.dim();
        let diag_inv: Vec<S> = (0..n)
            .map(|i| self.rows[i][i].inv().ok_or(Error::Singular))
            .collect::<Result<_>>()?;
        let mut out: Vec<Vec<S>> = (0..n).map(|i| vec![S::zero(); i + 1]).collect();
        for k in 0..n {
            out[k][k] = diag_inv[k].clone();
            for i in k + 1..n {
                let acc = (k..i).fold(S::zero(), |acc, j| acc + self.rows[i][j].clone() * out[j][k].clone());
                out[i][k] = -(acc * diag_inv[i].clone());
            }
        }
        Ok(Self { rows: out })
    }

    /// The production matrix `P = M^{-1} * (M with its top row removed)`.
    ///
    /// From a block of dimension `d` only the leading `(d-1) x (d-1)` block of
    /// `P` is determined, and that is what is returned. Solved row by row from
    /// `M[n+1][k] = sum_j M[n][j] P[j][k]`, dividing only by diagonal entries.
    pub fn production_matrix(&self) -> Result<Matrix<S>> {
        let d = self.dim();
        if d < 2 {
            return Err(Error::Shape("production matrix needs dimension >= 2".into()));
        }
        let m = d - 1;
        let mut p: Vec<Vec<S>> = vec![vec![S::zero(); m]; m];
        for n in 0..m {
            let piv = self.rows[n][n].inv().ok_or(Error::Singular)?;
            p[n] = (0..m)
                .map(|k| {
                    let acc = (0..n).fold(self.get(n + 1, k), |acc, j| {
                        acc - self.rows[n][j].clone() * p[j][k].clone()
                    });
                    acc * piv.clone()
                })
                .collect();
        }
        Ok(Matrix::from_rows(p))
    }

    pub fn map<T: Scalar>(&self, mut f: impl FnMut(&S) -> T) -> LowerTriangularMatrix<T> {
        LowerTriangularMatrix {
            rows: self.rows.iter().map(|r| r.iter().map(&mut f).collect()).collect(),
        }
    }
}

/// Dense square matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<S> {
    rows: Vec<Vec<S>>,
}

impl<S: Scalar> Matrix<S> {
    pub fn from_rows(rows: Vec<Vec<S>>) -> Self {
        debug_assert!(rows.iter().all(|r| r.len() == rows.len()));
        Self { rows }
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        Self {
            rows: (0..dim).map(|i| (0..dim).map(|j| f(i, j)).collect()).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<S>] {
        &self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> &S {
        &self.rows[i][j]
    }

    /// Matrix with row `i` and column `j` removed.
    pub fn minor(&self, i: usize, j: usize) -> Self {
        Self {
            rows: self
                .rows
                .iter()
                .enumerate()
                .filter(|(r, _)| *r != i)
                .map(|(_, row)| {
                    row.iter()
                        .enumerate()
                        .filter(|(c, _)| *c != j)
                        .map(|(_, v)| v.clone())
                        .collect()
                })
                .collect(),
        }
    }

    /// Determinant by fraction-free elimination.
    ///
    /// Each row is first multiplied by the lcm of its entries' denominators
    /// so the elimination runs on integral entries (integers, or polynomials
    /// in `b, c`); Bareiss' update then divides only by the previous pivot,
    /// an exact division. The row scalings are divided out once at the end.
    pub fn determinant(&self) -> S {
        let n = self.dim();
        if n == 0 {
            return S::one();
        }
        let mut scale = S::one();
        let mut a: Vec<Vec<S>> = self
            .rows
            .iter()
            .map(|row| {
                let l = row
                    .iter()
                    .fold(S::one(), |acc, v| S::denominator_lcm(&acc, &v.denominator()));
                if l.is_one() {
                    row.clone()
                } else {
                    scale = scale.clone() * l.clone();
                    row.iter().map(|v| v.clone() * l.clone()).collect()
                }
            })
            .collect();
        let mut sign = false;
        let mut prev = S::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                    Some(r) => {
                        a.swap(k, r);
                        sign = !sign;
                    }
                    None => return S::zero(),
                }
            }
            let prev_inv = prev.inv().expect("Bareiss pivot is nonzero");
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = a[i][j].clone() * a[k][k].clone() - a[i][k].clone() * a[k][j].clone();
                    a[i][j] = v * prev_inv.clone();
                }
                a[i][k] = S::zero();
            }
            prev = a[k][k].clone();
        }
        let mut det = a[n - 1][n - 1].clone();
        if sign {
            det = -det;
        }
        if scale.is_one() {
            det
        } else {
            det * scale.inv().expect("row scalings are nonzero")
        }
    }

    /// Reference determinant by cofactor expansion; exponential, tests only.
    #[cfg(test)]
    pub(crate) fn determinant_by_cofactors(&self) -> S {
        let n = self.dim();
        if n == 0 {
            return S::one();
        }
        (0..n).fold(S::zero(), |acc, j| {
            let term = self.rows[0][j].clone() * self.minor(0, j).determinant_by_cofactors();
            if j % 2 == 0 {
                acc + term
            } else {
                acc - term
            }
        })
    }
}

/// True when every column `k >= 1` of `p` is column 1 shifted down by
/// `k - 1` places with zeros above, the shape forced on a production matrix
/// by the Riordan property.
pub fn has_riordan_column_shift<S: Scalar>(p: &Matrix<S>) -> bool {
    let m = p.dim();
    for k in 2..m {
        for n in 0..m {
            let expect = if n + 1 >= k {
                p.get(n + 1 - k, 1).clone()
            } else {
                S::zero()
            };
            if *p.get(n, k) != expect {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::{int, Rational};
    use crate::algebra::RationalFunction;

    fn q(rows: &[&[i64]]) -> LowerTriangularMatrix<Rational> {
        LowerTriangularMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect()).unwrap()
    }

    #[test]
    fn inverse_of_pascal_is_signed_pascal() {
        let p = q(&[&[1], &[1, 1], &[1, 2, 1], &[1, 3, 3, 1]]);
        let inv = p.inverse().unwrap();
        assert_eq!(inv, q(&[&[1], &[-1, 1], &[1, -2, 1], &[-1, 3, -3, 1]]));
        assert_eq!(p.mul(&inv).unwrap(), LowerTriangularMatrix::identity(4));
    }

    #[test]
    fn singular_inverse_and_bad_shape() {
        assert_eq!(q(&[&[1], &[1, 0]]).inverse(), Err(Error::Singular));
        assert!(LowerTriangularMatrix::<Rational>::from_rows(vec![vec![int(1), int(2)]]).is_err());
    }

    #[test]
    fn production_matrix_of_identity_is_shift() {
        let p = LowerTriangularMatrix::<Rational>::identity(5)
            .production_matrix()
            .unwrap();
        let expect = Matrix::from_fn(4, |i, j| if j == i + 1 { int(1) } else { int(0) });
        assert_eq!(p, expect);
        assert!(has_riordan_column_shift(&p));
    }

    #[test]
    fn production_matrix_of_pascal() {
        // Pascal's triangle: P has 1 on the diagonal and superdiagonal.
        let p = q(&[&[1], &[1, 1], &[1, 2, 1], &[1, 3, 3, 1], &[1, 4, 6, 4, 1]])
            .production_matrix()
            .unwrap();
        let expect = Matrix::from_fn(4, |i, j| if j == i || j == i + 1 { int(1) } else { int(0) });
        assert_eq!(p, expect);
    }

    #[test]
    fn bareiss_matches_cofactors() {
        let m = Matrix::from_rows(vec![
            vec![int(2), int(-1), int(0), int(3)],
            vec![int(0), int(0), int(5), int(1)],
            vec![int(1), int(4), int(1), int(-2)],
            vec![int(7), int(1), int(1), int(1)],
        ]);
        assert_eq!(m.determinant(), m.determinant_by_cofactors());
        let mut rows = m.rows().to_vec();
        rows[3] = rows[1].clone();
        assert_eq!(Matrix::from_rows(rows).determinant(), int(0));
    }

    #[test]
    fn symbolic_determinant_with_denominators() {
        type R = RationalFunction;
        let (b, c) = (R::b(), R::c());
        let m = Matrix::from_rows(vec![
            vec![R::one(), b.clone() * c.inv().unwrap(), c.clone()],
            vec![b.inv().unwrap(), c.clone(), R::one()],
            vec![
                b.clone() + c.clone(),
                R::from_i64(2),
                (b.clone() * c.clone()).inv().unwrap(),
            ],
        ]);
        assert_eq!(m.determinant(), m.determinant_by_cofactors());
    }
}
