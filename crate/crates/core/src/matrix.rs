//! Scalar matrices over `F_p` and polynomial matrices with determinantal and
//! Pfaffian constructions.

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::poly::Polynomial;

/// Dense matrix over `F_p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScalarMatrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl ScalarMatrix {
    pub fn zeros(rows: usize, cols: usize, field: PrimeField) -> Self {
        ScalarMatrix {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize, field: PrimeField) -> Self {
        let mut m = Self::zeros(n, n, field);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(field: PrimeField, rows: Vec<Vec<u32>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |v| v.len());
        if rows.iter().any(|v| v.len() != c) {
            return Err(Error::Shape {
                rows: r,
                cols: c,
                reason: "ragged rows",
            });
        }
        let data = rows
            .into_iter()
            .flatten()
            .map(|v| field.reduce_u64(v as u64))
            .collect();
        Ok(ScalarMatrix {
            field,
            rows: r,
            cols: c,
            data,
        })
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        self.data[i * self.cols + j] = self.field.reduce_u64(v as u64);
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul(&self, other: &ScalarMatrix) -> Result<ScalarMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: other.rows,
            });
        }
        let f = self.field;
        let mut out = Self::zeros(self.rows, other.cols, f);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let v = f.add(out.get(i, j), f.mul(a, other.get(k, j)));
                    out.data[i * other.cols + j] = v;
                }
            }
        }
        Ok(out)
    }

    /// Row echelon form by Gaussian elimination, returning the echelon matrix,
    /// the rank and the determinant factor accumulated from swaps and scalings.
    fn echelon(&self) -> (ScalarMatrix, usize, u32) {
        let f = self.field;
        let mut m = self.clone();
        let mut rank = 0;
        let mut det = 1u32;
        for col in 0..self.cols {
            if rank == self.rows {
                break;
            }
            let Some(piv) = (rank..self.rows).find(|&r| m.get(r, col) != 0) else {
                det = 0;
                continue;
            };
            if piv != rank {
                for j in 0..self.cols {
                    m.data.swap(piv * self.cols + j, rank * self.cols + j);
                }
                det = f.neg(det);
            }
            let pv = m.get(rank, col);
            det = f.mul(det, pv);
            let inv = f.inv(pv);
            for j in 0..self.cols {
                let v = f.mul(m.get(rank, j), inv);
                m.data[rank * self.cols + j] = v;
            }
            for r in 0..self.rows {
                if r == rank {
                    continue;
                }
                let factor = m.get(r, col);
                if factor == 0 {
                    continue;
                }
                for j in 0..self.cols {
                    let v = f.sub(m.get(r, j), f.mul(factor, m.get(rank, j)));
                    m.data[r * self.cols + j] = v;
                }
            }
            rank += 1;
        }
        if rank < self.rows.min(self.cols) {
            det = 0;
        }
        (m, rank, det)
    }

    pub fn rank(&self) -> usize {
        self.echelon().1
    }

    pub fn determinant(&self) -> Result<u32> {
        if self.rows != self.cols {
            return Err(Error::Shape {
                rows: self.rows,
                cols: self.cols,
                reason: "determinant needs a square matrix",
            });
        }
        if self.rows == 0 {
            return Ok(1);
        }
        let (_, rank, det) = self.echelon();
        Ok(if rank < self.rows { 0 } else { det })
    }

    pub fn inverse(&self) -> Result<ScalarMatrix> {
        if self.rows != self.cols {
            return Err(Error::Shape {
                rows: self.rows,
                cols: self.cols,
                reason: "inverse needs a square matrix",
            });
        }
        let n = self.rows;
        let mut aug = Self::zeros(n, 2 * n, self.field);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, n + i, 1);
        }
        let (e, _, _) = aug.echelon();
        for i in 0..n {
            if e.get(i, i) != 1 {
                return Err(Error::SingularMatrix);
            }
        }
        let mut out = Self::zeros(n, n, self.field);
        for i in 0..n {
            for j in 0..n {
                out.set(i, j, e.get(i, n + j));
            }
        }
        Ok(out)
    }
}

/// Rectangular grid of polynomials sharing one ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn from_rows(rows: Vec<Vec<Polynomial>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |v| v.len());
        if rows.iter().any(|v| v.len() != c) {
            return Err(Error::Shape {
                rows: r,
                cols: c,
                reason: "ragged rows",
            });
        }
        Ok(PolyMatrix {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Skew-symmetric matrix from its strict upper triangle, given row by row:
    /// `upper[i]` holds entries `(i, i+1), ..., (i, n-1)`.
    pub fn skew_from_upper(n: usize, upper: &[Vec<Polynomial>], zero: &Polynomial) -> Result<Self> {
        if upper.len() + 1 < n || upper.len() > n || upper.iter().enumerate().any(|(i, r)| r.len() != n - 1 - i) {
            return Err(Error::Shape {
                rows: n,
                cols: n,
                reason: "upper triangle has the wrong shape",
            });
        }
        let mut entries = vec![zero.clone(); n * n];
        for i in 0..n {
            for j in (i + 1)..n {
                let a = upper[i][j - i - 1].clone();
                entries[j * n + i] = -&a;
                entries[i * n + j] = a;
            }
        }
        Ok(PolyMatrix {
            rows: n,
            cols: n,
            entries,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i * self.cols + j]
    }

    pub fn is_skew_symmetric(&self) -> Result<()> {
        if self.rows != self.cols {
            return Err(Error::Shape {
                rows: self.rows,
                cols: self.cols,
                reason: "skew-symmetric matrices are square",
            });
        }
        for i in 0..self.rows {
            if !self.get(i, i).is_zero() {
                return Err(Error::NotSkew(i, i));
            }
            for j in (i + 1)..self.cols {
                if self.get(i, j) != &-self.get(j, i) {
                    return Err(Error::NotSkew(i, j));
                }
            }
        }
        Ok(())
    }

    /// Signed maximal minors of a `(t+1) x t` matrix: entry `i` is
    /// `(-1)^i det(M without row i)`.
    pub fn maximal_minors(&self) -> Result<Vec<Polynomial>> {
        if self.cols == 0 || self.rows != self.cols + 1 {
            return Err(Error::Shape {
                rows: self.rows,
                cols: self.cols,
                reason: "maximal minors need a (t+1) x t matrix with t >= 1",
            });
        }
        let cols: Vec<usize> = (0..self.cols).collect();
        Ok((0..self.rows)
            .map(|skip| {
                let rows: Vec<usize> = (0..self.rows).filter(|&r| r != skip).collect();
                let det = self.cofactor_det(&rows, &cols);
                if skip % 2 == 1 {
                    -&det
                } else {
                    det
                }
            })
            .collect())
    }

    /// Determinant of a square matrix by cofactor expansion.
    pub fn determinant(&self) -> Result<Polynomial> {
        if self.rows != self.cols || self.rows == 0 {
            return Err(Error::Shape {
                rows: self.rows,
                cols: self.cols,
                reason: "determinant needs a nonempty square matrix",
            });
        }
        let idx: Vec<usize> = (0..self.rows).collect();
        Ok(self.cofactor_det(&idx, &idx))
    }

    fn cofactor_det(&self, rows: &[usize], cols: &[usize]) -> Polynomial {
        if rows.len() == 1 {
            return self.get(rows[0], cols[0]).clone();
        }
        let zero = self.entries[0].scale(0);
        let mut acc = zero;
        for (k, &c) in cols.iter().enumerate() {
            let a = self.get(rows[0], c);
            if a.is_zero() {
                continue;
            }
            let sub_cols: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let minor = self.cofactor_det(&rows[1..], &sub_cols);
            let term = a * &minor;
            acc = if k % 2 == 0 { &acc + &term } else { &acc - &term };
        }
        acc
    }

    /// Pfaffian of an even-sized skew matrix by expansion along the first row.
    pub fn pfaffian(&self) -> Result<Polynomial> {
        self.is_skew_symmetric()?;
        if self.rows % 2 == 1 {
            return Err(Error::Shape {
                rows: self.rows,
                cols: self.cols,
                reason: "Pfaffian needs even size",
            });
        }
        let idx: Vec<usize> = (0..self.rows).collect();
        Ok(self.pfaffian_of(&idx))
    }

    fn pfaffian_of(&self, idx: &[usize]) -> Polynomial {
        if idx.is_empty() {
            return Polynomial::one(self.entries[0].nvars(), self.entries[0].field());
        }
        let first = idx[0];
        let mut acc = self.entries[0].scale(0);
        for (k, &j) in idx.iter().enumerate().skip(1) {
            let a = self.get(first, j);
            if a.is_zero() {
                continue;
            }
            let rest: Vec<usize> = idx[1..].iter().copied().filter(|&x| x != j).collect();
            let term = a * &self.pfaffian_of(&rest);
            // sign (-1)^(k+1) with k the position of j counted from the first row
            acc = if k % 2 == 1 { &acc + &term } else { &acc - &term };
        }
        acc
    }

    /// The maximal sub-Pfaffians of an odd skew matrix: entry `i` is
    /// `(-1)^i Pf(A with row and column i deleted)`.
    pub fn sub_pfaffians(&self) -> Result<Vec<Polynomial>> {
        self.is_skew_symmetric()?;
        if self.rows.is_multiple_of(2) || self.rows < 3 {
            return Err(Error::Shape {
                rows: self.rows,
                cols: self.cols,
                reason: "sub-Pfaffians need odd size >= 3",
            });
        }
        Ok((0..self.rows)
            .map(|skip| {
                let idx: Vec<usize> = (0..self.rows).filter(|&r| r != skip).collect();
                let pf = self.pfaffian_of(&idx);
                if skip % 2 == 1 {
                    -&pf
                } else {
                    pf
                }
            })
            .collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fp() -> PrimeField {
        PrimeField::new(32003).unwrap()
    }

    fn x(i: usize, n: usize) -> Polynomial {
        Polynomial::variable(n, fp(), i)
    }

    #[test]
    fn minors_of_the_rational_normal_curve_matrix() {
        let z = Polynomial::zero(2, fp());
        let m = PolyMatrix::from_rows(vec![
            vec![x(0, 2), z.clone()],
            vec![x(1, 2), x(0, 2)],
            vec![z.clone(), x(1, 2)],
        ])
        .unwrap();
        let minors = m.maximal_minors().unwrap();
        // hand cofactor expansion: x1^2, -x1*x2, x2^2
        assert_eq!(minors[0], &x(1, 2) * &x(1, 2));
        assert_eq!(minors[1], -&(&x(0, 2) * &x(1, 2)));
        assert_eq!(minors[2], &x(0, 2) * &x(0, 2));
    }

    #[test]
    fn minors_shape_cases() {
        let m = PolyMatrix::from_rows(vec![vec![x(0, 2)], vec![x(1, 2)]]).unwrap();
        assert_eq!(m.maximal_minors().unwrap(), vec![x(1, 2), -&x(0, 2)]);
        let z = Polynomial::zero(2, fp());
        let zm = PolyMatrix::from_rows(vec![vec![z.clone(); 2]; 3]).unwrap();
        assert!(zm.maximal_minors().unwrap().iter().all(|p| p.is_zero()));
        let square = PolyMatrix::from_rows(vec![vec![z.clone(); 2]; 2]).unwrap();
        assert!(square.maximal_minors().is_err());
    }

    #[test]
    fn pfaffians_of_three_by_three() {
        let z = Polynomial::zero(3, fp());
        let a = PolyMatrix::skew_from_upper(
            3,
            &[vec![x(0, 3), x(1, 3)], vec![x(2, 3)]],
            &z,
        )
        .unwrap();
        let p = a.sub_pfaffians().unwrap();
        assert_eq!(p, vec![x(2, 3), -&x(1, 3), x(0, 3)]);

        let zero = PolyMatrix::skew_from_upper(3, &[vec![z.clone(), z.clone()], vec![z.clone()]], &z)
            .unwrap();
        assert!(zero.sub_pfaffians().unwrap().iter().all(|p| p.is_zero()));
    }

    #[test]
    fn skew_validation() {
        let z = Polynomial::zero(2, fp());
        let bad = PolyMatrix::from_rows(vec![
            vec![z.clone(), x(0, 2), x(1, 2)],
            vec![x(0, 2), z.clone(), x(1, 2)],
            vec![-&x(1, 2), -&x(1, 2), z.clone()],
        ])
        .unwrap();
        assert_eq!(bad.sub_pfaffians(), Err(Error::NotSkew(0, 1)));
        let even = PolyMatrix::skew_from_upper(2, &[vec![x(0, 2)], vec![]], &z).unwrap();
        assert!(even.sub_pfaffians().is_err());
        assert_eq!(even.pfaffian().unwrap(), x(0, 2));
    }

    #[test]
    fn scalar_inverse_and_determinant() {
        let f = fp();
        let m = ScalarMatrix::from_rows(f, vec![vec![2, 1], vec![1, 1]]).unwrap();
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), ScalarMatrix::identity(2, f));
        assert_eq!(m.determinant().unwrap(), 1);
        let s = ScalarMatrix::from_rows(f, vec![vec![1, 2], vec![2, 4]]).unwrap();
        assert_eq!(s.determinant().unwrap(), 0);
        assert_eq!(s.inverse(), Err(Error::SingularMatrix));
        let p = ScalarMatrix::from_rows(f, vec![vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(p.determinant().unwrap(), f.neg(1));
    }
}
