//! Dense matrices over a generic scalar, with exact Gaussian elimination.

use std::fmt;
use std::ops::{Index, IndexMut, Mul};

use crate::scalar::{Field, Scalar};

/// A dense row-major matrix.
#[derive(Clone, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: fmt::Debug> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<&[T]> = self.data.chunks(self.cols.max(1)).take(self.rows).collect();
        write!(f, "Matrix{}x{}{:?}", self.rows, self.cols, rows)
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;

    fn index(&self, (r, c): (usize, usize)) -> &T {
        debug_assert!(r < self.rows && c < self.cols);
        &self.data[r * self.cols + c]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut T {
        debug_assert!(r < self.rows && c < self.cols);
        &mut self.data[r * self.cols + c]
    }
}

impl<T: Scalar> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    /// Builds a matrix from its rows. All rows must have length `cols`.
    pub fn from_rows(rows: usize, cols: usize, entries: Vec<Vec<T>>) -> Self {
        assert_eq!(entries.len(), rows, "row count mismatch");
        let mut data = Vec::with_capacity(rows * cols);
        for row in entries {
            assert_eq!(row.len(), cols, "column count mismatch");
            data.extend(row);
        }
        Matrix { rows, cols, data }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn column(v: Vec<T>) -> Self {
        Matrix { rows: v.len(), cols: 1, data: v }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn col(&self, c: usize) -> Vec<T> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn scale(&self, s: &T) -> Self {
        self.map(|x| x.clone() * s.clone())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a.clone() + b.clone()).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a.clone() - b.clone()).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn trace(&self) -> T {
        (0..self.rows.min(self.cols)).fold(T::zero(), |acc, i| acc + self[(i, i)].clone())
    }

    /// Exact zero test (no tolerance).
    pub fn is_exactly_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    /// Columns `cols` of `self`, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> Self {
        Self::from_fn(self.rows, cols.len(), |r, c| self[(r, cols[c])].clone())
    }

    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows);
        Self::from_fn(self.rows, self.cols + other.cols, |r, c| {
            if c < self.cols {
                self[(r, c)].clone()
            } else {
                other[(r, c - self.cols)].clone()
            }
        })
    }

    /// Embeds `block` at offset `(r0, c0)`.
    pub fn set_block(&mut self, r0: usize, c0: usize, block: &Self) {
        for r in 0..block.rows {
            for c in 0..block.cols {
                self[(r0 + r, c0 + c)] = block[(r, c)].clone();
            }
        }
    }

    pub fn block_diagonal(blocks: &[Self]) -> Self {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut m = Self::zeros(rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            m.set_block(r0, c0, b);
            r0 += b.rows;
            c0 += b.cols;
        }
        m
    }
}

impl<'a, T: Scalar> Mul for &'a Matrix<T> {
    type Output = Matrix<T>;

    fn mul(self, rhs: &'a Matrix<T>) -> Matrix<T> {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in product");
        let mut out = Matrix::<T>::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] = out[(i, j)].clone() + a.clone() * b.clone();
                    }
                }
            }
        }
        out
    }
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug)]
pub struct Echelon<T> {
    pub reduced: Matrix<T>,
    pub pivots: Vec<usize>,
}

impl<T: Field> Matrix<T> {
    /// Tolerance-aware zero test; exact for rational scalars.
    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Field::is_negligible)
    }

    /// Gauss-Jordan elimination to reduced row echelon form.
    pub fn rref(&self) -> Echelon<T> {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let mut best: Option<usize> = None;
            for r in row..m.rows {
                let v = &m[(r, col)];
                if v.is_negligible() {
                    continue;
                }
                match best {
                    None => best = Some(r),
                    Some(b) if v.better_pivot(&m[(b, col)]) => best = Some(r),
                    _ => {}
                }
            }
            let Some(p) = best else { continue };
            if p != row {
                for c in 0..m.cols {
                    m.data.swap(p * m.cols + c, row * m.cols + c);
                }
            }
            let inv = T::one() / m[(row, col)].clone();
            for c in col..m.cols {
                m[(row, c)] = m[(row, c)].clone() * inv.clone();
            }
            for r in 0..m.rows {
                if r == row {
                    continue;
                }
                let factor = m[(r, col)].clone();
                if factor.is_negligible() {
                    continue;
                }
                for c in col..m.cols {
                    let delta = factor.clone() * m[(row, c)].clone();
                    m[(r, c)] = m[(r, c)].clone() - delta;
                }
            }
            pivots.push(col);
            row += 1;
        }
        Echelon { reduced: m, pivots }
    }

    pub fn rank(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        self.rref().pivots.len()
    }

    /// Basis of the right null space, one basis vector per column.
    pub fn nullspace(&self) -> Matrix<T> {
        let ech = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !ech.pivots.contains(c)).collect();
        let mut basis = Matrix::zeros(self.cols, free.len());
        for (k, &f) in free.iter().enumerate() {
            basis[(f, k)] = T::one();
            for (r, &p) in ech.pivots.iter().enumerate() {
                basis[(p, k)] = -ech.reduced[(r, f)].clone();
            }
        }
        basis
    }

    /// Some solution `X` of `self * X = rhs`, if the system is consistent.
    pub fn solve(&self, rhs: &Matrix<T>) -> Option<Matrix<T>> {
        assert_eq!(self.rows, rhs.rows);
        let ech = self.hstack(rhs).rref();
        if ech.pivots.iter().any(|&p| p >= self.cols) {
            return None;
        }
        let mut x = Matrix::zeros(self.cols, rhs.cols);
        for (r, &p) in ech.pivots.iter().enumerate() {
            for c in 0..rhs.cols {
                x[(p, c)] = ech.reduced[(r, self.cols + c)].clone();
            }
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Matrix<T>> {
        if !self.is_square() {
            return None;
        }
        let x = self.solve(&Matrix::identity(self.rows))?;
        (self.rank() == self.rows).then_some(x)
    }

    /// `L` with `L * self = I`; `self` must have full column rank.
    pub fn left_inverse(&self) -> Option<Matrix<T>> {
        Some(self.transpose().solve(&Matrix::identity(self.cols))?.transpose())
    }

    /// `S` with `self * S = I`; `self` must have full row rank.
    pub fn right_inverse(&self) -> Option<Matrix<T>> {
        self.solve(&Matrix::identity(self.rows))
    }

    /// Basis (as columns) of the column space.
    pub fn column_space(&self) -> Matrix<T> {
        let ech = self.rref();
        self.select_columns(&ech.pivots)
    }

    /// Indices of standard basis vectors completing the column space of
    /// `self` to the whole ambient space, chosen greedily in index order.
    pub fn complement_in_standard_basis(&self) -> Vec<usize> {
        let n = self.rows;
        let ech = self.hstack(&Matrix::identity(n)).rref();
        ech.pivots.into_iter().filter(|&p| p >= self.cols).map(|p| p - self.cols).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;
    use num_traits::FromPrimitive;

    fn q(rows: Vec<Vec<i64>>) -> Matrix<Rational> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        Matrix::from_rows(
            r,
            c,
            rows.into_iter()
                .map(|row| row.into_iter().map(|x| Rational::from_i64(x).unwrap()).collect())
                .collect(),
        )
    }

    #[test]
    fn rank_and_nullspace() {
        let m = q(vec![vec![1, 2, 3], vec![2, 4, 6], vec![1, 0, 1]]);
        assert_eq!(m.rank(), 2);
        let ns = m.nullspace();
        assert_eq!(ns.cols(), 1);
        assert!((&m * &ns).is_zero());
    }

    #[test]
    fn inverse_roundtrip() {
        let m = q(vec![vec![2, 1], vec![1, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(&m * &inv, Matrix::identity(2));
        assert!(q(vec![vec![1, 1], vec![1, 1]]).inverse().is_none());
    }

    #[test]
    fn one_sided_inverses() {
        let b = q(vec![vec![1, 0], vec![1, 1], vec![0, 2]]);
        let l = b.left_inverse().unwrap();
        assert_eq!(&l * &b, Matrix::identity(2));
        let p = b.transpose();
        let s = p.right_inverse().unwrap();
        assert_eq!(&p * &s, Matrix::identity(2));
    }

    #[test]
    fn complement_extends_to_basis() {
        let span = q(vec![vec![1], vec![1], vec![0]]);
        let ext = span.complement_in_standard_basis();
        assert_eq!(ext.len(), 2);
        let mut full = span.clone();
        for e in ext {
            let mut v = Matrix::zeros(3, 1);
            v[(e, 0)] = Rational::from_i64(1).unwrap();
            full = full.hstack(&v);
        }
        assert_eq!(full.rank(), 3);
    }

    #[test]
    fn float_elimination_agrees() {
        let m = Matrix::from_rows(2, 3, vec![vec![1.0, 2.0, 3.0], vec![2.0, 4.0, 6.0]]);
        assert_eq!(m.rank(), 1);
        assert_eq!(m.nullspace().cols(), 2);
    }
}
