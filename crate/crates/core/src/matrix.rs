//! Dense matrices over an exact [`Field`], indexed from 1.

use std::fmt;
use std::ops::{Index, IndexMut};

use crate::error::{Error, Result};
use crate::field::{Field, Q};

#[derive(Clone, PartialEq)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

/// Square matrix of rationals.
pub type QMatrix = Matrix<Q>;

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![F::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for k in 1..=n {
            m[(k, k)] = F::one();
        }
        m
    }

    /// Matrix unit `e_{r,c}` of size `n`.
    pub fn unit(n: usize, r: usize, c: usize) -> Self {
        let mut m = Self::zeros(n, n);
        m[(r, c)] = F::one();
        m
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 1..=rows {
            for c in 1..=cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
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

    pub fn to_rows(&self) -> Vec<Vec<F>> {
        self.data.chunks(self.cols.max(1)).map(<[F]>::to_vec).take(self.rows).collect()
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> Matrix<G> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(F::is_zero)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in product");
        let mut out = Self::zeros(self.rows, rhs.cols);
        for r in 1..=self.rows {
            for k in 1..=self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 1..=rhs.cols {
                    let b = &rhs[(k, c)];
                    if !b.is_zero() {
                        let prod = a.clone() * b.clone();
                        let cell = &mut out[(r, c)];
                        *cell = cell.clone() + prod;
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a.clone() + b.clone()).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a.clone() - b.clone()).collect(),
        }
    }

    pub fn is_upper_triangular(&self) -> bool {
        (1..=self.rows).all(|r| (1..r.min(self.cols + 1)).all(|c| self[(r, c)].is_zero()))
    }

    pub fn is_strictly_lower(&self) -> bool {
        (1..=self.rows).all(|r| (r..=self.cols).all(|c| self[(r, c)].is_zero()))
    }

    /// Strictly lower-triangular part.
    pub fn low(&self) -> Self {
        Self::from_fn(self.rows, self.cols, |r, c| {
            if r > c {
                self[(r, c)].clone()
            } else {
                F::zero()
            }
        })
    }

    /// Zeroes the first `i - 1` rows and the last `n - j` columns.
    pub fn pi_truncate(&self, i: usize, j: usize) -> Result<Self> {
        self.check_cell(i, j)?;
        Ok(Self::from_fn(self.rows, self.cols, |r, c| {
            if r >= i && c <= j {
                self[(r, c)].clone()
            } else {
                F::zero()
            }
        }))
    }

    /// Rank of the truncation at `(i, j)`, computed on the surviving block only.
    pub fn pi_rank(&self, i: usize, j: usize) -> usize {
        self.submatrix(i..=self.rows, 1..=j).rank()
    }

    /// Rank of the upper-left `i × j` block.
    pub fn upper_left_rank(&self, i: usize, j: usize) -> usize {
        self.submatrix(1..=i, 1..=j).rank()
    }

    pub fn submatrix(
        &self,
        rows: std::ops::RangeInclusive<usize>,
        cols: std::ops::RangeInclusive<usize>,
    ) -> Self {
        let rs: Vec<usize> = rows.collect();
        let cs: Vec<usize> = cols.collect();
        Self::from_fn(rs.len(), cs.len(), |r, c| self[(rs[r - 1], cs[c - 1])].clone())
    }

    fn check_cell(&self, i: usize, j: usize) -> Result<()> {
        if i == 0 || i > self.rows {
            return Err(Error::IndexOutOfRange { index: i, n: self.rows });
        }
        if j == 0 || j > self.cols {
            return Err(Error::IndexOutOfRange { index: j, n: self.cols });
        }
        Ok(())
    }

    /// Row echelon form in place; returns the rank and the sign-adjusted
    /// product of pivots (the determinant, for square input).
    fn eliminate(&mut self) -> (usize, F) {
        let (rows, cols) = (self.rows, self.cols);
        let mut rank = 0;
        let mut det = F::one();
        for c in 0..cols {
            if rank == rows {
                break;
            }
            let Some(p) = (rank..rows).find(|&r| !self.data[r * cols + c].is_zero()) else {
                det = F::zero();
                continue;
            };
            if p != rank {
                for k in 0..cols {
                    self.data.swap(p * cols + k, rank * cols + k);
                }
                det = -det;
            }
            let pivot = self.data[rank * cols + c].clone();
            det = det * pivot.clone();
            for r in rank + 1..rows {
                let lead = self.data[r * cols + c].clone();
                if lead.is_zero() {
                    continue;
                }
                let factor = lead / pivot.clone();
                for k in c..cols {
                    let top = self.data[rank * cols + k].clone();
                    if !top.is_zero() {
                        let cell = &mut self.data[r * cols + k];
                        *cell = cell.clone() - factor.clone() * top;
                    }
                }
            }
            rank += 1;
        }
        if rank < rows.min(cols) {
            det = F::zero();
        }
        (rank, det)
    }

    /// Rank by Gaussian elimination over the field.
    pub fn rank(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        self.clone().eliminate().0
    }

    pub fn det(&self) -> F {
        assert!(self.is_square(), "determinant of a non-square matrix");
        if self.rows == 0 {
            return F::one();
        }
        self.clone().eliminate().1
    }

    /// Inverse of an invertible upper-triangular matrix by back-substitution.
    pub fn inverse_upper(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::NotInvertible);
        }
        if !self.is_upper_triangular() {
            return Err(Error::NotUpperTriangular);
        }
        let n = self.rows;
        if (1..=n).any(|k| self[(k, k)].is_zero()) {
            return Err(Error::NotInvertible);
        }
        let mut inv = Self::zeros(n, n);
        for c in 1..=n {
            for r in (1..=c).rev() {
                let mut acc = if r == c { F::one() } else { F::zero() };
                for k in r + 1..=c {
                    let a = &self[(r, k)];
                    if !a.is_zero() {
                        acc = acc - a.clone() * inv[(k, c)].clone();
                    }
                }
                inv[(r, c)] = acc / self[(r, r)].clone();
            }
        }
        Ok(inv)
    }
}

impl<F> Index<(usize, usize)> for Matrix<F> {
    type Output = F;
    fn index(&self, (r, c): (usize, usize)) -> &F {
        assert!(r >= 1 && r <= self.rows && c >= 1 && c <= self.cols, "index ({r},{c}) out of range");
        &self.data[(r - 1) * self.cols + (c - 1)]
    }
}

impl<F> IndexMut<(usize, usize)> for Matrix<F> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut F {
        assert!(r >= 1 && r <= self.rows && c >= 1 && c <= self.cols, "index ({r},{c}) out of range");
        &mut self.data[(r - 1) * self.cols + (c - 1)]
    }
}

impl<F: fmt::Debug> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            write!(f, "  ")?;
            for c in 0..self.cols {
                write!(f, "{:?} ", self.data[r * self.cols + c])?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

impl<F: fmt::Display> fmt::Display for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.data.iter().map(ToString::to_string).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                if c > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{:>width$}", cells[r * self.cols + c])?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Rank of a rational matrix.
pub fn rank(a: &QMatrix) -> usize {
    a.rank()
}
