//! Dense row-major matrices over an exact ring.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use super::rat::Rat;
use super::Ring;
use crate::error::AlgebraError;

/// Exact division, defined when the quotient exists in the ring.
pub trait ExactDiv: Sized {
    fn div_exact(&self, divisor: &Self) -> Option<Self>;
}

impl ExactDiv for Rat {
    fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            None
        } else {
            Some(self / divisor)
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

pub type RatMatrix = Matrix<Rat>;

impl<T: fmt::Debug> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.data.chunks(self.cols.max(1)).take(self.rows)).finish()
    }
}

impl<T: fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.data[r * self.cols + c])?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl<T> Matrix<T> {
    pub fn from_vec(rows: usize, cols: usize, data: Vec<T>) -> Result<Self, AlgebraError> {
        if data.len() != rows * cols {
            return Err(AlgebraError::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Matrix { rows, cols, data })
    }

    /// Builds a matrix from nested rows; ragged input is rejected.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self, AlgebraError> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if let Some((i, bad)) = rows.iter().enumerate().find(|(_, r)| r.len() != ncols) {
            return Err(AlgebraError::DimensionMismatch(format!(
                "row {i} has {} entries, expected {ncols}",
                bad.len()
            )));
        }
        let data = rows.into_iter().flatten().collect();
        Ok(Matrix {
            rows: nrows,
            cols: ncols,
            data,
        })
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

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &T {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: T) {
        self.data[r * self.cols + c] = value;
    }

    pub fn entries(&self) -> impl Iterator<Item = &T> {
        self.data.iter()
    }

    pub fn row_vecs(&self) -> Vec<Vec<T>>
    where
        T: Clone,
    {
        (0..self.rows)
            .map(|r| self.data[r * self.cols..(r + 1) * self.cols].to_vec())
            .collect()
    }

    pub fn map<U>(&self, f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn transpose(&self) -> Self
    where
        T: Clone,
    {
        Matrix::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}

impl<T: Ring> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix::from_fn(rows, cols, |_, _| T::zero())
    }

    pub fn identity(size: usize) -> Self {
        Matrix::from_fn(size, size, |r, c| if r == c { T::one() } else { T::zero() })
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn trace(&self) -> T {
        (0..self.rows.min(self.cols)).fold(T::zero(), |acc, i| acc + self.get(i, i).clone())
    }

    pub fn scale(&self, factor: &T) -> Self {
        self.map(|x| factor.clone() * x.clone())
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        if self.cols != rhs.rows {
            return Err(AlgebraError::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(Matrix::from_fn(self.rows, rhs.cols, |r, c| {
            (0..self.cols).fold(T::zero(), |acc, i| {
                acc + self.get(r, i).clone() * rhs.get(i, c).clone()
            })
        }))
    }

    /// `Tr(self * rhs)` without forming the product.
    pub fn trace_of_product(&self, rhs: &Self) -> T {
        assert_eq!(self.cols, rhs.rows);
        assert_eq!(self.rows, rhs.cols);
        let mut acc = T::zero();
        for i in 0..self.rows {
            for j in 0..self.cols {
                acc = acc + self.get(i, j).clone() * rhs.get(j, i).clone();
            }
        }
        acc
    }

    /// Block-diagonal concatenation `diag(self, other)`.
    pub fn block_diag(&self, other: &Self) -> Self {
        Matrix::from_fn(self.rows + other.rows, self.cols + other.cols, |r, c| {
            match (r < self.rows, c < self.cols) {
                (true, true) => self.get(r, c).clone(),
                (false, false) => other.get(r - self.rows, c - self.cols).clone(),
                _ => T::zero(),
            }
        })
    }

    /// Powers `self^0 ..= self^max` of a square matrix.
    pub fn power_ladder(&self, max: usize) -> Vec<Self> {
        assert!(self.is_square());
        let mut ladder = Vec::with_capacity(max + 1);
        ladder.push(Matrix::identity(self.rows));
        for p in 1..=max {
            let next = &ladder[p - 1] * self;
            ladder.push(next);
        }
        ladder
    }

    /// Laplace expansion along the first row.
    pub fn det_cofactor(&self) -> Result<T, AlgebraError> {
        self.require_square()?;
        Ok(cofactor(self))
    }

    fn require_square(&self) -> Result<(), AlgebraError> {
        if self.is_square() {
            Ok(())
        } else {
            Err(AlgebraError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }
}

fn cofactor<T: Ring>(m: &Matrix<T>) -> T {
    let n = m.rows;
    match n {
        0 => T::one(),
        1 => m.get(0, 0).clone(),
        2 => m.get(0, 0).clone() * m.get(1, 1).clone() - m.get(0, 1).clone() * m.get(1, 0).clone(),
        _ => {
            let mut acc = T::zero();
            for c in 0..n {
                let entry = m.get(0, c);
                if entry.is_zero() {
                    continue;
                }
                let minor = Matrix::from_fn(n - 1, n - 1, |r, cc| {
                    m.get(r + 1, if cc < c { cc } else { cc + 1 }).clone()
                });
                let term = entry.clone() * cofactor(&minor);
                acc = if c % 2 == 0 { acc + term } else { acc - term };
            }
            acc
        }
    }
}

impl<T: Ring + ExactDiv> Matrix<T> {
    /// Fraction-free Gaussian elimination; every division is exact.
    pub fn det_bareiss(&self) -> Result<T, AlgebraError> {
        self.require_square()?;
        let n = self.rows;
        if n == 0 {
            return Ok(T::one());
        }
        let mut m = self.clone();
        let mut negate = false;
        let mut prev = T::one();
        for k in 0..n - 1 {
            if m.get(k, k).is_zero() {
                match (k + 1..n).find(|&r| !m.get(r, k).is_zero()) {
                    Some(r) => {
                        m.swap_rows(k, r);
                        negate = !negate;
                    }
                    None => return Ok(T::zero()),
                }
            }
            let pivot = m.get(k, k).clone();
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = pivot.clone() * m.get(i, j).clone()
                        - m.get(i, k).clone() * m.get(k, j).clone();
                    let q = num.div_exact(&prev).ok_or(AlgebraError::InexactDivision)?;
                    m.set(i, j, q);
                }
                m.set(i, k, T::zero());
            }
            prev = pivot;
        }
        let det = m.get(n - 1, n - 1).clone();
        Ok(if negate { -det } else { det })
    }

    /// Cofactor expansion up to 4x4, Bareiss beyond.
    pub fn determinant(&self) -> Result<T, AlgebraError> {
        if self.rows <= 4 {
            self.det_cofactor()
        } else {
            self.det_bareiss()
        }
    }
}

impl RatMatrix {
    pub fn is_integral(&self) -> bool {
        self.data.iter().all(|x| x.is_integer())
    }

    /// Gauss-Jordan inverse; `None` for singular input.
    pub fn inverse(&self) -> Option<RatMatrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = RatMatrix::identity(n);
        for col in 0..n {
            let pivot_row = (col..n).find(|&r| !a.get(r, col).is_zero())?;
            a.swap_rows(col, pivot_row);
            inv.swap_rows(col, pivot_row);
            let p = a.get(col, col).clone();
            for c in 0..n {
                a.set(col, c, a.get(col, c) / &p);
                inv.set(col, c, inv.get(col, c) / &p);
            }
            for r in 0..n {
                if r == col || a.get(r, col).is_zero() {
                    continue;
                }
                let factor = a.get(r, col).clone();
                for c in 0..n {
                    a.set(r, c, a.get(r, c) - &factor * a.get(col, c));
                    inv.set(r, c, inv.get(r, c) - &factor * inv.get(col, c));
                }
            }
        }
        Some(inv)
    }
}

impl<T: Ring> Mul for &Matrix<T> {
    type Output = Matrix<T>;

    fn mul(self, rhs: &Matrix<T>) -> Matrix<T> {
        self.checked_mul(rhs).expect("matrix product shape mismatch")
    }
}

impl<T: Ring> Add for &Matrix<T> {
    type Output = Matrix<T>;

    fn add(self, rhs: &Matrix<T>) -> Matrix<T> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix sum shape mismatch");
        Matrix::from_fn(self.rows, self.cols, |r, c| {
            self.get(r, c).clone() + rhs.get(r, c).clone()
        })
    }
}

impl<T: Ring> Sub for &Matrix<T> {
    type Output = Matrix<T>;

    fn sub(self, rhs: &Matrix<T>) -> Matrix<T> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix difference shape mismatch");
        Matrix::from_fn(self.rows, self.cols, |r, c| {
            self.get(r, c).clone() - rhs.get(r, c).clone()
        })
    }
}

impl<T: Ring> Neg for &Matrix<T> {
    type Output = Matrix<T>;

    fn neg(self) -> Matrix<T> {
        self.map(|x| -x.clone())
    }
}
