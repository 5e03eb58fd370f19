//! Bivariate power series in `X` and `Y`.
//!
//! [`BiSeries`] truncates in `Y` only and keeps each `Y^j` coefficient as an
//! exact polynomial in `X`. [`TotalDegreeSeries`] truncates by total degree.

use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::poly::Poly;
use super::rat::Rat;
use crate::error::AlgebraError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiSeries {
    coeffs: Vec<Poly>,
}

impl BiSeries {
    pub fn zero(order_y: usize) -> Self {
        BiSeries {
            coeffs: vec![Poly::zero(); order_y + 1],
        }
    }

    pub fn from_poly(p: Poly, order_y: usize) -> Self {
        let mut s = Self::zero(order_y);
        s.coeffs[0] = p;
        s
    }

    /// Series with `Y^j` coefficient `f(j)` for `j <= order_y`.
    pub fn from_fn(order_y: usize, f: impl FnMut(usize) -> Poly) -> Self {
        BiSeries {
            coeffs: (0..=order_y).map(f).collect(),
        }
    }

    pub fn order_y(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, j: usize) -> &Poly {
        &self.coeffs[j]
    }

    pub fn coeffs(&self) -> &[Poly] {
        &self.coeffs
    }

    pub fn set_coeff(&mut self, j: usize, p: Poly) {
        self.coeffs[j] = p;
    }

    /// Multiplies by `Y`, dropping the top coefficient.
    pub fn shift_y(&self) -> Self {
        let order = self.order_y();
        BiSeries::from_fn(order, |j| if j == 0 { Poly::zero() } else { self.coeffs[j - 1].clone() })
    }

    pub fn scale(&self, p: &Poly) -> Self {
        BiSeries {
            coeffs: self.coeffs.iter().map(|c| c * p).collect(),
        }
    }

    /// `Y`-derivative; the result has order one less.
    pub fn derivative_y(&self) -> Self {
        let order = self.order_y();
        if order == 0 {
            return BiSeries::zero(0);
        }
        BiSeries::from_fn(order - 1, |j| {
            self.coeffs[j + 1].scale(&Rat::from_integer((j as i64 + 1).into()))
        })
    }

    pub fn truncate(&self, order_y: usize) -> Self {
        BiSeries {
            coeffs: self.coeffs[..=order_y.min(self.order_y())].to_vec(),
        }
    }

    /// Multiplicative inverse; the `Y^0` coefficient must be a nonzero constant.
    pub fn inverse(&self) -> Result<Self, AlgebraError> {
        let head = &self.coeffs[0];
        if !head.is_constant() || head.is_zero() {
            return Err(AlgebraError::NotInvertible);
        }
        let inv0 = Rat::one() / head.constant_term();
        let order = self.order_y();
        let mut out: Vec<Poly> = Vec::with_capacity(order + 1);
        out.push(Poly::constant(inv0.clone()));
        for j in 1..=order {
            let mut acc = Poly::zero();
            for i in 1..=j {
                acc = &acc + &(&self.coeffs[i] * &out[j - i]);
            }
            out.push((-&acc).scale(&inv0));
        }
        Ok(BiSeries { coeffs: out })
    }
}

impl Add for &BiSeries {
    type Output = BiSeries;

    fn add(self, rhs: &BiSeries) -> BiSeries {
        let order = self.order_y().min(rhs.order_y());
        BiSeries::from_fn(order, |j| &self.coeffs[j] + &rhs.coeffs[j])
    }
}

impl Sub for &BiSeries {
    type Output = BiSeries;

    fn sub(self, rhs: &BiSeries) -> BiSeries {
        let order = self.order_y().min(rhs.order_y());
        BiSeries::from_fn(order, |j| &self.coeffs[j] - &rhs.coeffs[j])
    }
}

impl Mul for &BiSeries {
    type Output = BiSeries;

    fn mul(self, rhs: &BiSeries) -> BiSeries {
        let order = self.order_y().min(rhs.order_y());
        BiSeries::from_fn(order, |j| {
            (0..=j).fold(Poly::zero(), |acc, i| &acc + &(&self.coeffs[i] * &rhs.coeffs[j - i]))
        })
    }
}

impl Neg for &BiSeries {
    type Output = BiSeries;

    fn neg(self) -> BiSeries {
        BiSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

/// Power series in `X, Y` keeping every monomial `X^i Y^j` with `i + j <= max_degree`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TotalDegreeSeries {
    max_degree: usize,
    // coeffs[i][j] is the coefficient of X^i Y^j, j <= max_degree - i
    coeffs: Vec<Vec<Rat>>,
}

impl TotalDegreeSeries {
    pub fn zero(max_degree: usize) -> Self {
        TotalDegreeSeries {
            max_degree,
            coeffs: (0..=max_degree).map(|i| vec![Rat::zero(); max_degree - i + 1]).collect(),
        }
    }

    pub fn monomial(c: Rat, x_pow: usize, y_pow: usize, max_degree: usize) -> Self {
        let mut s = Self::zero(max_degree);
        if x_pow + y_pow <= max_degree {
            s.coeffs[x_pow][y_pow] = c;
        }
        s
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn coeff(&self, x_pow: usize, y_pow: usize) -> Rat {
        if x_pow + y_pow > self.max_degree {
            return Rat::zero();
        }
        self.coeffs[x_pow][y_pow].clone()
    }

    pub fn scale(&self, factor: &Rat) -> Self {
        TotalDegreeSeries {
            max_degree: self.max_degree,
            coeffs: self
                .coeffs
                .iter()
                .map(|row| row.iter().map(|c| c * factor).collect())
                .collect(),
        }
    }

    fn combine(&self, rhs: &Self, f: impl Fn(&Rat, &Rat) -> Rat) -> Self {
        let d = self.max_degree.min(rhs.max_degree);
        let mut out = Self::zero(d);
        for i in 0..=d {
            for j in 0..=d - i {
                out.coeffs[i][j] = f(&self.coeffs[i][j], &rhs.coeffs[i][j]);
            }
        }
        out
    }

    pub fn constant_term(&self) -> Rat {
        self.coeffs[0][0].clone()
    }

    /// `log(1 + self)` for a series without constant term.
    pub fn log_one_plus(&self) -> Result<Self, AlgebraError> {
        if !self.constant_term().is_zero() {
            return Err(AlgebraError::Domain {
                op: "log(1 + w)",
                expected: "0",
                found: self.constant_term().to_string(),
            });
        }
        let mut out = Self::zero(self.max_degree);
        let mut power = self.clone();
        for j in 1..=self.max_degree {
            let sign = if j % 2 == 1 { 1 } else { -1 };
            out = &out + &power.scale(&Rat::new(sign.into(), (j as i64).into()));
            power = &power * self;
        }
        Ok(out)
    }
}

impl Add for &TotalDegreeSeries {
    type Output = TotalDegreeSeries;

    fn add(self, rhs: &TotalDegreeSeries) -> TotalDegreeSeries {
        self.combine(rhs, |a, b| a + b)
    }
}

impl Sub for &TotalDegreeSeries {
    type Output = TotalDegreeSeries;

    fn sub(self, rhs: &TotalDegreeSeries) -> TotalDegreeSeries {
        self.combine(rhs, |a, b| a - b)
    }
}

impl Mul for &TotalDegreeSeries {
    type Output = TotalDegreeSeries;

    fn mul(self, rhs: &TotalDegreeSeries) -> TotalDegreeSeries {
        let d = self.max_degree.min(rhs.max_degree);
        let mut out = TotalDegreeSeries::zero(d);
        for i1 in 0..=d {
            for j1 in 0..=d - i1 {
                let a = &self.coeffs[i1][j1];
                if a.is_zero() {
                    continue;
                }
                for i2 in 0..=d - i1 - j1 {
                    for j2 in 0..=d - i1 - j1 - i2 {
                        let b = &rhs.coeffs[i2][j2];
                        if !b.is_zero() {
                            out.coeffs[i1 + i2][j1 + j2] += a * b;
                        }
                    }
                }
            }
        }
        out
    }
}
