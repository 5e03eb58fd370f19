//! Power series in `h` truncated at a fixed order.
//!
//! A series of order `K` stores `c_0..=c_K` and stands for
//! `sum c_j h^j + O(h^{K+1})`. Binary operations truncate to the smaller order.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::rat::Rat;
use crate::error::AlgebraError;

pub const DEFAULT_ORDER: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TruncSeries {
    coeffs: Vec<Rat>,
}

impl TruncSeries {
    /// Order is `coeffs.len() - 1`; an empty vector is read as the order-0 zero.
    pub fn from_coeffs(mut coeffs: Vec<Rat>) -> Self {
        if coeffs.is_empty() {
            coeffs.push(Rat::zero());
        }
        TruncSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        TruncSeries {
            coeffs: vec![Rat::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(Rat::one(), order)
    }

    pub fn constant(c: Rat, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// `c * h^power`, dropped when `power > order`.
    pub fn monomial(c: Rat, power: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if power <= order {
            s.coeffs[power] = c;
        }
        s
    }

    /// The series `h`.
    pub fn h(order: usize) -> Self {
        Self::monomial(Rat::one(), 1, order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, j: usize) -> Rat {
        self.coeffs.get(j).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn truncate(&self, order: usize) -> Self {
        let keep = order.min(self.order());
        TruncSeries {
            coeffs: self.coeffs[..=keep].to_vec(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, factor: &Rat) -> Self {
        TruncSeries {
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    /// Substitutes `h -> -h`.
    pub fn reflect(&self) -> Self {
        TruncSeries {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(j, c)| if j % 2 == 1 { -c } else { c.clone() })
                .collect(),
        }
    }

    /// `a / b` for `b` with invertible constant term.
    pub fn div(&self, divisor: &Self) -> Result<Self, AlgebraError> {
        let order = self.order().min(divisor.order());
        let b0 = &divisor.coeffs[0];
        if b0.is_zero() {
            return Err(AlgebraError::NotInvertible);
        }
        let mut q: Vec<Rat> = Vec::with_capacity(order + 1);
        for j in 0..=order {
            let mut acc = self.coeffs[j].clone();
            for i in 1..=j {
                acc -= &divisor.coeffs[i] * &q[j - i];
            }
            q.push(acc / b0);
        }
        Ok(TruncSeries { coeffs: q })
    }

    /// Logarithm of a series with constant term 1, summed as
    /// `sum_{j>=1} (-1)^{j-1} (f-1)^j / j`.
    pub fn log(&self) -> Result<Self, AlgebraError> {
        if !self.coeffs[0].is_one() {
            return Err(AlgebraError::Domain {
                op: "log",
                expected: "1",
                found: self.coeffs[0].to_string(),
            });
        }
        let order = self.order();
        let mut x = self.clone();
        x.coeffs[0] = Rat::zero();
        let mut out = TruncSeries::zero(order);
        let mut power = x.clone();
        for j in 1..=order {
            let factor = Rat::new(BigInt::from(if j % 2 == 1 { 1 } else { -1 }), BigInt::from(j));
            out = &out + &power.scale(&factor);
            power = &power * &x;
        }
        Ok(out)
    }

    /// Exponential of a series with constant term 0, summed as `sum f^j / j!`.
    pub fn exp(&self) -> Result<Self, AlgebraError> {
        if !self.coeffs[0].is_zero() {
            return Err(AlgebraError::Domain {
                op: "exp",
                expected: "0",
                found: self.coeffs[0].to_string(),
            });
        }
        let order = self.order();
        let mut out = TruncSeries::one(order);
        let mut term = TruncSeries::one(order);
        for j in 1..=order {
            term = (&term * self).scale(&Rat::new(BigInt::one(), BigInt::from(j)));
            out = &out + &term;
        }
        Ok(out)
    }

    /// Integer power; negative exponents need an invertible constant term.
    pub fn powi(&self, exp: i64) -> Result<Self, AlgebraError> {
        let base = if exp < 0 {
            TruncSeries::one(self.order()).div(self)?
        } else {
            self.clone()
        };
        Ok((0..exp.unsigned_abs()).fold(TruncSeries::one(self.order()), |acc, _| &acc * &base))
    }
}

pub fn series_log(f: &TruncSeries) -> Result<TruncSeries, AlgebraError> {
    f.log()
}

pub fn series_exp(f: &TruncSeries) -> Result<TruncSeries, AlgebraError> {
    f.exp()
}

pub fn series_div(a: &TruncSeries, b: &TruncSeries) -> Result<TruncSeries, AlgebraError> {
    a.div(b)
}

impl fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            match (first, c.is_negative()) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            let mono = match j {
                0 => String::new(),
                1 => "h".to_string(),
                _ => format!("h^{j}"),
            };
            if mono.is_empty() {
                write!(f, "{magnitude}")?;
            } else if magnitude.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{magnitude} {mono}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(h^{})", self.order() + 1)
    }
}

impl Add for &TruncSeries {
    type Output = TruncSeries;

    fn add(self, rhs: &TruncSeries) -> TruncSeries {
        let order = self.order().min(rhs.order());
        TruncSeries {
            coeffs: (0..=order).map(|j| &self.coeffs[j] + &rhs.coeffs[j]).collect(),
        }
    }
}

impl Sub for &TruncSeries {
    type Output = TruncSeries;

    fn sub(self, rhs: &TruncSeries) -> TruncSeries {
        let order = self.order().min(rhs.order());
        TruncSeries {
            coeffs: (0..=order).map(|j| &self.coeffs[j] - &rhs.coeffs[j]).collect(),
        }
    }
}

impl Mul for &TruncSeries {
    type Output = TruncSeries;

    fn mul(self, rhs: &TruncSeries) -> TruncSeries {
        let order = self.order().min(rhs.order());
        let mut coeffs = vec![Rat::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                coeffs[i + j] += a * b;
            }
        }
        TruncSeries { coeffs }
    }
}

impl Neg for &TruncSeries {
    type Output = TruncSeries;

    fn neg(self) -> TruncSeries {
        TruncSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}
