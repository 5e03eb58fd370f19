//! Dense univariate polynomials in `X` over the rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::rat::Rat;

/// Coefficients in ascending degree, with no trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<Rat>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn constant(c: Rat) -> Self {
        Poly::new(vec![c])
    }

    /// The polynomial `X`.
    pub fn x() -> Self {
        Poly::new(vec![Rat::zero(), Rat::one()])
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, degree: usize) -> Rat {
        self.coeffs.get(degree).cloned().unwrap_or_else(Rat::zero)
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn scale(&self, factor: &Rat) -> Self {
        Poly::new(self.coeffs.iter().map(|c| c * factor).collect())
    }

    pub fn constant_term(&self) -> Rat {
        self.coeff(0)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn pow(&self, exp: u32) -> Self {
        (0..exp).fold(Poly::one(), |acc, _| &acc * self)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate().rev() {
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
            let mono = match d {
                0 => String::new(),
                1 => "X".to_string(),
                _ => format!("X^{d}"),
            };
            match (mono.is_empty(), magnitude.is_one()) {
                (true, _) => write!(f, "{magnitude}")?,
                (false, true) => write!(f, "{mono}")?,
                (false, false) => write!(f, "{magnitude} {mono}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl Zero for Poly {
    fn zero() -> Self {
        Poly::default()
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for Poly {
    fn one() -> Self {
        Poly::constant(Rat::one())
    }
}

impl Add for &Poly {
    type Output = Poly;

    fn add(self, rhs: &Poly) -> Poly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..len).map(|d| self.coeff(d) + rhs.coeff(d)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;

    fn sub(self, rhs: &Poly) -> Poly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..len).map(|d| self.coeff(d) - rhs.coeff(d)).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;

    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        &self + &rhs
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        &self - &rhs
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat::{int, rat};

    #[test]
    fn trailing_zeros_are_trimmed() {
        let p = Poly::new(vec![int(1), int(0), int(0)]);
        assert_eq!(p.degree(), Some(0));
        assert_eq!(Poly::new(vec![int(0)]).degree(), None);
    }

    #[test]
    fn product_and_display() {
        let half = rat(1, 2);
        let l1 = (&Poly::x() + &Poly::one()).scale(&half);
        assert_eq!(l1.to_string(), "1/2 X + 1/2");
        let sq = &l1 * &l1;
        assert_eq!(sq.coeffs(), &[rat(1, 4), rat(1, 2), rat(1, 4)]);
        assert_eq!((&Poly::x() - &Poly::x()).to_string(), "0");
        assert_eq!((-&Poly::x().pow(3)).to_string(), "-X^3");
    }
}
