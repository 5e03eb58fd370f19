//! Laurent polynomials in `s = t^{1/2}`.
//!
//! A term `c * s^e` stands for `c * t^{e/2}`, so integer powers of `t` are the
//! even exponents of `s`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::matrix::{ExactDiv, Matrix};
use super::rat::{self, Rat};
use super::series::TruncSeries;
use crate::error::AlgebraError;

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct HalfLaurent {
    terms: BTreeMap<i64, Rat>,
}

impl HalfLaurent {
    pub fn monomial(coeff: Rat, exponent: i64) -> Self {
        let mut p = HalfLaurent::default();
        p.add_term(exponent, coeff);
        p
    }

    pub fn constant(c: Rat) -> Self {
        Self::monomial(c, 0)
    }

    /// `s = t^{1/2}`.
    pub fn s() -> Self {
        Self::monomial(Rat::one(), 1)
    }

    pub fn s_inv() -> Self {
        Self::monomial(Rat::one(), -1)
    }

    /// `t = s^2`.
    pub fn t() -> Self {
        Self::monomial(Rat::one(), 2)
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i64, Rat)>) -> Self {
        let mut p = HalfLaurent::default();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, exponent: i64, coeff: Rat) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(exponent).or_insert_with(Rat::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&exponent);
        }
    }

    /// Nonzero terms as `(s-exponent, coefficient)`, ascending.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &Rat)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn coeff(&self, exponent: i64) -> Rat {
        self.terms.get(&exponent).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Value at `t = 1`.
    pub fn eval_at_one(&self) -> Rat {
        self.terms.values().fold(Rat::zero(), |acc, c| acc + c)
    }

    /// `d/dt` evaluated at `t = 1`.
    pub fn derivative_at_one(&self) -> Rat {
        self.terms
            .iter()
            .fold(Rat::zero(), |acc, (&e, c)| acc + c * rat::rat(e, 2))
    }

    /// Substitutes `t -> t^{-1}`.
    pub fn invert_variable(&self) -> Self {
        HalfLaurent {
            terms: self.terms.iter().map(|(&e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Multiplies by `s^shift`.
    pub fn shift(&self, shift: i64) -> Self {
        HalfLaurent {
            terms: self.terms.iter().map(|(&e, c)| (e + shift, c.clone())).collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        (0..exp).fold(HalfLaurent::one(), |acc, _| &acc * self)
    }

    /// Expands `p(e^h)` to order `order`: `s^e` contributes `exp(e h / 2)`.
    pub fn eval_exp(&self, order: usize) -> TruncSeries {
        let mut coeffs = vec![Rat::zero(); order + 1];
        for (&e, c) in &self.terms {
            let half = rat::rat(e, 2);
            let mut term = c.clone();
            for (j, slot) in coeffs.iter_mut().enumerate() {
                if j > 0 {
                    term = term * &half / Rat::from_integer(BigInt::from(j));
                }
                *slot += &term;
            }
        }
        TruncSeries::from_coeffs(coeffs)
    }

    /// Quotient when `divisor` divides `self` exactly.
    pub fn checked_div(&self, divisor: &Self) -> Result<Self, AlgebraError> {
        let (Some(dlo), Some(dhi)) = (divisor.min_exponent(), divisor.max_exponent()) else {
            return Err(AlgebraError::NotInvertible);
        };
        let mut rem = self.clone();
        let mut quotient = HalfLaurent::default();
        let lead = divisor.coeff(dhi);
        while let Some(rhi) = rem.max_exponent() {
            let rlo = rem.min_exponent().expect("nonempty");
            if rhi - dhi < rlo - dlo {
                return Err(AlgebraError::InexactDivision);
            }
            let q = HalfLaurent::monomial(rem.coeff(rhi) / &lead, rhi - dhi);
            rem = &rem - &(&q * divisor);
            quotient = &quotient + &q;
        }
        Ok(quotient)
    }

    /// Renders with descending powers of `t`, e.g. `t - 1 + t^-1` or `t^1/2`.
    pub fn to_t_string(&self) -> String {
        self.to_string()
    }
}

fn monomial_string(exponent: i64) -> Option<String> {
    match exponent {
        0 => None,
        2 => Some("t".to_string()),
        e if e % 2 == 0 => Some(format!("t^{}", e / 2)),
        e => Some(format!("t^{e}/2")),
    }
}

impl fmt::Display for HalfLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (&e, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            let magnitude = c.abs();
            match (i == 0, negative) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            match monomial_string(e) {
                None => write!(f, "{magnitude}")?,
                Some(m) if magnitude.is_one() => write!(f, "{m}")?,
                Some(m) if magnitude.is_integer() => write!(f, "{magnitude}{m}")?,
                Some(m) => write!(f, "({magnitude}){m}")?,
            }
        }
        Ok(())
    }
}

impl Zero for HalfLaurent {
    fn zero() -> Self {
        HalfLaurent::default()
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for HalfLaurent {
    fn one() -> Self {
        HalfLaurent::constant(Rat::one())
    }
}

impl Add for &HalfLaurent {
    type Output = HalfLaurent;

    fn add(self, rhs: &HalfLaurent) -> HalfLaurent {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Sub for &HalfLaurent {
    type Output = HalfLaurent;

    fn sub(self, rhs: &HalfLaurent) -> HalfLaurent {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, -c.clone());
        }
        out
    }
}

impl Mul for &HalfLaurent {
    type Output = HalfLaurent;

    fn mul(self, rhs: &HalfLaurent) -> HalfLaurent {
        let mut out = HalfLaurent::default();
        for (&a, ca) in &self.terms {
            for (&b, cb) in &rhs.terms {
                out.add_term(a + b, ca * cb);
            }
        }
        out
    }
}

impl Neg for &HalfLaurent {
    type Output = HalfLaurent;

    fn neg(self) -> HalfLaurent {
        HalfLaurent {
            terms: self.terms.iter().map(|(&e, c)| (e, -c.clone())).collect(),
        }
    }
}

impl Add for HalfLaurent {
    type Output = HalfLaurent;
    fn add(self, rhs: HalfLaurent) -> HalfLaurent {
        &self + &rhs
    }
}

impl Sub for HalfLaurent {
    type Output = HalfLaurent;
    fn sub(self, rhs: HalfLaurent) -> HalfLaurent {
        &self - &rhs
    }
}

impl Mul for HalfLaurent {
    type Output = HalfLaurent;
    fn mul(self, rhs: HalfLaurent) -> HalfLaurent {
        &self * &rhs
    }
}

impl Neg for HalfLaurent {
    type Output = HalfLaurent;
    fn neg(self) -> HalfLaurent {
        -&self
    }
}

impl ExactDiv for HalfLaurent {
    fn div_exact(&self, divisor: &Self) -> Option<Self> {
        self.checked_div(divisor).ok()
    }
}

/// Determinant of a square matrix over the Laurent ring.
pub fn mat_det_laurent(m: &Matrix<HalfLaurent>) -> Result<HalfLaurent, AlgebraError> {
    m.determinant()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat::{int, rat};

    fn p(terms: &[(i64, i64)]) -> HalfLaurent {
        HalfLaurent::from_terms(terms.iter().map(|&(e, c)| (e, int(c))))
    }

    #[test]
    fn empty_determinant_is_one() {
        let m: Matrix<HalfLaurent> = Matrix::from_rows(vec![]).unwrap();
        assert_eq!(mat_det_laurent(&m).unwrap(), HalfLaurent::one());
    }

    #[test]
    fn one_by_one_determinant() {
        let m = Matrix::from_rows(vec![vec![HalfLaurent::s()]]).unwrap();
        assert_eq!(mat_det_laurent(&m).unwrap(), HalfLaurent::s());
    }

    #[test]
    fn diagonal_determinant() {
        let m = Matrix::from_rows(vec![
            vec![HalfLaurent::s(), HalfLaurent::zero()],
            vec![HalfLaurent::zero(), HalfLaurent::s_inv()],
        ])
        .unwrap();
        assert_eq!(mat_det_laurent(&m).unwrap(), HalfLaurent::one());
    }

    #[test]
    fn non_square_is_rejected() {
        let m = Matrix::from_rows(vec![vec![HalfLaurent::s(), HalfLaurent::one()]]).unwrap();
        assert_eq!(
            mat_det_laurent(&m),
            Err(AlgebraError::NotSquare { rows: 1, cols: 2 })
        );
    }

    #[test]
    fn bareiss_matches_cofactor_on_laurent_entries() {
        // 5x5 and 6x6 so that `determinant` takes the Bareiss path.
        for size in [5usize, 6] {
            let m = Matrix::from_fn(size, size, |r, c| {
                let a = ((r * 7 + c * 3) % 5) as i64 - 2;
                let b = ((r * 2 + c * 5 + 1) % 4) as i64 - 1;
                p(&[(1, a), (-1, b), (0, (r == c) as i64)])
            });
            assert_eq!(m.determinant().unwrap(), m.det_cofactor().unwrap());
        }
    }

    #[test]
    fn display_uses_descending_t_powers() {
        assert_eq!(p(&[(2, 1), (0, -1), (-2, 1)]).to_string(), "t - 1 + t^-1");
        assert_eq!(HalfLaurent::s().to_string(), "t^1/2");
        assert_eq!(p(&[(-3, -2), (4, 3)]).to_string(), "3t^2 - 2t^-3/2");
        assert_eq!(
            HalfLaurent::monomial(rat(-1, 2), 1).to_string(),
            "-(1/2)t^1/2"
        );
        assert_eq!(HalfLaurent::zero().to_string(), "0");
    }

    #[test]
    fn eval_exp_examples() {
        assert_eq!(
            HalfLaurent::s().eval_exp(2).coeffs(),
            &[int(1), rat(1, 2), rat(1, 8)]
        );
        assert_eq!(HalfLaurent::one().eval_exp(3).coeffs(), &[int(1), int(0), int(0), int(0)]);
    }

    #[test]
    fn exact_division() {
        let a = p(&[(2, 1), (0, -1), (-2, 1)]);
        let b = p(&[(1, 1), (-1, 3)]);
        let prod = &a * &b;
        assert_eq!(prod.checked_div(&b).unwrap(), a);
        assert_eq!(prod.checked_div(&a).unwrap(), b);
        assert_eq!(p(&[(2, 1), (0, 1)]).checked_div(&p(&[(1, 1), (0, 1)])), Err(AlgebraError::InexactDivision));
        assert_eq!(a.checked_div(&HalfLaurent::zero()), Err(AlgebraError::NotInvertible));
    }

    #[test]
    fn derivative_and_inversion() {
        let a = p(&[(2, 1), (0, -1), (-2, 1)]);
        assert_eq!(a.derivative_at_one(), int(0));
        assert_eq!(a.invert_variable(), a);
        assert_eq!(HalfLaurent::s().derivative_at_one(), rat(1, 2));
        assert_eq!(HalfLaurent::s().invert_variable(), HalfLaurent::s_inv());
    }
}
