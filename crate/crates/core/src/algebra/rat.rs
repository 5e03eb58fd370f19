//! Arbitrary-precision rationals.
//!
//! `BigRational` already keeps values in lowest terms with a positive
//! denominator, so it is used directly as the coefficient field.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::ParseRatError;

pub type Rat = BigRational;

pub fn rat(numer: i64, denom: i64) -> Rat {
    Rat::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(value: i64) -> Rat {
    Rat::from_integer(BigInt::from(value))
}

pub fn zero() -> Rat {
    Rat::zero()
}

pub fn one() -> Rat {
    Rat::one()
}

/// Parses `"p"`, `"-p"` or `"p/q"`. Decimal points and exponents are rejected.
pub fn parse_rat(text: &str) -> Result<Rat, ParseRatError> {
    let trimmed = text.trim();
    let bad = || ParseRatError(text.to_string());
    let (num, den) = match trimmed.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (trimmed, None),
    };
    let parse_int = |s: &str| -> Result<BigInt, ParseRatError> {
        let digits = s.strip_prefix(['-', '+']).unwrap_or(s);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        s.parse::<BigInt>().map_err(|_| bad())
    };
    let numer = parse_int(num)?;
    let denom = match den {
        Some(d) => parse_int(d)?,
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return Err(bad());
    }
    Ok(Rat::new(numer, denom))
}

pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_integers_and_fractions() {
        assert_eq!(parse_rat("3").unwrap(), int(3));
        assert_eq!(parse_rat(" -4/6 ").unwrap(), rat(-2, 3));
        assert_eq!(parse_rat("5/-10").unwrap(), rat(-1, 2));
        assert_eq!(parse_rat("+7").unwrap(), int(7));
    }

    #[test]
    fn rejects_floats_and_garbage() {
        for bad in ["1.5", "1e3", "", "/", "1/0", "a/b", "--1", "0x10"] {
            assert!(parse_rat(bad).is_err(), "{bad:?} should not parse");
        }
    }

    #[test]
    fn display_is_reparsable() {
        let x = rat(-22, 14);
        assert_eq!(x.to_string(), "-11/7");
        assert_eq!(parse_rat(&x.to_string()).unwrap(), x);
    }

    proptest! {
        #[test]
        fn product_with_reciprocal_is_one(a in -10_000i64..10_000, b in -10_000i64..10_000) {
            prop_assume!(a != 0 && b != 0);
            let x = rat(a, b);
            let y = rat(b, a);
            prop_assert_eq!(&x * &y, one());
            prop_assert!(x.denom() > &BigInt::zero());
        }

        #[test]
        fn canonical_form_is_unique(a in -500i64..500, b in 1i64..500, m in 1i64..50) {
            prop_assert_eq!(rat(a * m, b * m), rat(a, b));
            prop_assert_eq!(rat(a * m, b * m).to_string(), rat(a, b).to_string());
        }
    }
}
