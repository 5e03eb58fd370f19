//! Exact algebra shared by the rest of the crate: rationals, dense matrices,
//! Laurent polynomials in `t^{1/2}`, and truncated power series.

pub mod biseries;
pub mod laurent;
pub mod matrix;
pub mod poly;
pub mod rat;
pub mod series;

use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

pub use biseries::{BiSeries, TotalDegreeSeries};
pub use laurent::{mat_det_laurent, HalfLaurent};
pub use matrix::{ExactDiv, Matrix, RatMatrix};
pub use poly::Poly;
pub use rat::{parse_rat, Rat};
pub use series::{series_div, series_exp, series_log, TruncSeries, DEFAULT_ORDER};

/// Commutative ring with owned arithmetic.
pub trait Ring:
    Clone
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
}

impl<T> Ring for T where
    T: Clone
        + PartialEq
        + Zero
        + One
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Neg<Output = T>
{
}
