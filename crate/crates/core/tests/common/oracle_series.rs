//! Hand expansions used to certify worked values.

use bcr_core::algebra::rat::rat;
use bcr_core::Rat;

/// `-Ln(1 + a h^2 + b h^4)` through `h^4`: `-a h^2 + (a^2/2 - b) h^4`.
pub fn minus_log_even_quartic(a: &Rat, b: &Rat) -> (Rat, Rat) {
    (-a.clone(), a * a / rat(2, 1) - b)
}

/// `c e^h + d + c e^{-h} = (2c + d) + c h^2 + (c/12) h^4 + O(h^6)`.
pub fn symmetric_laurent_quartic(c: i64, d: i64) -> (Rat, Rat, Rat) {
    (rat(2 * c + d, 1), rat(c, 1), rat(c, 12))
}
