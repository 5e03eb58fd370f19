//! The weights `lambda_{k,nu}` and their generating series.
//!
//! `lambda_{k,nu}` is the fraction of permutations of `k - 1` letters with
//! exactly `nu - 1` ascents. Three independent routes compute it: direct
//! enumeration, the convolution recursion, and the Taylor expansion of the
//! closed form
//!
//! ```text
//! L(X, Y) = (1 - X)/2 * (1 + X e^{(1-X)Y}) / (1 - X e^{(1-X)Y}),
//! ```
//!
//! whose `Y^{k-1}` coefficient is `L_k(X) = sum_nu lambda_{k,nu} X^nu`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::rat::{self, Rat};
use crate::algebra::{BiSeries, Poly, TotalDegreeSeries};
use crate::error::WeightError;

/// Largest `k` accepted by [`lambda_bruteforce`]; it enumerates `(k-1)!` permutations.
pub const BRUTE_FORCE_MAX_K: usize = 10;

/// Exact `lambda_{k,nu}` for `2 <= k <= kmax` and `0 <= nu <= k`.
///
/// Entries with `nu` outside `1..k` are stored as explicit zeros, and lookups
/// outside the table return zero, which makes the recursion total.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightTable {
    kmax: usize,
    // rows[k] has k + 1 entries; rows[0] and rows[1] are empty
    rows: Vec<Vec<Rat>>,
}

impl WeightTable {
    pub fn kmax(&self) -> usize {
        self.kmax
    }

    pub fn get(&self, k: usize, nu: usize) -> Rat {
        self.rows
            .get(k)
            .and_then(|row| row.get(nu))
            .cloned()
            .unwrap_or_else(Rat::zero)
    }

    fn get_signed(&self, k: i64, nu: i64) -> Rat {
        if k < 0 || nu < 0 {
            return Rat::zero();
        }
        self.get(k as usize, nu as usize)
    }

    /// `lambda_{k,0..=k}`; empty for `k` outside the table.
    pub fn row(&self, k: usize) -> &[Rat] {
        self.rows.get(k).map_or(&[], Vec::as_slice)
    }

    /// Row `k` restricted to `1 <= nu <= k - 1`.
    pub fn row_map(&self, k: usize) -> BTreeMap<usize, Rat> {
        (1..k).map(|nu| (nu, self.get(k, nu))).collect()
    }
}

/// `L_k(X)`; `L_1 = (X + 1)/2` and `L_k = sum_nu lambda_{k,nu} X^nu` for `k >= 2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LPoly {
    pub k: usize,
    pub poly: Poly,
}

/// Counts ascents over all permutations of `k - 1` letters.
pub fn lambda_bruteforce(k: usize) -> Result<BTreeMap<usize, Rat>, WeightError> {
    if !(2..=BRUTE_FORCE_MAX_K).contains(&k) {
        return Err(WeightError::OutOfRange {
            k,
            min: 2,
            max: BRUTE_FORCE_MAX_K,
            hint: "; use the recursive route for larger k",
        });
    }
    let m = k - 1;
    let mut counts = vec![0u64; k];
    let mut perm: Vec<usize> = (0..m).collect();
    let mut record = |p: &[usize]| {
        let ascents = p.windows(2).filter(|w| w[0] < w[1]).count();
        counts[ascents + 1] += 1;
    };
    // Heap's algorithm, iterative form.
    record(&perm);
    let mut c = vec![0usize; m];
    let mut i = 0;
    while i < m {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            record(&perm);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    let total = Rat::from_integer(rat::factorial(m as u32));
    Ok((1..k)
        .map(|nu| (nu, Rat::from_integer(BigInt::from(counts[nu])) / &total))
        .collect())
}

/// Builds the table from `lambda_{2,1} = 1` and
/// `(k-1) lambda_{k,nu} = lambda_{k-1,nu} + lambda_{k-1,nu-1}
///     + sum_{r=2}^{k-2} sum_p lambda_{r,p} lambda_{k-r,nu-p}`.
pub fn lambda_recursive(kmax: usize) -> Result<WeightTable, WeightError> {
    if kmax < 2 {
        return Err(WeightError::KmaxTooSmall(kmax));
    }
    let mut table = WeightTable {
        kmax,
        rows: vec![Vec::new(), Vec::new()],
    };
    table.rows.push(vec![Rat::zero(), Rat::one(), Rat::zero()]);
    for k in 3..=kmax {
        let ki = k as i64;
        let mut row = vec![Rat::zero(); k + 1];
        for (nu, slot) in row.iter_mut().enumerate().take(k).skip(1) {
            let nui = nu as i64;
            let mut acc = table.get_signed(ki - 1, nui) + table.get_signed(ki - 1, nui - 1);
            for r in 2..=k.saturating_sub(2) {
                for p in 0..=nu {
                    let a = table.get(r, p);
                    if a.is_zero() {
                        continue;
                    }
                    acc += a * table.get_signed(ki - r as i64, nui - p as i64);
                }
            }
            *slot = acc / Rat::from_integer(BigInt::from(k - 1));
        }
        table.rows.push(row);
    }
    Ok(table)
}

/// `L_1..=L_kmax` from `L_k = (1/(k-1)) sum_{r=1}^{k-1} L_r L_{k-r}`.
pub fn l_poly_recursive(kmax: usize) -> Vec<LPoly> {
    let mut polys: Vec<Poly> = Vec::with_capacity(kmax);
    for k in 1..=kmax {
        let p = match k {
            1 => (&Poly::x() + &Poly::one()).scale(&rat::rat(1, 2)),
            2 => Poly::x(),
            _ => {
                let sum = (1..k).fold(Poly::zero(), |acc, r| &acc + &(&polys[r - 1] * &polys[k - r - 1]));
                sum.scale(&rat::rat(1, k as i64 - 1))
            }
        };
        polys.push(p);
    }
    polys
        .into_iter()
        .enumerate()
        .map(|(i, poly)| LPoly { k: i + 1, poly })
        .collect()
}

/// `g(u) = (e^u - 1)/u` at `u = (1 - X) Y`, as a series in `Y`.
fn g_of_one_minus_x_times_y(order_y: usize) -> BiSeries {
    let one_minus_x = &Poly::one() - &Poly::x();
    BiSeries::from_fn(order_y, |j| {
        let denom = Rat::from_integer(rat::factorial(j as u32 + 1));
        one_minus_x.pow(j as u32).scale(&(Rat::one() / denom))
    })
}

/// Expands the closed form of `L(X, Y)` through `Y^order_y`.
///
/// With `u = (1 - X) Y`, `1 - X e^u = (1 - X)(1 - X Y g(u))` and
/// `1 + X e^u = 1 + X + X(1 - X) Y g(u)`, so
/// `L = (1/2)(1 + X + X(1 - X) Y g(u)) / (1 - X Y g(u))`. The denominator
/// now has constant term 1 and inverts in `Q[X][[Y]]`.
pub fn l_series_closed(order_y: usize) -> BiSeries {
    let g = g_of_one_minus_x_times_y(order_y);
    let x = Poly::x();
    let one_minus_x = &Poly::one() - &x;
    let y_g = g.shift_y();

    let numerator = &BiSeries::from_poly(&Poly::one() + &x, order_y)
        + &y_g.scale(&(&x * &one_minus_x));
    let denominator = &BiSeries::from_poly(Poly::one(), order_y) - &y_g.scale(&x);
    let inv = denominator
        .inverse()
        .expect("denominator has constant term 1");
    (&numerator * &inv).scale(&Poly::constant(rat::rat(1, 2)))
}

/// Rows `lambda_{k,1..k-1}` read off the closed form for `2 <= k <= kmax`.
pub fn lambda_closed(kmax: usize) -> Result<BTreeMap<usize, BTreeMap<usize, Rat>>, WeightError> {
    if kmax < 2 {
        return Err(WeightError::KmaxTooSmall(kmax));
    }
    let series = l_series_closed(kmax - 1);
    Ok((2..=kmax)
        .map(|k| (k, (1..k).map(|nu| (nu, series.coeff(k - 1).coeff(nu))).collect()))
        .collect())
}

/// Checks `dL/dY = L^2 - ((1 - X)/2)^2` through `Y^{order_y - 1}` on the closed form.
pub fn check_ode(order_y: usize) -> bool {
    check_ode_on(&l_series_closed(order_y), order_y)
}

/// The same check on an arbitrary series, which must reach `Y^order_y`.
pub fn check_ode_on(series: &BiSeries, order_y: usize) -> bool {
    if order_y == 0 || series.order_y() < order_y {
        return false;
    }
    let l = series.truncate(order_y);
    let lhs = l.derivative_y();
    let half_one_minus_x = (&Poly::one() - &Poly::x()).scale(&rat::rat(1, 2));
    let shift = BiSeries::from_poly(&half_one_minus_x * &half_one_minus_x, order_y);
    let rhs = &(&l * &l) - &shift;
    (0..order_y).all(|j| lhs.coeff(j) == rhs.coeff(j))
}

/// Coefficients of `M(X, Y) = sum (1/k) lambda_{k,nu} X^nu Y^{k-nu}` keyed by
/// `(k, nu)` for `2 <= k <= kmax`, `0 <= nu <= k`, from the weight table.
pub fn m_coeffs_from_weights(table: &WeightTable, kmax: usize) -> BTreeMap<(usize, usize), Rat> {
    let mut out = BTreeMap::new();
    for k in 2..=kmax {
        for nu in 0..=k {
            out.insert((k, nu), table.get(k, nu) / Rat::from_integer(BigInt::from(k)));
        }
    }
    out
}

/// Expands `-X - Ln(1 - X g(Y - X))` through total degree `max_degree`.
pub fn m_closed_form(max_degree: usize) -> TotalDegreeSeries {
    let u = &TotalDegreeSeries::monomial(Rat::one(), 0, 1, max_degree)
        - &TotalDegreeSeries::monomial(Rat::one(), 1, 0, max_degree);
    let mut g = TotalDegreeSeries::zero(max_degree);
    let mut u_pow = TotalDegreeSeries::monomial(Rat::one(), 0, 0, max_degree);
    for j in 0..=max_degree {
        let inv_fact = Rat::one() / Rat::from_integer(rat::factorial(j as u32 + 1));
        g = &g + &u_pow.scale(&inv_fact);
        u_pow = &u_pow * &u;
    }
    let x = TotalDegreeSeries::monomial(Rat::one(), 1, 0, max_degree);
    let w = (&x * &g).scale(&-Rat::one());
    let log = w.log_one_plus().expect("X g(u) has no constant term");
    &(&TotalDegreeSeries::zero(max_degree) - &x) - &log
}

/// Closed-form coefficients keyed like [`m_coeffs_from_weights`].
pub fn m_coeffs_closed_form(kmax: usize) -> BTreeMap<(usize, usize), Rat> {
    let m = m_closed_form(kmax);
    let mut out = BTreeMap::new();
    for k in 2..=kmax {
        for nu in 0..=k {
            out.insert((k, nu), m.coeff(nu, k - nu));
        }
    }
    out
}

/// Coefficients of `M(X, Y)` through total degree `kmax`, after checking that
/// the weight-table route and the closed-form route agree exactly.
pub fn m_coeffs(kmax: usize) -> Result<BTreeMap<(usize, usize), Rat>, WeightError> {
    let table = lambda_recursive(kmax)?;
    let from_table = m_coeffs_from_weights(&table, kmax);
    let closed = m_closed_form(kmax);
    for d in 0..2.min(kmax + 1) {
        for nu in 0..=d {
            let c = closed.coeff(nu, d - nu);
            if !c.is_zero() {
                return Err(WeightError::Disagreement(format!(
                    "closed form has X^{nu} Y^{} coefficient {c}, expected 0",
                    d - nu
                )));
            }
        }
    }
    for (&(k, nu), value) in &from_table {
        let c = closed.coeff(nu, k - nu);
        if &c != value {
            return Err(WeightError::Disagreement(format!(
                "(k, nu) = ({k}, {nu}): table {value}, closed form {c}"
            )));
        }
    }
    Ok(from_table)
}
