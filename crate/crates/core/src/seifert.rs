//! Seifert-matrix data and the quantities read directly off it.
//!
//! For a long knot `R^n -> R^{n+2}` with Seifert surface `S`, each degree
//! `d in 1..=n` carries a pair `(V_d^+, V_d^-)` of square matrices of size
//! `b_d` with `V_d^- - V_d^+ = I`. Everything downstream treats this pair
//! family as axiomatic input.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::rat::{self, Rat};
use crate::algebra::{mat_det_laurent, HalfLaurent, Matrix, RatMatrix, TruncSeries};
use crate::error::SeifertError;

/// The two matrices attached to one degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeifertBlock {
    pub plus: RatMatrix,
    pub minus: RatMatrix,
}

impl SeifertBlock {
    pub fn new(plus: RatMatrix, minus: RatMatrix) -> Self {
        SeifertBlock { plus, minus }
    }

    /// `V^- = V^+ + I`.
    pub fn from_plus(plus: RatMatrix) -> Self {
        let minus = &plus + &RatMatrix::identity(plus.rows());
        SeifertBlock { plus, minus }
    }

    pub fn empty() -> Self {
        SeifertBlock::from_plus(RatMatrix::zeros(0, 0))
    }

    pub fn size(&self) -> usize {
        self.plus.rows()
    }

    fn map(&self, f: impl Fn(&RatMatrix) -> RatMatrix) -> Self {
        SeifertBlock {
            plus: f(&self.plus),
            minus: f(&self.minus),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeifertData {
    n: usize,
    integral: bool,
    blocks: BTreeMap<usize, SeifertBlock>,
}

impl SeifertData {
    /// Unchecked constructor; run [`validate`] before computing with it.
    pub fn new(n: usize, integral: bool, blocks: BTreeMap<usize, SeifertBlock>) -> Self {
        SeifertData { n, integral, blocks }
    }

    /// All blocks empty: the trivial knot.
    pub fn trivial(n: usize) -> Self {
        let blocks = (1..=n).map(|d| (d, SeifertBlock::empty())).collect();
        SeifertData {
            n,
            integral: true,
            blocks,
        }
    }

    /// Blocks for `d = 1..=n` from `V_d^+` alone.
    pub fn from_plus(n: usize, integral: bool, plus: Vec<RatMatrix>) -> Self {
        let blocks = plus
            .into_iter()
            .enumerate()
            .map(|(i, p)| (i + 1, SeifertBlock::from_plus(p)))
            .collect();
        SeifertData { n, integral, blocks }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn integral(&self) -> bool {
        self.integral
    }

    pub fn block(&self, d: usize) -> Option<&SeifertBlock> {
        self.blocks.get(&d)
    }

    pub fn blocks(&self) -> &BTreeMap<usize, SeifertBlock> {
        &self.blocks
    }

    /// `b_1..=b_n`, with 0 for missing blocks.
    pub fn sizes(&self) -> Vec<usize> {
        (1..=self.n)
            .map(|d| self.blocks.get(&d).map_or(0, SeifertBlock::size))
            .collect()
    }

    fn ensure_valid(&self) -> Result<(), SeifertError> {
        let report = validate(self);
        if report.is_valid() {
            Ok(())
        } else {
            Err(SeifertError::Invalid(report))
        }
    }

    fn checked_block(&self, d: usize) -> Result<&SeifertBlock, SeifertError> {
        if d == 0 || d > self.n {
            return Err(SeifertError::DegreeOutOfRange { d, n: self.n });
        }
        self.ensure_valid()?;
        Ok(&self.blocks[&d])
    }
}

/// `(-1)^{d+1}`.
pub(crate) fn alternating_sign(d: usize) -> Rat {
    if d % 2 == 1 {
        Rat::one()
    } else {
        -Rat::one()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Plus,
    Minus,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Plus => "V^+",
            Side::Minus => "V^-",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    ZeroDimension,
    MissingBlock { d: usize },
    UnexpectedBlock { d: usize },
    NotSquare { d: usize, side: Side, rows: usize, cols: usize },
    SizeMismatch { d: usize, plus: usize, minus: usize },
    NotDual { d: usize },
    NonIntegral { d: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::ZeroDimension => write!(f, "n must be a positive integer"),
            Violation::MissingBlock { d } => write!(f, "missing block for d = {d}"),
            Violation::UnexpectedBlock { d } => write!(f, "block d = {d} is outside 1..=n"),
            Violation::NotSquare { d, side, rows, cols } => {
                write!(f, "d = {d}: {side} is {rows}x{cols}, not square")
            }
            Violation::SizeMismatch { d, plus, minus } => {
                write!(f, "d = {d}: V^+ has size {plus} but V^- has size {minus}")
            }
            Violation::NotDual { d } => write!(f, "d = {d}: V^- - V^+ != I"),
            Violation::NonIntegral { d } => {
                write!(f, "d = {d}: non-integer entry in data flagged integral")
            }
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
    pub warnings: Vec<String>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            writeln!(f, "valid")?;
        }
        for v in &self.violations {
            writeln!(f, "  error: {v}")?;
        }
        for w in &self.warnings {
            writeln!(f, "  warning: {w}")?;
        }
        Ok(())
    }
}

/// Lists every structural problem; never fails.
pub fn validate(data: &SeifertData) -> ValidationReport {
    let mut report = ValidationReport::default();
    if data.n == 0 {
        report.violations.push(Violation::ZeroDimension);
    }
    for d in 1..=data.n {
        if !data.blocks.contains_key(&d) {
            report.violations.push(Violation::MissingBlock { d });
        }
    }
    for (&d, block) in &data.blocks {
        if d == 0 || d > data.n {
            report.violations.push(Violation::UnexpectedBlock { d });
            continue;
        }
        let mut shaped = true;
        for (side, m) in [(Side::Plus, &block.plus), (Side::Minus, &block.minus)] {
            if !m.is_square() {
                shaped = false;
                report.violations.push(Violation::NotSquare {
                    d,
                    side,
                    rows: m.rows(),
                    cols: m.cols(),
                });
            }
        }
        if !shaped {
            continue;
        }
        if block.plus.rows() != block.minus.rows() {
            report.violations.push(Violation::SizeMismatch {
                d,
                plus: block.plus.rows(),
                minus: block.minus.rows(),
            });
            continue;
        }
        if &block.minus - &block.plus != RatMatrix::identity(block.size()) {
            report.violations.push(Violation::NotDual { d });
        }
        if !(block.plus.is_integral() && block.minus.is_integral()) {
            if data.integral {
                report.violations.push(Violation::NonIntegral { d });
            } else if data.n == 1 {
                report
                    .warnings
                    .push(format!("d = {d}: rational entries (rational homology setting)"));
            } else {
                report.warnings.push(format!(
                    "d = {d}: rational entries with n = {}; integral data is expected for n >= 2",
                    data.n
                ));
            }
        }
    }
    report
}

fn laurent_block_matrix(block: &SeifertBlock) -> Matrix<HalfLaurent> {
    // t^{1/2} V^- - t^{-1/2} V^+
    Matrix::from_fn(block.size(), block.size(), |r, c| {
        &HalfLaurent::monomial(block.minus.get(r, c).clone(), 1)
            - &HalfLaurent::monomial(block.plus.get(r, c).clone(), -1)
    })
}

/// `Delta_d(t) = det(t^{1/2} V_d^- - t^{-1/2} V_d^+)`.
pub fn alexander(data: &SeifertData, d: usize) -> Result<HalfLaurent, SeifertError> {
    let block = data.checked_block(d)?;
    Ok(mat_det_laurent(&laurent_block_matrix(block))?)
}

/// `Delta_1..=Delta_n`.
pub fn alexander_all(data: &SeifertData) -> Result<Vec<HalfLaurent>, SeifertError> {
    (1..=data.n).map(|d| alexander(data, d)).collect()
}

/// `T'(1) = (1/2) sum_d (-1)^{d+1} Tr(V_d^- + V_d^+)` for the unnormalized torsion.
pub fn torsion_derivative_at_one(data: &SeifertData) -> Result<Rat, SeifertError> {
    data.ensure_valid()?;
    let total = data.blocks.iter().fold(Rat::zero(), |acc, (&d, b)| {
        acc + alternating_sign(d) * (b.minus.trace() + b.plus.trace())
    });
    Ok(total / rat::int(2))
}

/// `T(t) = t^shift * numerator / denominator`, stored without reduction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalizedTorsion {
    pub numerator: HalfLaurent,
    pub denominator: HalfLaurent,
    pub shift: i64,
}

impl NormalizedTorsion {
    /// Expansion of `T(e^h)` to order `order`.
    pub fn eval_exp(&self, order: usize) -> Result<TruncSeries, SeifertError> {
        let num = self.numerator.shift(2 * self.shift).eval_exp(order);
        let den = self.denominator.eval_exp(order);
        Ok(num.div(&den)?)
    }

    /// `T(1)`.
    pub fn eval_at_one(&self) -> Rat {
        self.numerator.eval_at_one() / self.denominator.eval_at_one()
    }

    /// `T'(1)` by the quotient rule on the stored factors.
    pub fn derivative_at_one(&self) -> Rat {
        let num = self.numerator.shift(2 * self.shift);
        let n0 = num.eval_at_one();
        let d0 = self.denominator.eval_at_one();
        (num.derivative_at_one() * &d0 - &n0 * self.denominator.derivative_at_one()) / (&d0 * &d0)
    }

    pub fn is_trivial(&self) -> bool {
        self.shift == 0 && self.numerator == self.denominator
    }
}

impl fmt::Display for NormalizedTorsion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.shift != 0 {
            write!(f, "t^{} * ", self.shift)?;
        }
        if self.denominator.is_one() {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "({}) / ({})", self.numerator, self.denominator)
        }
    }
}

/// Alternating product of the Alexander polynomials; for even `n` the result
/// is multiplied by `t^{-T'(1)}` so that its derivative at 1 vanishes.
pub fn torsion(data: &SeifertData) -> Result<NormalizedTorsion, SeifertError> {
    let deltas = alexander_all(data)?;
    let mut numerator = HalfLaurent::one();
    let mut denominator = HalfLaurent::one();
    for (i, delta) in deltas.iter().enumerate() {
        if (i + 1) % 2 == 1 {
            numerator = &numerator * delta;
        } else {
            denominator = &denominator * delta;
        }
    }
    let shift = if data.n.is_multiple_of(2) {
        let derivative = torsion_derivative_at_one(data)?;
        if !derivative.is_integer() {
            return Err(SeifertError::Normalization(format!(
                "T'(1) = {derivative} is not an integer; even-dimensional data must be integral"
            )));
        }
        let value: i64 = (-derivative.to_integer()).try_into().map_err(|_| {
            SeifertError::Normalization("T'(1) does not fit in 64 bits".to_string())
        })?;
        value
    } else {
        0
    };
    Ok(NormalizedTorsion {
        numerator,
        denominator,
        shift,
    })
}

/// Checks `sum_d (-1)^d Tr(V_d^-) = (chi - 1)/2 - T'(1)` with
/// `chi - 1 = sum_d (-1)^d b_d`.
pub fn torsion_derivative_identity(data: &SeifertData) -> Result<bool, SeifertError> {
    let derivative = torsion_derivative_at_one(data)?;
    let mut lhs = Rat::zero();
    let mut chi_minus_one = Rat::zero();
    for (&d, b) in &data.blocks {
        let sign = -alternating_sign(d);
        lhs += &sign * b.minus.trace();
        chi_minus_one += sign * rat::int(b.size() as i64);
    }
    Ok(lhs == chi_minus_one / rat::int(2) - derivative)
}

/// Block-diagonal sum of two data sets of the same dimension.
pub fn connected_sum(a: &SeifertData, b: &SeifertData) -> Result<SeifertData, SeifertError> {
    if a.n != b.n {
        return Err(SeifertError::DimensionMismatch(format!(
            "connected sum of n = {} and n = {}",
            a.n, b.n
        )));
    }
    a.ensure_valid()?;
    b.ensure_valid()?;
    let blocks = (1..=a.n)
        .map(|d| {
            let (x, y) = (&a.blocks[&d], &b.blocks[&d]);
            let block = SeifertBlock {
                plus: x.plus.block_diag(&y.plus),
                minus: x.minus.block_diag(&y.minus),
            };
            (d, block)
        })
        .collect();
    Ok(SeifertData {
        n: a.n,
        integral: a.integral && b.integral,
        blocks,
    })
}

/// New blocks `W_{n+1-d}^{+/-} = -(V_d^{-/+})^T`.
pub fn dual_data(data: &SeifertData) -> SeifertData {
    let n = data.n;
    let blocks = data
        .blocks
        .iter()
        .filter(|(&d, _)| d >= 1 && d <= n)
        .map(|(&d, b)| {
            let block = SeifertBlock {
                plus: -&b.minus.transpose(),
                minus: -&b.plus.transpose(),
            };
            (n + 1 - d, block)
        })
        .collect();
    SeifertData {
        n,
        integral: data.integral,
        blocks,
    }
}

/// Degrees `d` where `Delta_{n+1-d}(t) != Delta_d(t^{-1})`.
///
/// Data read off an actual Seifert surface has none; the parity vanishing
/// and the agreement of the trace and torsion routes depend on this.
pub fn duality_defects(data: &SeifertData) -> Result<Vec<usize>, SeifertError> {
    let deltas = alexander_all(data)?;
    let n = data.n;
    Ok((1..=n)
        .filter(|&d| deltas[n - d] != deltas[d - 1].invert_variable())
        .collect())
}

/// Conjugates both matrices of block `d` by `transforms[d]`; missing
/// transforms leave the block unchanged.
pub fn change_basis(
    data: &SeifertData,
    transforms: &BTreeMap<usize, RatMatrix>,
) -> Result<SeifertData, SeifertError> {
    let mut blocks = BTreeMap::new();
    for (&d, b) in &data.blocks {
        let block = match transforms.get(&d) {
            Some(p) => {
                let inv = p.inverse().ok_or_else(|| {
                    SeifertError::DimensionMismatch(format!("basis change for d = {d} is singular"))
                })?;
                if p.rows() != b.size() {
                    return Err(SeifertError::DimensionMismatch(format!(
                        "basis change for d = {d} has size {}, block has size {}",
                        p.rows(),
                        b.size()
                    )));
                }
                b.map(|m| &(p * m) * &inv)
            }
            None => b.clone(),
        };
        blocks.insert(d, block);
    }
    Ok(SeifertData {
        n: data.n,
        integral: data.integral,
        blocks,
    })
}

/// Random integer matrix of determinant `+-1`.
pub fn random_unimodular(size: usize, rng: &mut impl Rng) -> RatMatrix {
    let mut p = RatMatrix::identity(size);
    if size < 2 {
        if size == 1 && rng.gen_bool(0.5) {
            p.set(0, 0, -Rat::one());
        }
        return p;
    }
    for _ in 0..3 * size {
        let i = rng.gen_range(0..size);
        let mut j = rng.gen_range(0..size - 1);
        if j >= i {
            j += 1;
        }
        let factor = rat::int(if rng.gen_bool(0.5) { 1 } else { -1 });
        // row_i += factor * row_j
        for c in 0..size {
            let v = p.get(i, c) + &factor * p.get(j, c);
            p.set(i, c, v);
        }
    }
    p
}

/// Conjugates every block by a seeded random unimodular matrix.
pub fn random_basis_change(data: &SeifertData, seed: u64) -> Result<SeifertData, SeifertError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let transforms = data
        .blocks
        .iter()
        .map(|(&d, b)| (d, random_unimodular(b.size(), &mut rng)))
        .collect();
    change_basis(data, &transforms)
}

fn random_entry(rng: &mut impl Rng, lo: i64, hi: i64) -> Rat {
    rat::int(rng.gen_range(lo..=hi))
}

fn random_square(size: usize, bound: i64, rng: &mut impl Rng) -> RatMatrix {
    Matrix::from_fn(size, size, |_, _| random_entry(rng, -bound, bound))
}

/// `V_d^+` uniform in `[-bound, bound]` independently per degree, `V_d^- = V_d^+ + I`.
///
/// Such data satisfies every matrix-level identity (duality of the transform,
/// additivity, the derivative identity) but in general is not the Seifert data
/// of a knot. Use [`random_data`] for instances of the invariant theory.
pub fn random_raw_data(n: usize, sizes: &[usize], bound: u32, seed: u64) -> SeifertData {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let bound = i64::from(bound);
    let plus = (0..n)
        .map(|i| random_square(sizes.get(i).copied().unwrap_or(0), bound, &mut rng))
        .collect();
    SeifertData::from_plus(n, true, plus)
}

/// Seeded random integral data whose blocks are paired the way a Seifert
/// surface pairs them.
///
/// For `d < n + 1 - d`, `V_d^+ = A` is uniform in `[-bound, bound]` and block
/// `n + 1 - d` is `(-(A + I)^T, -A^T)`. For odd `n` the middle block has even
/// size `2g` and `V^+ = S J` with `J` the standard symplectic form and
/// `S - S^T = J`, which makes `V^+ + I` similar to `-(V^+)^T`. Entries lie in
/// `[-bound - 1, bound + 1]`.
pub fn random_data(
    n: usize,
    sizes: &[usize],
    bound: u32,
    seed: u64,
) -> Result<SeifertData, SeifertError> {
    let layout_err = |reason: String| SeifertError::BlockLayout {
        n,
        sizes: sizes.to_vec(),
        reason,
    };
    if sizes.len() != n {
        return Err(layout_err(format!("expected {n} sizes")));
    }
    for d in 1..=n {
        let e = n + 1 - d;
        if sizes[d - 1] != sizes[e - 1] {
            return Err(layout_err(format!("b_{d} must equal b_{e}")));
        }
        if d == e && sizes[d - 1] % 2 == 1 {
            return Err(layout_err(format!("middle block b_{d} must be even")));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let bound = i64::from(bound);
    let mut blocks = BTreeMap::new();
    for d in 1..=n {
        let e = n + 1 - d;
        let size = sizes[d - 1];
        if d < e {
            let a = random_square(size, bound, &mut rng);
            let first = SeifertBlock::from_plus(a);
            let paired = SeifertBlock {
                plus: -&first.minus.transpose(),
                minus: -&first.plus.transpose(),
            };
            blocks.insert(d, first);
            blocks.insert(e, paired);
        } else if d == e {
            blocks.insert(d, SeifertBlock::from_plus(random_middle_plus(size, bound, &mut rng)));
        }
    }
    Ok(SeifertData {
        n,
        integral: true,
        blocks,
    })
}

fn symplectic(size: usize) -> RatMatrix {
    Matrix::from_fn(size, size, |r, c| {
        if r % 2 == 0 && c == r + 1 {
            Rat::one()
        } else if r % 2 == 1 && c + 1 == r {
            -Rat::one()
        } else {
            Rat::zero()
        }
    })
}

fn random_middle_plus(size: usize, bound: i64, rng: &mut impl Rng) -> RatMatrix {
    let j = symplectic(size);
    let mut s = RatMatrix::zeros(size, size);
    for r in 0..size {
        s.set(r, r, random_entry(rng, -bound, bound));
        for c in r + 1..size {
            let jrc = j.get(r, c).clone();
            let lo = if jrc.is_zero() { -bound } else { (-bound + 1).min(bound) };
            let upper = random_entry(rng, lo, bound.max(lo));
            s.set(c, r, &upper - &jrc);
            s.set(r, c, upper);
        }
    }
    &s * &j
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat::int;

    fn m(rows: &[&[i64]]) -> RatMatrix {
        RatMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect())
            .unwrap()
    }

    fn trefoil() -> SeifertData {
        SeifertData::from_plus(1, true, vec![m(&[&[-1, 1], &[-1, 0]])])
    }

    fn delta_trefoil() -> HalfLaurent {
        HalfLaurent::from_terms([(2, int(1)), (0, int(-1)), (-2, int(1))])
    }

    #[test]
    fn validation_examples() {
        let ok = SeifertData::new(
            1,
            true,
            BTreeMap::from([(1, SeifertBlock::new(m(&[&[0]]), m(&[&[1]])))]),
        );
        assert!(validate(&ok).is_valid());

        let bad = SeifertData::new(
            1,
            true,
            BTreeMap::from([(1, SeifertBlock::new(m(&[&[0]]), m(&[&[2]])))]),
        );
        assert_eq!(validate(&bad).violations, vec![Violation::NotDual { d: 1 }]);

        let missing = SeifertData::new(2, true, BTreeMap::from([(1, SeifertBlock::empty())]));
        assert_eq!(validate(&missing).violations, vec![Violation::MissingBlock { d: 2 }]);
    }

    #[test]
    fn validation_shapes_and_integrality() {
        let not_square = SeifertData::new(
            1,
            false,
            BTreeMap::from([(1, SeifertBlock::new(m(&[&[0, 1]]), m(&[&[1, 1]])))]),
        );
        assert_eq!(validate(&not_square).violations.len(), 2);

        let half = RatMatrix::from_rows(vec![vec![rat::rat(1, 2)]]).unwrap();
        let rational = SeifertData::from_plus(1, false, vec![half.clone()]);
        let report = validate(&rational);
        assert!(report.is_valid());
        assert_eq!(report.warnings.len(), 1);
        let flagged = SeifertData::from_plus(1, true, vec![half]);
        assert_eq!(validate(&flagged).violations, vec![Violation::NonIntegral { d: 1 }]);

        let extra = SeifertData::new(
            1,
            true,
            BTreeMap::from([(1, SeifertBlock::empty()), (3, SeifertBlock::empty())]),
        );
        assert_eq!(validate(&extra).violations, vec![Violation::UnexpectedBlock { d: 3 }]);
    }

    #[test]
    fn alexander_examples() {
        assert_eq!(alexander(&SeifertData::trivial(2), 2).unwrap(), HalfLaurent::one());
        let single = SeifertData::from_plus(1, true, vec![m(&[&[0]])]);
        assert_eq!(alexander(&single, 1).unwrap(), HalfLaurent::s());
        assert_eq!(alexander(&trefoil(), 1).unwrap(), delta_trefoil());
        assert!(matches!(
            alexander(&trefoil(), 2),
            Err(SeifertError::DegreeOutOfRange { d: 2, n: 1 })
        ));
    }

    #[test]
    fn alexander_rejects_invalid_data() {
        let bad = SeifertData::new(
            1,
            true,
            BTreeMap::from([(1, SeifertBlock::new(m(&[&[0]]), m(&[&[2]])))]),
        );
        assert!(matches!(alexander(&bad, 1), Err(SeifertError::Invalid(_))));
    }

    #[test]
    fn torsion_examples() {
        let t = torsion(&trefoil()).unwrap();
        assert_eq!(t.numerator, delta_trefoil());
        assert_eq!(t.denominator, HalfLaurent::one());
        assert_eq!(t.shift, 0);

        let mut blocks = trefoil().blocks().clone();
        blocks.insert(2, SeifertBlock::empty());
        let n2 = SeifertData::new(2, true, blocks);
        let t2 = torsion(&n2).unwrap();
        assert_eq!(t2.numerator, delta_trefoil());
        assert_eq!(t2.denominator, HalfLaurent::one());
        assert_eq!(t2.shift, 0);

        assert!(torsion(&SeifertData::trivial(3)).unwrap().is_trivial());
    }

    #[test]
    fn even_n_normalization_shift() {
        // b_1 = 1, b_2 = 1 with V_1^+ = [2], V_2^+ = [0]:
        // T'(1) = (1/2)(5) - (1/2)(1) = 2
        let data = SeifertData::from_plus(2, true, vec![m(&[&[2]]), m(&[&[0]])]);
        let t = torsion(&data).unwrap();
        assert_eq!(t.shift, -2);
        assert_eq!(t.eval_at_one(), int(1));
        assert_eq!(t.derivative_at_one(), int(0));
    }

    #[test]
    fn even_n_half_integer_derivative_is_rejected() {
        let data = SeifertData::from_plus(2, true, vec![m(&[&[0]]), RatMatrix::zeros(0, 0)]);
        assert!(matches!(torsion(&data), Err(SeifertError::Normalization(_))));
    }

    #[test]
    fn derivative_identity_examples() {
        assert!(torsion_derivative_identity(&trefoil()).unwrap());
        assert!(torsion_derivative_identity(&SeifertData::trivial(4)).unwrap());
    }

    #[test]
    fn connected_sum_examples() {
        let sum = connected_sum(&trefoil(), &SeifertData::trivial(1)).unwrap();
        assert_eq!(sum, trefoil());
        let double = connected_sum(&trefoil(), &trefoil()).unwrap();
        assert_eq!(alexander(&double, 1).unwrap(), delta_trefoil().pow(2));
        assert!(matches!(
            connected_sum(&trefoil(), &SeifertData::trivial(2)),
            Err(SeifertError::DimensionMismatch(_))
        ));
    }

    #[test]
    fn dual_examples() {
        let dual = dual_data(&trefoil());
        let b = dual.block(1).unwrap();
        assert_eq!(b.plus, m(&[&[0, 1], &[-1, -1]]));
        assert_eq!(b.minus, m(&[&[1, 1], &[-1, 0]]));
        assert_eq!(alexander(&dual, 1).unwrap(), delta_trefoil());
        assert_eq!(dual_data(&SeifertData::trivial(3)), SeifertData::trivial(3));
        assert_eq!(dual_data(&dual), trefoil());
    }

    #[test]
    fn random_generators() {
        let empty = random_data(2, &[0, 0], 3, 7).unwrap();
        assert_eq!(empty, SeifertData::trivial(2));
        assert_eq!(random_data(3, &[2, 2, 2], 2, 11).unwrap(), random_data(3, &[2, 2, 2], 2, 11).unwrap());
        assert_ne!(random_data(3, &[2, 2, 2], 2, 11).unwrap(), random_data(3, &[2, 2, 2], 2, 12).unwrap());
        for seed in 0..20 {
            let data = random_data(3, &[1, 4, 1], 2, seed).unwrap();
            assert!(validate(&data).is_valid());
            assert!(duality_defects(&data).unwrap().is_empty(), "seed {seed}");
            assert!(data.blocks().values().all(|b| b.plus.entries().all(|x| num_traits::Signed::abs(x) <= int(3))));
        }
        assert!(matches!(random_data(1, &[3], 2, 0), Err(SeifertError::BlockLayout { .. })));
        assert!(matches!(random_data(2, &[1, 2], 2, 0), Err(SeifertError::BlockLayout { .. })));
        let raw = random_raw_data(2, &[2, 3], 3, 5);
        assert!(validate(&raw).is_valid());
        assert_eq!(raw.sizes(), vec![2, 3]);
    }

    #[test]
    fn unimodular_change_preserves_alexander() {
        let data = random_data(2, &[3, 3], 2, 99).unwrap();
        let changed = random_basis_change(&data, 4).unwrap();
        assert!(validate(&changed).is_valid());
        assert_eq!(alexander_all(&changed).unwrap(), alexander_all(&data).unwrap());
    }
}
