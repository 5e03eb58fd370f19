//! Randomized verification sweeps over seeded Seifert data.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;

use crate::error::{InvariantError, SeifertError};
use crate::input::InputDocument;
use crate::invariants::{f_inversion_holds, verify_with_weights, TraceLadders};
use crate::seifert::{self, SeifertData};
use crate::weights::WeightTable;

/// Entries of the generated `V^+` lie in `[-bound, bound]`, those of the
/// paired blocks in `[-bound - 1, bound + 1]`.
pub const DEFAULT_BOUND: u32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    RouteEquality,
    Normalization,
    Parity,
    Additivity,
    Duality,
    BasisChange,
    DerivativeIdentity,
}

impl Check {
    pub const ALL: [Check; 7] = [
        Check::RouteEquality,
        Check::Normalization,
        Check::Parity,
        Check::Additivity,
        Check::Duality,
        Check::BasisChange,
        Check::DerivativeIdentity,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::RouteEquality => "route-equality",
            Check::Normalization => "normalization",
            Check::Parity => "parity",
            Check::Additivity => "additivity",
            Check::Duality => "duality",
            Check::BasisChange => "basis-change",
            Check::DerivativeIdentity => "derivative-identity",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepConfig {
    pub n: usize,
    pub sizes: Vec<usize>,
    pub instances: usize,
    pub seed: u64,
    pub bound: u32,
}

impl SweepConfig {
    /// Seed of instance `i`; the partner used for additivity takes `i + instances`.
    pub fn instance_seed(&self, i: usize) -> u64 {
        self.seed.wrapping_add(i as u64)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub instance: usize,
    pub seed: u64,
    pub check: Check,
    pub detail: String,
    pub data: Value,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CheckTally {
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepSummary {
    pub config: SweepConfig,
    pub kmax: usize,
    pub tallies: BTreeMap<Check, CheckTally>,
    /// For each `k`, how many instances had `Z_k = 0`.
    pub zero_counts: BTreeMap<usize, usize>,
    /// Instances whose every check passed.
    pub instances_passed: usize,
    pub first_failure: Option<Failure>,
}

impl SweepSummary {
    pub fn all_pass(&self) -> bool {
        self.first_failure.is_none()
    }
}

struct InstanceOutcome {
    failures: Vec<(Check, String)>,
    zero_ks: Vec<usize>,
    data: SeifertData,
}

fn run_instance(
    config: &SweepConfig,
    weights: &WeightTable,
    i: usize,
) -> Result<InstanceOutcome, InvariantError> {
    let data = seifert::random_data(config.n, &config.sizes, config.bound, config.instance_seed(i))?;
    let partner = seifert::random_data(
        config.n,
        &config.sizes,
        config.bound,
        config.instance_seed(i + config.instances),
    )?;
    let mut failures = Vec::new();
    let mut fail = |check: Check, detail: String| failures.push((check, detail));

    let report = verify_with_weights(&data, weights)?;
    if !(report.consistent && report.torsion_cross_check) {
        fail(
            Check::RouteEquality,
            format!("trace {:?} vs series {}", report.z_trace, report.z_series),
        );
    }
    let deltas_at_one = report.alexander.iter().all(|p| p.eval_at_one().is_one());
    let low_coeffs = report.z_series.coeff(0).is_zero() && report.z_series.coeff(1).is_zero();
    if !(deltas_at_one && low_coeffs && report.f_normalized) {
        fail(Check::Normalization, format!("alexander {:?}, series {}", report.alexander, report.z_series));
    }
    if !report.parity_vanishing {
        fail(Check::Parity, format!("z_trace {:?}", report.z_trace));
    }

    let sum = seifert::connected_sum(&data, &partner)?;
    let kmax = weights.kmax();
    let (la, lb, ls) = (
        TraceLadders::new(&data, kmax)?,
        TraceLadders::new(&partner, kmax)?,
        TraceLadders::new(&sum, kmax)?,
    );
    'additive: for k in 2..=kmax {
        for nu in 0..=k {
            if ls.l_knu(k, nu)? != la.l_knu(k, nu)? + lb.l_knu(k, nu)? {
                fail(Check::Additivity, format!("L_({k},{nu}) not additive"));
                break 'additive;
            }
        }
        if ls.z_k(k, weights)? != la.z_k(k, weights)? + lb.z_k(k, weights)? {
            fail(Check::Additivity, format!("Z_{k} not additive"));
            break;
        }
    }

    let dual = seifert::dual_data(&data);
    let dual_deltas = seifert::alexander_all(&dual)?;
    let n = data.n();
    let transposed = (1..=n).all(|d| dual_deltas[n - d] == report.alexander[d - 1].invert_variable());
    let involution = seifert::dual_data(&dual) == data;
    let dual_report = verify_with_weights(&dual, weights)?;
    let inversion = f_inversion_holds(&report.f_series, &dual_report.f_series, n)?;
    if !(transposed && involution && inversion) {
        fail(
            Check::Duality,
            format!("alexander transpose {transposed}, involution {involution}, f inversion {inversion}"),
        );
    }

    let conjugated = seifert::random_basis_change(&data, config.instance_seed(i).rotate_left(17))?;
    let conj_report = verify_with_weights(&conjugated, weights)?;
    if conj_report.z_trace != report.z_trace || conj_report.z_series != report.z_series {
        fail(Check::BasisChange, format!("z_trace {:?} became {:?}", report.z_trace, conj_report.z_trace));
    }

    if !seifert::torsion_derivative_identity(&data)? {
        fail(Check::DerivativeIdentity, "identity fails".to_string());
    }

    let zero_ks = report
        .z_trace
        .iter()
        .filter(|(_, z)| z.is_zero())
        .map(|(&k, _)| k)
        .collect();
    Ok(InstanceOutcome {
        failures,
        zero_ks,
        data,
    })
}

/// Runs every check on `config.instances` seeded instances in parallel.
/// Results are merged in instance order, so the summary is deterministic.
pub fn run_sweep(config: &SweepConfig, weights: &WeightTable) -> Result<SweepSummary, InvariantError> {
    if config.instances == 0 {
        return Err(InvariantError::BadIndex("instances must be at least 1".to_string()));
    }
    // Surface layout errors before fanning out.
    seifert::random_data(config.n, &config.sizes, config.bound, config.seed)
        .map_err(InvariantError::Seifert)?;
    let outcomes: Vec<InstanceOutcome> = (0..config.instances)
        .into_par_iter()
        .map(|i| run_instance(config, weights, i))
        .collect::<Result<_, _>>()?;

    let mut tallies: BTreeMap<Check, CheckTally> =
        Check::ALL.iter().map(|&c| (c, CheckTally::default())).collect();
    let mut zero_counts: BTreeMap<usize, usize> = (2..=weights.kmax()).map(|k| (k, 0)).collect();
    let mut first_failure = None;
    let mut instances_passed = 0;
    for (i, outcome) in outcomes.iter().enumerate() {
        for check in Check::ALL {
            let tally = tallies.get_mut(&check).expect("all checks tallied");
            match outcome.failures.iter().find(|(c, _)| *c == check) {
                Some((_, detail)) => {
                    tally.failed += 1;
                    if first_failure.is_none() {
                        first_failure = Some(Failure {
                            instance: i,
                            seed: config.instance_seed(i),
                            check,
                            detail: detail.clone(),
                            data: InputDocument::from_seifert(&outcome.data).to_json(),
                        });
                    }
                }
                None => tally.passed += 1,
            }
        }
        if outcome.failures.is_empty() {
            instances_passed += 1;
        }
        for k in &outcome.zero_ks {
            *zero_counts.entry(*k).or_default() += 1;
        }
    }
    Ok(SweepSummary {
        config: config.clone(),
        kmax: weights.kmax(),
        tallies,
        zero_counts,
        instances_passed,
        first_failure,
    })
}

/// Sizes `[1, 2, ..]` style layouts accepted by the generator for dimension `n`.
pub fn layout_is_dual(n: usize, sizes: &[usize]) -> Result<(), SeifertError> {
    seifert::random_data(n, sizes, 0, 0).map(|_| ())
}
