//! Named verification suites. Each suite is a list of checks; a check runs a
//! number of seeded trials and keeps the worst deviation seen.
//!
//! Every trial owns a generator seeded from `(suite seed, check name, trial
//! index)`, so reports do not depend on the execution strategy or on which
//! other checks ran.

use std::fmt::{self, Write as _};
use std::str::FromStr;

use num_complex::Complex64;
use rand::seq::SliceRandom;
use rand::Rng;
use serde::Serialize;

use crate::bitops::properties::{
    complement_identity, even_sgn_star_parity, sign_properties, PropertyTally,
};
use crate::error::{Error, Result};
use crate::locc::{make_povm_from, monotone_average, random_povm, MonotoneMeasure, PovmPair};
use crate::measures::{
    i_bar, i_bar_closed_form, i_star, i_star_closed_form, i_star_high, i_star_low, odd_invariant,
    r_tangle, residuals, tau, tau_even, tau_odd, tau_residual, three_tangle_oracle, wong_tangle,
};
use crate::par::{map_trials, Strategy};
use crate::state::random::{
    complex_gaussian, derive_seed, random_operator_from, random_state_from, rng_from_seed,
    OperatorKind, SeededRng,
};
use crate::state::{LocalOperator, ProductExpression, QubitPermutation, StateVector};

/// Tolerance for covariance, permutation, product, monotone and range checks.
pub const DEFAULT_TOL: f64 = 1e-9;
/// Tolerance for algebraic identities.
pub const IDENTITY_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SuiteName {
    Bitops,
    CovarianceEven,
    CovarianceOdd,
    Permutation,
    Product,
    Monotone,
    Range,
    ClosedForm,
    OracleN3,
    GoldenExamples,
}

impl SuiteName {
    pub const ALL: [SuiteName; 10] = [
        SuiteName::Bitops,
        SuiteName::CovarianceEven,
        SuiteName::CovarianceOdd,
        SuiteName::Permutation,
        SuiteName::Product,
        SuiteName::Monotone,
        SuiteName::Range,
        SuiteName::ClosedForm,
        SuiteName::OracleN3,
        SuiteName::GoldenExamples,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            SuiteName::Bitops => "bitops",
            SuiteName::CovarianceEven => "covariance-even",
            SuiteName::CovarianceOdd => "covariance-odd",
            SuiteName::Permutation => "permutation",
            SuiteName::Product => "product",
            SuiteName::Monotone => "monotone",
            SuiteName::Range => "range",
            SuiteName::ClosedForm => "closed-form",
            SuiteName::OracleN3 => "oracle-n3",
            SuiteName::GoldenExamples => "golden-examples",
        }
    }

    /// Largest qubit count the suite touches by default.
    pub fn default_n_max(self) -> usize {
        match self {
            SuiteName::Bitops | SuiteName::ClosedForm => 12,
            SuiteName::CovarianceEven => 10,
            SuiteName::CovarianceOdd | SuiteName::Permutation | SuiteName::Range => 9,
            SuiteName::Product => 7,
            SuiteName::Monotone | SuiteName::GoldenExamples => 6,
            SuiteName::OracleN3 => 4,
        }
    }

    /// Random trials per check by default; zero for exhaustive suites.
    pub fn default_trials(self) -> usize {
        match self {
            SuiteName::Bitops | SuiteName::GoldenExamples => 0,
            SuiteName::CovarianceEven | SuiteName::CovarianceOdd => 100,
            SuiteName::Permutation => 200,
            SuiteName::Product => 50,
            SuiteName::Monotone => 2000,
            SuiteName::Range => 10_000,
            SuiteName::ClosedForm | SuiteName::OracleN3 => 1000,
        }
    }
}

impl fmt::Display for SuiteName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SuiteName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SuiteName::ALL
            .into_iter()
            .find(|name| name.as_str() == s)
            .ok_or_else(|| Error::domain(format!("unknown suite `{s}`")))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteConfig {
    pub suite: SuiteName,
    pub n_max: usize,
    pub trials: usize,
    pub seed: u64,
    /// Overrides every check's default tolerance when set.
    pub tol: Option<f64>,
    pub strategy: Strategy,
}

impl SuiteConfig {
    pub fn new(suite: SuiteName) -> Self {
        SuiteConfig {
            suite,
            n_max: suite.default_n_max(),
            trials: suite.default_trials(),
            seed: 0,
            tol: None,
            strategy: Strategy::default(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.suite.default_trials() > 0 && self.trials == 0 {
            return Err(Error::domain("trials must be at least 1"));
        }
        if let Some(tol) = self.tol {
            if !(tol > 0.0 && tol.is_finite()) {
                return Err(Error::domain(format!(
                    "tolerance must be positive, got {tol}"
                )));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub passed: bool,
    /// Recorded-only checks never fail the suite.
    pub asserted: bool,
    pub worst_deviation: f64,
    pub tolerance: f64,
    pub count: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteReport {
    pub suite: SuiteName,
    pub seed: u64,
    pub n_max: usize,
    pub trials: usize,
    pub checks: Vec<CheckReport>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed || !c.asserted)
    }

    pub fn asserted_counts(&self) -> (usize, usize) {
        let asserted = self.checks.iter().filter(|c| c.asserted);
        let total = asserted.clone().count();
        (asserted.filter(|c| c.passed).count(), total)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "suite {} (seed {}, n_max {}, trials {})",
            self.suite, self.seed, self.n_max, self.trials
        );
        let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
        for c in &self.checks {
            let status = match (c.asserted, c.passed) {
                (false, _) => "info",
                (true, true) => "pass",
                (true, false) => "FAIL",
            };
            let _ = writeln!(
                out,
                "  {status}  {:<width$}  worst {:.3e}  tol {:.0e}  count {}",
                c.name, c.worst_deviation, c.tolerance, c.count
            );
        }
        let (pass, total) = self.asserted_counts();
        let _ = writeln!(out, "{pass}/{total} pass");
        out
    }
}

pub fn run_suite(config: &SuiteConfig) -> Result<SuiteReport> {
    config.validate()?;
    let mut ctx = Ctx {
        config,
        checks: Vec::new(),
    };
    match config.suite {
        SuiteName::Bitops => bitops_suite(&mut ctx),
        SuiteName::CovarianceEven => covariance_suite(&mut ctx, 4)?,
        SuiteName::CovarianceOdd => covariance_suite(&mut ctx, 5)?,
        SuiteName::Permutation => permutation_suite(&mut ctx)?,
        SuiteName::Product => product_suite(&mut ctx)?,
        SuiteName::Monotone => monotone_suite(&mut ctx)?,
        SuiteName::Range => range_suite(&mut ctx)?,
        SuiteName::ClosedForm => closed_form_suite(&mut ctx)?,
        SuiteName::OracleN3 => oracle_suite(&mut ctx)?,
        SuiteName::GoldenExamples => golden_suite(&mut ctx)?,
    }
    Ok(SuiteReport {
        suite: config.suite,
        seed: config.seed,
        n_max: config.n_max,
        trials: config.trials,
        checks: ctx.checks,
    })
}

struct Ctx<'a> {
    config: &'a SuiteConfig,
    checks: Vec<CheckReport>,
}

impl Ctx<'_> {
    fn tol(&self, default: f64) -> f64 {
        self.config.tol.unwrap_or(default)
    }

    fn wants(&self, n: usize) -> bool {
        n <= self.config.n_max
    }

    fn push(&mut self, name: impl Into<String>, worst: f64, tol: f64, count: u64, asserted: bool) {
        self.checks.push(CheckReport {
            name: name.into(),
            passed: worst <= tol,
            asserted,
            worst_deviation: worst,
            tolerance: tol,
            count,
        });
    }

    /// Runs `count` seeded trials, each returning the deviations it saw, and
    /// records the worst one. A NaN deviation counts as a failure.
    fn trials<F>(&mut self, name: &str, count: usize, default_tol: f64, f: F) -> Result<()>
    where
        F: Fn(&mut SeededRng) -> Result<Vec<f64>> + Sync + Send,
    {
        let stream = stream_id(name);
        let seed = self.config.seed;
        let outcomes = map_trials(count, self.config.strategy, |t| {
            f(&mut rng_from_seed(derive_seed(seed, stream, t as u64)))
        });
        let mut worst = 0.0f64;
        let mut samples = 0u64;
        for outcome in outcomes {
            for d in outcome? {
                samples += 1;
                worst = if d.is_nan() {
                    f64::INFINITY
                } else {
                    worst.max(d)
                };
            }
        }
        let tol = self.tol(default_tol);
        self.push(name, worst, tol, samples, true);
        Ok(())
    }

    fn tally(&mut self, tally: &PropertyTally) {
        self.push(
            tally.name,
            tally.violations as f64,
            0.0,
            tally.checked,
            true,
        );
    }
}

/// FNV-1a; names a stable per-check random stream.
fn stream_id(name: &str) -> u64 {
    name.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| {
        (h ^ b as u64).wrapping_mul(0x0000_0100_0000_01b3)
    })
}

fn rel_dev(got: Complex64, want: Complex64, scale: f64) -> f64 {
    (got - want).norm() / want.norm().max(scale).max(f64::MIN_POSITIVE)
}

fn rel_dev_real(got: f64, want: f64, scale: f64) -> f64 {
    rel_dev(got.into(), want.into(), scale)
}

/// `τ` with the single-qubit case taken as zero.
fn tau_or_zero(psi: &StateVector) -> Result<f64> {
    if psi.n() < 2 {
        Ok(0.0)
    } else {
        Ok(tau(psi)?.value)
    }
}

fn bitops_suite(ctx: &mut Ctx) {
    let n_max = ctx.config.n_max.min(30) as u32;
    for tally in sign_properties(n_max) {
        ctx.tally(&tally);
    }
    ctx.tally(&complement_identity(n_max.min(20)));
    ctx.tally(&even_sgn_star_parity(n_max));
}

const OPERATOR_KINDS: [OperatorKind; 5] = [
    OperatorKind::General,
    OperatorKind::SpecialLinear,
    OperatorKind::Unitary,
    OperatorKind::Contraction,
    OperatorKind::RankOne,
];

fn random_tuple(n: usize, rng: &mut SeededRng) -> Vec<LocalOperator> {
    (0..n)
        .map(|_| {
            let kind = *OPERATOR_KINDS.choose(rng).expect("non-empty");
            random_operator_from(kind, rng)
        })
        .collect()
}

fn det_product(ops: &[LocalOperator]) -> Complex64 {
    ops.iter().map(LocalOperator::det).product()
}

/// Even (`first = 4`) or odd (`first = 5`) covariance under local operators
/// that may be singular. Deviations are relative to
/// `max(|predicted|, ‖ψ'‖^d)` with `d` the homogeneity degree.
fn covariance_suite(ctx: &mut Ctx, first: usize) -> Result<()> {
    let trials = ctx.config.trials;
    for n in (first..=ctx.config.n_max).step_by(2) {
        if first == 4 {
            ctx.trials(
                &format!("i-star-det-n{n}"),
                trials,
                DEFAULT_TOL,
                move |rng| {
                    let psi = random_state_from(n, rng)?;
                    let ops = random_tuple(n, rng);
                    let image = psi.apply_local(&ops)?;
                    let det = det_product(&ops);
                    let scale = image.norm_sqr();
                    Ok(vec![
                        rel_dev(i_star(&image)?.value, i_star(&psi)?.value * det, scale),
                        rel_dev_real(
                            tau_even(&image)?.value,
                            tau_even(&psi)?.value * det.norm(),
                            scale,
                        ),
                    ])
                },
            )?;
        } else {
            ctx.trials(
                &format!("odd-invariant-det2-n{n}"),
                trials,
                DEFAULT_TOL,
                move |rng| {
                    let psi = random_state_from(n, rng)?;
                    let ops = random_tuple(n, rng);
                    let image = psi.apply_local(&ops)?;
                    let det = det_product(&ops);
                    let scale = image.norm_sqr().powi(2);
                    Ok(vec![
                        rel_dev(
                            odd_invariant(&image)?,
                            odd_invariant(&psi)? * det * det,
                            scale,
                        ),
                        rel_dev_real(
                            tau_odd(&image)?.value,
                            tau_odd(&psi)?.value * det.norm_sqr(),
                            scale,
                        ),
                    ])
                },
            )?;
        }
        let degree = if first == 4 { 1 } else { 2 };
        ctx.trials(
            &format!("homogeneity-n{n}"),
            trials,
            DEFAULT_TOL,
            move |rng| {
                let psi = random_state_from(n, rng)?;
                let c = complex_gaussian(rng);
                let factor = c.norm_sqr().powi(degree);
                let scaled = tau(&psi.scaled(c))?.value;
                Ok(vec![rel_dev_real(
                    scaled,
                    factor * tau(&psi)?.value,
                    factor,
                )])
            },
        )?;
    }
    Ok(())
}

fn tau_even_value(psi: &StateVector) -> Result<f64> {
    Ok(tau_even(psi)?.value)
}

fn tau_odd_value(psi: &StateVector) -> Result<f64> {
    Ok(tau_odd(psi)?.value)
}

fn r_value(psi: &StateVector) -> Result<f64> {
    Ok(r_tangle(psi)?.value)
}

/// `f` is unchanged by every permutation in `perms`, over `states` random states.
fn invariance(
    ctx: &mut Ctx,
    name: &str,
    n: usize,
    perms: Vec<QubitPermutation>,
    states: usize,
    f: fn(&StateVector) -> Result<f64>,
) -> Result<()> {
    ctx.trials(name, states, DEFAULT_TOL, move |rng| {
        let psi = random_state_from(n, rng)?;
        let base = f(&psi)?;
        perms
            .iter()
            .map(|pi| Ok((f(&psi.permute(pi)?)? - base).abs()))
            .collect()
    })
}

fn permutation_suite(ctx: &mut Ctx) -> Result<()> {
    let n_max = ctx.config.n_max;
    const STATES: usize = 4;
    let sampled = ctx.config.trials;

    if ctx.wants(4) {
        invariance(
            ctx,
            "tau-even-all-perms-n4",
            4,
            QubitPermutation::all(4),
            STATES,
            tau_even_value,
        )?;
    }
    if ctx.wants(5) {
        invariance(
            ctx,
            "tau-odd-perms-fixing-1-n5",
            5,
            QubitPermutation::all_fixing(5, 1),
            STATES,
            tau_odd_value,
        )?;
        invariance(
            ctx,
            "r-all-perms-n5",
            5,
            QubitPermutation::all(5),
            STATES,
            r_value,
        )?;
    }
    if ctx.wants(7) {
        invariance(
            ctx,
            "r-all-perms-n7",
            7,
            QubitPermutation::all(7),
            2,
            r_value,
        )?;
    }

    for n in 6..=ctx.config.n_max.min(9) {
        let name = if n % 2 == 0 {
            format!("tau-even-sampled-n{n}")
        } else {
            format!("tau-odd-sampled-fixing-1-n{n}")
        };
        ctx.trials(&name, sampled, DEFAULT_TOL, move |rng| {
            let psi = random_state_from(n, rng)?;
            let pi = if n % 2 == 0 {
                QubitPermutation::random(n, rng)
            } else {
                QubitPermutation::random_fixing(n, 1, rng)
            };
            Ok(vec![
                (tau(&psi.permute(&pi)?)?.value - tau(&psi)?.value).abs()
            ])
        })?;
    }

    for n in [5, 7, 9].into_iter().filter(|&n| n <= n_max) {
        ctx.trials(
            &format!("residual-perms-fixing-i-n{n}"),
            sampled,
            DEFAULT_TOL,
            move |rng| {
                let psi = random_state_from(n, rng)?;
                let i = rng.gen_range(1..=n);
                let pi = QubitPermutation::random_fixing(n, i, rng);
                let moved = tau_residual(&psi.permute(&pi)?, i)?.value;
                Ok(vec![(moved - tau_residual(&psi, i)?.value).abs()])
            },
        )?;
    }
    Ok(())
}

fn product_prediction(n: usize, l: usize, phi: &StateVector, omega: &StateVector) -> Result<f64> {
    Ok(match (n % 2, l % 2) {
        (0, 0) => tau(phi)?.value * tau(omega)?.value,
        (1, 1) => tau_or_zero(phi)? * tau(omega)?.value.powi(2),
        _ => 0.0,
    })
}

fn product_suite(ctx: &mut Ctx) -> Result<()> {
    let n_max = ctx.config.n_max;
    let trials = ctx.config.trials;
    for n in (4..=ctx.config.n_max.min(7)).filter(|&n| n <= n_max) {
        for relabel in [false, true] {
            let name = match (relabel, n % 2) {
                (false, _) => format!("factorization-n{n}"),
                (true, 0) => format!("factorization-any-relabeling-n{n}"),
                (true, _) => format!("factorization-perms-fixing-1-n{n}"),
            };
            ctx.trials(&name, trials, DEFAULT_TOL, move |rng| {
                (1..n)
                    .map(|l| {
                        let phi = random_state_from(l, rng)?;
                        let omega = random_state_from(n - l, rng)?;
                        let mut psi = phi.tensor(&omega)?;
                        if relabel {
                            // odd n: qubit 1 must stay in the first factor, and
                            // stay its first qubit
                            let pi = if n % 2 == 0 {
                                QubitPermutation::random(n, rng)
                            } else {
                                QubitPermutation::random_fixing(n, 1, rng)
                            };
                            psi = psi.permute(&pi)?;
                        }
                        let want = product_prediction(n, l, &phi, &omega)?;
                        Ok((tau(&psi)?.value - want).abs())
                    })
                    .collect()
            })?;
        }
    }

    for n in [5, 7].into_iter().filter(|&n| n <= n_max) {
        ctx.trials(
            &format!("residual-product-rule-n{n}"),
            trials,
            DEFAULT_TOL,
            move |rng| {
                (1..n)
                    .map(|l| {
                        let phi = random_state_from(l, rng)?;
                        let omega = random_state_from(n - l, rng)?;
                        let psi = phi.tensor(&omega)?;
                        let i = rng.gen_range(1..=n);
                        let (own, local, other) = if i <= l {
                            (&phi, i, &omega)
                        } else {
                            (&omega, i - l, &phi)
                        };
                        let want = if own.n() % 2 == 1 && own.n() >= 3 {
                            tau_residual(own, local)?.value * tau(other)?.value.powi(2)
                        } else {
                            0.0
                        };
                        Ok((tau_residual(&psi, i)?.value - want).abs())
                    })
                    .collect()
            },
        )?;
    }

    const NONREACH_TUPLES: usize = 200;
    for (n, reference) in [
        (4usize, "bell@1,2 x bell@3,4"),
        (5, "ghz:3@1,2,3 x bell@4,5"),
    ] {
        if !ctx.wants(n) {
            continue;
        }
        let target = ProductExpression::parse(reference)?.build()?;
        ctx.trials(
            &format!("singular-images-of-ghz{n}"),
            NONREACH_TUPLES,
            DEFAULT_TOL,
            move |rng| {
                let ghz = StateVector::ghz(n)?;
                let forced = rng.gen_range(0..n);
                let ops: Vec<LocalOperator> = (0..n)
                    .map(|q| {
                        let kind = if q == forced || rng.gen_bool(0.5) {
                            OperatorKind::RankOne
                        } else {
                            *OPERATOR_KINDS.choose(rng).expect("non-empty")
                        };
                        random_operator_from(kind, rng)
                    })
                    .collect();
                let image = tau(&ghz.apply_local(&ops)?)?.value;
                Ok(vec![image, (tau(&target)?.value - 1.0).abs()])
            },
        )?;
    }
    Ok(())
}

const ETA_GRID: [f64; 3] = [0.25, 0.5, 1.0];

fn monotone_suite(ctx: &mut Ctx) -> Result<()> {
    let n_max = ctx.config.n_max;
    let trials = ctx.config.trials;
    for n in (3..=ctx.config.n_max.min(6)).filter(|&n| n <= n_max) {
        ctx.trials(
            &format!("average-does-not-increase-n{n}"),
            trials,
            DEFAULT_TOL,
            move |rng| {
                let psi = random_state_from(n, rng)?;
                let k = rng.gen_range(1..=n);
                let povm = random_povm(rng);
                let eta = *ETA_GRID.choose(rng).expect("non-empty");
                let measures = if n % 2 == 0 {
                    vec![MonotoneMeasure::Even]
                } else {
                    vec![
                        MonotoneMeasure::Odd,
                        MonotoneMeasure::Residual(rng.gen_range(1..=n)),
                        MonotoneMeasure::R,
                    ]
                };
                measures
                    .into_iter()
                    .map(|m| {
                        let before = m.value(&psi)?.powf(eta);
                        let after = monotone_average(&psi, k, &povm, eta, m)?;
                        Ok((after - before).max(0.0))
                    })
                    .collect()
            },
        )?;
    }

    if ctx.wants(4) {
        ctx.trials(
            "diagonal-average-on-ghz4",
            trials.div_ceil(10),
            DEFAULT_TOL,
            |rng| {
                let psi = StateVector::ghz(4)?;
                let (a, b): (f64, f64) = (rng.gen(), rng.gen());
                let povm = PovmPair::diagonal(a, b)?;
                let k = rng.gen_range(1..=4);
                let want = (a * b + ((1.0 - a * a) * (1.0 - b * b)).sqrt()) * tau_even(&psi)?.value;
                Ok(vec![(monotone_average(
                    &psi,
                    k,
                    &povm,
                    1.0,
                    MonotoneMeasure::Even,
                )? - want)
                    .abs()])
            },
        )?;
    }

    let n_hi = ctx.config.n_max.clamp(3, 6);
    ctx.trials(
        "scalar-unitary-povm-is-lossless",
        trials.div_ceil(10),
        DEFAULT_TOL,
        move |rng| {
            let n = rng.gen_range(3..=n_hi);
            let psi = random_state_from(n, rng)?;
            let p: f64 = rng.gen();
            let u = random_operator_from(OperatorKind::Unitary, rng);
            let povm = make_povm_from(u.scale(p.sqrt().into()), rng)?;
            let k = rng.gen_range(1..=n);
            let eta = *ETA_GRID.choose(rng).expect("non-empty");
            let m = if n % 2 == 0 {
                MonotoneMeasure::Even
            } else {
                MonotoneMeasure::R
            };
            let before = m.value(&psi)?.powf(eta);
            Ok(vec![
                (monotone_average(&psi, k, &povm, eta, m)? - before).abs()
            ])
        },
    )?;
    Ok(())
}

fn range_suite(ctx: &mut Ctx) -> Result<()> {
    let n_max = ctx.config.n_max;
    let trials = ctx.config.trials;
    for n in (2..=ctx.config.n_max.min(9)).filter(|&n| n <= n_max) {
        ctx.trials(
            &format!("unit-interval-n{n}"),
            trials,
            DEFAULT_TOL,
            move |rng| {
                let psi = random_state_from(n, rng)?;
                let mut values = vec![tau(&psi)?.value];
                if n % 2 == 1 {
                    values.push(r_tangle(&psi)?.value);
                }
                Ok(values
                    .into_iter()
                    .map(|v| (-v).max(v - 1.0).max(0.0))
                    .collect())
            },
        )?;
    }
    Ok(())
}

fn closed_form_suite(ctx: &mut Ctx) -> Result<()> {
    let trials = ctx.config.trials;
    if ctx.wants(2) {
        ctx.trials("concurrence-n2", trials, IDENTITY_TOL, |rng| {
            let psi = random_state_from(2, rng)?;
            let a = psi.amps();
            let direct = 2.0 * (a[0] * a[3] - a[1] * a[2]).norm();
            Ok(vec![(tau_even(&psi)?.value - direct).abs()])
        })?;
    }
    for n in 2..=ctx.config.n_max {
        if n % 2 == 0 {
            ctx.trials(
                &format!("i-star-closed-form-n{n}"),
                trials,
                IDENTITY_TOL,
                move |rng| {
                    let psi = random_state_from(n, rng)?;
                    Ok(vec![(i_star(&psi)?.value
                        - i_star_closed_form(&psi)?.value)
                        .norm()])
                },
            )?;
        } else {
            ctx.trials(
                &format!("i-bar-closed-form-n{n}"),
                trials,
                IDENTITY_TOL,
                move |rng| {
                    let psi = random_state_from(n, rng)?;
                    Ok(vec![
                        (i_bar(&psi)?.value - i_bar_closed_form(&psi)?.value).norm()
                    ])
                },
            )?;
            // the half-space forms are the even invariant of each half
            ctx.trials(
                &format!("half-invariants-n{n}"),
                trials.div_ceil(10),
                IDENTITY_TOL,
                move |rng| {
                    let psi = random_state_from(n, rng)?;
                    let half = psi.dim() / 2;
                    let low = StateVector::new(psi.amps()[..half].to_vec())?;
                    let high = StateVector::new(psi.amps()[half..].to_vec())?;
                    Ok(vec![
                        (i_star_low(&psi)?.value - i_star_closed_form(&low)?.value).norm(),
                        (i_star_high(&psi)?.value - i_star_closed_form(&high)?.value).norm(),
                    ])
                },
            )?;
        }
    }
    Ok(())
}

fn oracle_suite(ctx: &mut Ctx) -> Result<()> {
    let trials = ctx.config.trials;
    ctx.trials("three-tangle-oracle", trials, DEFAULT_TOL, |rng| {
        let psi = random_state_from(3, rng)?;
        Ok(vec![(tau_odd(&psi)?.value
            - three_tangle_oracle(&psi)?.value)
            .abs()])
    })?;
    ctx.trials("residuals-coincide-n3", trials, DEFAULT_TOL, |rng| {
        let psi = random_state_from(3, rng)?;
        let res = residuals(&psi)?;
        let tau = tau_odd(&psi)?.value;
        let r = r_tangle(&psi)?.value;
        Ok(vec![
            (res[0] - tau).abs(),
            (res[1] - tau).abs(),
            (res[2] - tau).abs(),
            (r - tau).abs(),
        ])
    })?;
    if ctx.wants(4) {
        // both are even-n monotones; no relation between them is asserted
        let name = "wong-vs-tau-even-squared-n4";
        let stream = stream_id(name);
        let count = trials.div_ceil(10);
        let seed = ctx.config.seed;
        let devs = map_trials(count, ctx.config.strategy, |t| -> Result<f64> {
            let psi =
                random_state_from(4, &mut rng_from_seed(derive_seed(seed, stream, t as u64)))?;
            Ok((wong_tangle(&psi)?.value - tau_even(&psi)?.value.powi(2)).abs())
        });
        let worst = devs
            .into_iter()
            .try_fold(0.0f64, |w, d| d.map(|d| w.max(d)))?;
        ctx.push(name, worst, ctx.tol(DEFAULT_TOL), count as u64, false);
    }
    Ok(())
}

fn golden_suite(ctx: &mut Ctx) -> Result<()> {
    let tol = ctx.tol(DEFAULT_TOL);
    let build = |text: &str| ProductExpression::parse(text)?.build();
    let value = |text: &str| -> Result<f64> { Ok(tau(&build(text)?)?.value) };

    let simple = [
        ("example-1", "bell@1,2 x bell@3,4", 1.0),
        ("example-2", "ghz:3@1,2,3 x ghz:3@4,5,6", 0.0),
        ("example-3", "ghz:4@1,4,5,6 x bell@2,3", 1.0),
        ("example-4", "ghz:3@1,3,5 x ghz:3@2,4,6", 0.0),
    ];
    for (name, text, want) in simple {
        ctx.push(name, (value(text)? - want).abs(), tol, 1, true);
    }

    let psi = build("bell@1,2 x ghz:3@3,4,5")?;
    let swapped = psi.permute(&QubitPermutation::transposition(5, 1, 5)?)?;
    let expected = build("bell@2,5 x ghz:3@1,3,4")?;
    let worst = [
        tau(&psi)?.value,
        (tau(&swapped)?.value - 1.0).abs(),
        (tau_residual(&psi, 5)?.value - 1.0).abs(),
        swapped.max_abs_diff(&expected),
    ]
    .into_iter()
    .fold(0.0, f64::max);
    ctx.push("example-5", worst, tol, 4, true);

    ctx.push(
        "example-6",
        (value("ghz:3@1,2,3 x bell@4,5")? - 1.0).abs(),
        tol,
        1,
        true,
    );
    ctx.push("example-7", value("bell@1,2 x ghz:3@3,4,5")?, tol, 1, true);
    let ex8 = (value("ghz:3@1,2,5 x bell@3,4")? - 1.0)
        .abs()
        .max(value("bell@1,5 x ghz:3@2,3,4")?);
    ctx.push("example-8", ex8, tol, 2, true);
    Ok(())
}
