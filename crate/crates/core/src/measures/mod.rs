//! Quadratic SL-invariants of pure qubit states and the entanglement measures
//! built from them.
//!
//! Even `n`:
//!
//! ```text
//! I*(a,n) = Σ_{i < 2^(n-2)} sgn*(n,i) (a_{2i} a_{2^n-1-2i} - a_{2i+1} a_{2^n-2-2i})
//! τ       = 2 |I*(a,n)|
//! ```
//!
//! Odd `n` combines three quadratic forms into a quartic one:
//!
//! ```text
//! τ = 4 |Ī(a,n)² - 4 I*(a,n-1) I*_{+2^(n-1)}(a,n-1)|
//! ```
//!
//! where `I*(a,n-1)` reads the half of the amplitudes with qubit 1 in `|0⟩`
//! and `I*_{+2^(n-1)}(a,n-1)` the half with qubit 1 in `|1⟩`. The residual
//! `τ^(i)` is the odd measure after swapping qubits 1 and `i`, and `R` is their
//! mean.
//!
//! Nothing here normalizes its input. The even invariants are homogeneous of
//! degree 2 in the amplitudes, the odd measure of degree 4.

mod three_tangle;
mod wong;

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::Serialize;

use crate::bitops::parity_sign;
use crate::error::{Error, Parity, Result};
use crate::par::{self, Strategy};
use crate::state::{QubitPermutation, StateVector};

pub use three_tangle::three_tangle_oracle;
pub use wong::{wong_tangle, wong_tangle_capped, DEFAULT_ORACLE_CAP};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum InvariantKind {
    /// `I*(a,n)`, even `n`.
    IStarEven,
    /// `Ī(a,n)`, odd `n`.
    IBar,
    /// `I*(a,n-1)` on the qubit-1 = 0 half, odd `n`.
    IStarLow,
    /// `I*_{+2^(n-1)}(a,n-1)` on the qubit-1 = 1 half, odd `n`.
    IStarHigh,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InvariantValue {
    pub value: Complex64,
    pub kind: InvariantKind,
    /// Homogeneity degree in the amplitudes.
    pub degree: u32,
}

impl InvariantValue {
    fn quadratic(value: Complex64, kind: InvariantKind) -> Self {
        InvariantValue {
            value,
            kind,
            degree: 2,
        }
    }
}

/// Which scalar a [`MeasureReport`] carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Measure {
    /// Parity dispatch: even or odd `τ`.
    Tau,
    TauEven,
    TauOdd,
    /// `τ^(i)` for one-based qubit `i`.
    Residual(usize),
    /// The odd n-tangle.
    R,
    Concurrence,
    /// Wong–Christensen quartic even n-tangle (cross-reference oracle).
    Wong,
    /// Coffman–Kundu–Wootters 3-tangle (external cross-reference oracle).
    ThreeTangle,
}

impl fmt::Display for Measure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Measure::Tau => f.write_str("tau"),
            Measure::TauEven => f.write_str("tau-even"),
            Measure::TauOdd => f.write_str("tau-odd"),
            Measure::Residual(i) => write!(f, "residual:{i}"),
            Measure::R => f.write_str("r"),
            Measure::Concurrence => f.write_str("concurrence"),
            Measure::Wong => f.write_str("wong"),
            Measure::ThreeTangle => f.write_str("three-tangle"),
        }
    }
}

impl FromStr for Measure {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lower = s.to_ascii_lowercase();
        if let Some(rest) = lower.strip_prefix("residual:") {
            let i = rest
                .parse()
                .map_err(|_| Error::domain(format!("bad residual qubit `{rest}`")))?;
            return Ok(Measure::Residual(i));
        }
        match lower.as_str() {
            "tau" => Ok(Measure::Tau),
            "tau-even" | "even" => Ok(Measure::TauEven),
            "tau-odd" | "odd" => Ok(Measure::TauOdd),
            "r" => Ok(Measure::R),
            "concurrence" => Ok(Measure::Concurrence),
            "wong" => Ok(Measure::Wong),
            "three-tangle" | "3-tangle" => Ok(Measure::ThreeTangle),
            _ => Err(Error::domain(format!("unknown measure `{s}`"))),
        }
    }
}

impl Serialize for Measure {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MeasureReport {
    pub measure: Measure,
    pub n: usize,
    /// Raw homogeneous value; in `[0, 1]` for normalized input.
    pub value: f64,
    /// `τ^(1) ... τ^(n)` for the odd n-tangle.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residuals: Option<Vec<f64>>,
    pub input_norm: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub source: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tolerance: Option<f64>,
}

impl MeasureReport {
    fn new(measure: Measure, psi: &StateVector, value: f64) -> Self {
        MeasureReport {
            measure,
            n: psi.n(),
            value,
            residuals: None,
            input_norm: psi.norm(),
            source: None,
            tolerance: None,
        }
    }

    pub fn with_source(mut self, source: impl Into<String>) -> Self {
        self.source = Some(source.into());
        self
    }

    pub fn with_tolerance(mut self, tol: f64) -> Self {
        self.tolerance = Some(tol);
        self
    }
}

fn require(op: &'static str, psi: &StateVector, expected: Parity, min_n: usize) -> Result<usize> {
    let n = psi.n();
    let parity_ok = match expected {
        Parity::Even => n.is_multiple_of(2),
        Parity::Odd => n % 2 == 1,
    };
    if !parity_ok || n < min_n {
        return Err(Error::Parity { op, n, expected });
    }
    Ok(n)
}

// Kernels. `len` counts loop iterations; every iteration does exactly two
// complex multiplications per product pair.

fn i_star_kernel(a: &[Complex64], n: usize, strategy: Strategy) -> Complex64 {
    let top = (1usize << n) - 1;
    par::chunked_sum(1 << (n - 2), strategy, |range| {
        range
            .map(|i| {
                let lo = 2 * i;
                parity_sign(i) * (a[lo] * a[top - lo] - a[lo + 1] * a[top - 1 - lo])
            })
            .sum()
    })
}

fn i_bar_kernel(a: &[Complex64], n: usize, strategy: Strategy) -> Complex64 {
    let top = (1usize << n) - 1;
    let half = 1usize << (n - 1);
    par::chunked_sum(1 << (n - 3), strategy, |range| {
        range
            .map(|i| {
                let lo = 2 * i;
                let outer = a[lo] * a[top - lo] - a[lo + 1] * a[top - 1 - lo];
                let inner = a[half - 2 - lo] * a[half + 1 + lo] - a[half - 1 - lo] * a[half + lo];
                parity_sign(i) * (outer - inner)
            })
            .sum()
    })
}

/// The `(n-1)`-qubit even invariant over the half-space starting at `base`,
/// paired against indices counted down from `last`. `sgn*(n-1, i)` has an even
/// first argument here, so it is `(-1)^N(i)`.
fn half_kernel(
    a: &[Complex64],
    n: usize,
    base: usize,
    last: usize,
    strategy: Strategy,
) -> Complex64 {
    par::chunked_sum(1 << (n - 3), strategy, |range| {
        range
            .map(|i| {
                let lo = 2 * i;
                parity_sign(i) * (a[base + lo] * a[last - lo] - a[base + lo + 1] * a[last - 1 - lo])
            })
            .sum()
    })
}

/// `Σ_{k < 2^(n-1)} sign(k) a_k a_{2^n-1-k}`.
fn complement_pair_sum(
    a: &[Complex64],
    n: usize,
    strategy: Strategy,
    sign: impl Fn(usize) -> f64 + Sync,
) -> Complex64 {
    let top = (1usize << n) - 1;
    par::chunked_sum(1 << (n - 1), strategy, |range| {
        range.map(|k| sign(k) * (a[k] * a[top - k])).sum()
    })
}

/// `I*(a,n)` for even `n`; `2^(n-1)` complex multiplications.
pub fn i_star(psi: &StateVector) -> Result<InvariantValue> {
    i_star_with(psi, Strategy::default())
}

pub fn i_star_with(psi: &StateVector, strategy: Strategy) -> Result<InvariantValue> {
    let n = require("I*", psi, Parity::Even, 2)?;
    Ok(InvariantValue::quadratic(
        i_star_kernel(psi.amps(), n, strategy),
        InvariantKind::IStarEven,
    ))
}

/// `I*(a,n)` summed as `Σ (-1)^N(k) a_k a_{2^n-1-k}` over `k < 2^(n-1)`.
pub fn i_star_closed_form(psi: &StateVector) -> Result<InvariantValue> {
    let n = require("I* closed form", psi, Parity::Even, 2)?;
    Ok(InvariantValue::quadratic(
        complement_pair_sum(psi.amps(), n, Strategy::default(), parity_sign),
        InvariantKind::IStarEven,
    ))
}

/// `Ī(a,n)` for odd `n >= 3`.
pub fn i_bar(psi: &StateVector) -> Result<InvariantValue> {
    let n = require("Ī", psi, Parity::Odd, 3)?;
    Ok(InvariantValue::quadratic(
        i_bar_kernel(psi.amps(), n, Strategy::default()),
        InvariantKind::IBar,
    ))
}

/// `Ī(a,n)` summed as `Σ (-1)^N*(k) a_k a_{2^n-1-k}` over `k < 2^(n-1)`.
pub fn i_bar_closed_form(psi: &StateVector) -> Result<InvariantValue> {
    let n = require("Ī closed form", psi, Parity::Odd, 3)?;
    let drop_top = !(1usize << (n - 1));
    Ok(InvariantValue::quadratic(
        complement_pair_sum(psi.amps(), n, Strategy::default(), |k| {
            parity_sign(k & drop_top)
        }),
        InvariantKind::IBar,
    ))
}

/// `I*(a,n-1)`: the even invariant of the qubit-1 = 0 half, odd `n >= 3`.
pub fn i_star_low(psi: &StateVector) -> Result<InvariantValue> {
    let n = require("I*(a,n-1)", psi, Parity::Odd, 3)?;
    let half = 1usize << (n - 1);
    Ok(InvariantValue::quadratic(
        half_kernel(psi.amps(), n, 0, half - 1, Strategy::default()),
        InvariantKind::IStarLow,
    ))
}

/// `I*_{+2^(n-1)}(a,n-1)`: the even invariant of the qubit-1 = 1 half.
pub fn i_star_high(psi: &StateVector) -> Result<InvariantValue> {
    let n = require("I*_{+2^(n-1)}(a,n-1)", psi, Parity::Odd, 3)?;
    let half = 1usize << (n - 1);
    Ok(InvariantValue::quadratic(
        half_kernel(psi.amps(), n, half, 2 * half - 1, Strategy::default()),
        InvariantKind::IStarHigh,
    ))
}

/// `Ī² - 4 I*(a,n-1) I*_{+2^(n-1)}(a,n-1)`, the quartic SL-invariant behind
/// the odd measure.
pub fn odd_invariant(psi: &StateVector) -> Result<Complex64> {
    odd_invariant_with(psi, Strategy::default())
}

pub fn odd_invariant_with(psi: &StateVector, strategy: Strategy) -> Result<Complex64> {
    let n = require("odd invariant", psi, Parity::Odd, 3)?;
    let a = psi.amps();
    let half = 1usize << (n - 1);
    let bar = i_bar_kernel(a, n, strategy);
    let low = half_kernel(a, n, 0, half - 1, strategy);
    let high = half_kernel(a, n, half, 2 * half - 1, strategy);
    Ok(bar * bar - 4.0 * low * high)
}

/// Even-n measure `τ = 2|I*(a,n)|`. At `n = 2` this is the concurrence.
pub fn tau_even(psi: &StateVector) -> Result<MeasureReport> {
    tau_even_with(psi, Strategy::default())
}

pub fn tau_even_with(psi: &StateVector, strategy: Strategy) -> Result<MeasureReport> {
    let value = 2.0 * i_star_with(psi, strategy)?.value.norm();
    Ok(MeasureReport::new(Measure::TauEven, psi, value))
}

/// Odd-n measure `τ = 4|Ī² - 4 I*(a,n-1) I*_{+2^(n-1)}(a,n-1)|`. At `n = 3`
/// this is the 3-tangle.
pub fn tau_odd(psi: &StateVector) -> Result<MeasureReport> {
    tau_odd_with(psi, Strategy::default())
}

pub fn tau_odd_with(psi: &StateVector, strategy: Strategy) -> Result<MeasureReport> {
    let value = 4.0 * odd_invariant_with(psi, strategy)?.norm();
    Ok(MeasureReport::new(Measure::TauOdd, psi, value))
}

/// `τ` for either parity.
pub fn tau(psi: &StateVector) -> Result<MeasureReport> {
    let mut report = match psi.n() {
        n if n < 2 => {
            return Err(Error::domain(format!(
                "τ needs at least two qubits, got {n}"
            )));
        }
        n if n % 2 == 0 => tau_even(psi)?,
        _ => tau_odd(psi)?,
    };
    report.measure = Measure::Tau;
    Ok(report)
}

/// Residual entanglement with respect to qubit `i`: `τ((1,i) ψ)`, odd `n`.
pub fn tau_residual(psi: &StateVector, i: usize) -> Result<MeasureReport> {
    let n = require("τ^(i)", psi, Parity::Odd, 3)?;
    if i == 0 || i > n {
        return Err(Error::domain(format!(
            "qubit label {i} out of range 1..={n}"
        )));
    }
    let value = if i == 1 {
        tau_odd(psi)?.value
    } else {
        tau_odd(&psi.permute(&QubitPermutation::transposition(n, 1, i)?)?)?.value
    };
    Ok(MeasureReport::new(Measure::Residual(i), psi, value))
}

/// All residuals `τ^(1) ... τ^(n)`.
pub fn residuals(psi: &StateVector) -> Result<Vec<f64>> {
    let n = require("τ^(i)", psi, Parity::Odd, 3)?;
    (1..=n)
        .map(|i| tau_residual(psi, i).map(|r| r.value))
        .collect()
}

/// The odd n-tangle `R = (1/n) Σ τ^(i)`.
pub fn r_tangle(psi: &StateVector) -> Result<MeasureReport> {
    let n = require("R", psi, Parity::Odd, 3)?;
    let res = residuals(psi)?;
    let value = res.iter().sum::<f64>() / n as f64;
    let mut report = MeasureReport::new(Measure::R, psi, value);
    report.residuals = Some(res);
    Ok(report)
}

/// Two-qubit concurrence `2|a₀a₃ - a₁a₂|`, written out directly.
pub fn concurrence(psi: &StateVector) -> Result<MeasureReport> {
    if psi.n() != 2 {
        return Err(Error::domain(format!(
            "concurrence is a two-qubit measure, got n = {}",
            psi.n()
        )));
    }
    let a = psi.amps();
    let value = 2.0 * (a[0] * a[3] - a[1] * a[2]).norm();
    Ok(MeasureReport::new(Measure::Concurrence, psi, value))
}

/// Evaluates any [`Measure`] on `psi`.
pub fn evaluate(psi: &StateVector, measure: Measure) -> Result<MeasureReport> {
    let mut report = match measure {
        Measure::Tau => return tau(psi),
        Measure::TauEven => tau_even(psi)?,
        Measure::TauOdd => tau_odd(psi)?,
        Measure::Residual(i) => tau_residual(psi, i)?,
        Measure::R => r_tangle(psi)?,
        Measure::Concurrence => concurrence(psi)?,
        Measure::Wong => wong_tangle(psi)?,
        Measure::ThreeTangle => three_tangle_oracle(psi)?,
    };
    report.measure = measure;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::state::random::{random_state, rng_from_seed};
    use crate::state::ProductExpression;
    use approx::assert_abs_diff_eq;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn expr(text: &str) -> StateVector {
        ProductExpression::parse(text).unwrap().build().unwrap()
    }

    fn ghz(n: usize) -> StateVector {
        StateVector::ghz(n).unwrap()
    }

    fn w(n: usize) -> StateVector {
        StateVector::w(n).unwrap()
    }

    #[test]
    fn i_star_examples() {
        assert_abs_diff_eq!(
            i_star(&StateVector::bell()).unwrap().value.re,
            0.5,
            epsilon = 1e-15
        );
        let g4 = i_star(&ghz(4)).unwrap();
        assert_abs_diff_eq!(g4.value.re, 0.5, epsilon = 1e-15);
        assert_eq!(g4.kind, InvariantKind::IStarEven);
        assert_eq!(g4.degree, 2);
        assert_eq!(i_star(&w(4)).unwrap().value, Complex64::ZERO);
        assert!(matches!(
            i_star(&ghz(3)),
            Err(Error::Parity {
                expected: Parity::Even,
                n: 3,
                ..
            })
        ));
    }

    #[test]
    fn i_star_closed_form_examples() {
        assert_abs_diff_eq!(
            i_star_closed_form(&StateVector::bell()).unwrap().value.re,
            0.5
        );
        assert_abs_diff_eq!(
            i_star_closed_form(&ghz(6)).unwrap().value.re,
            0.5,
            epsilon = 1e-15
        );
        assert!(i_star_closed_form(&ghz(5)).is_err());
    }

    #[test]
    fn i_bar_examples() {
        assert_abs_diff_eq!(i_bar(&ghz(3)).unwrap().value.re, 0.5, epsilon = 1e-15);
        assert_abs_diff_eq!(i_bar(&ghz(5)).unwrap().value.re, 0.5, epsilon = 1e-15);
        assert_eq!(i_bar(&w(3)).unwrap().value, Complex64::ZERO);
        assert!(i_bar(&ghz(4)).is_err());
        assert_abs_diff_eq!(
            i_bar_closed_form(&ghz(3)).unwrap().value.re,
            0.5,
            epsilon = 1e-15
        );
        let zero = StateVector::basis(5, 0).unwrap();
        assert_eq!(i_bar_closed_form(&zero).unwrap().value, Complex64::ZERO);
        assert!(i_bar_closed_form(&ghz(4)).is_err());
    }

    #[test]
    fn half_invariants() {
        let g = ghz(3);
        assert_eq!(i_star_low(&g).unwrap().value, Complex64::ZERO);
        assert_eq!(i_star_high(&g).unwrap().value, Complex64::ZERO);

        let one = StateVector::basis(1, 1).unwrap();
        let zero = StateVector::basis(1, 0).unwrap();
        let one_bell = one.tensor(&StateVector::bell()).unwrap();
        assert_abs_diff_eq!(
            i_star_high(&one_bell).unwrap().value.re,
            0.5,
            epsilon = 1e-15
        );
        assert_eq!(i_star_low(&one_bell).unwrap().value, Complex64::ZERO);
        let zero_bell = zero.tensor(&StateVector::bell()).unwrap();
        assert_abs_diff_eq!(
            i_star_low(&zero_bell).unwrap().value.re,
            0.5,
            epsilon = 1e-15
        );
        assert_eq!(i_star_high(&zero_bell).unwrap().value, Complex64::ZERO);
        assert_eq!(
            i_star_high(&one_bell).unwrap().kind,
            InvariantKind::IStarHigh
        );
        assert!(i_star_low(&ghz(4)).is_err());
    }

    #[test]
    fn invariants_scale_quadratically() {
        let psi = random_state(6, 1).unwrap();
        let k = Complex64::new(0.7, -1.3);
        let base = i_star(&psi).unwrap().value;
        let scaled = i_star(&psi.scaled(k)).unwrap().value;
        assert!((scaled - base * k * k).norm() < 1e-14);
        let odd = random_state(5, 2).unwrap();
        let b = i_bar(&odd).unwrap().value;
        assert!((i_bar(&odd.scaled(k)).unwrap().value - b * k * k).norm() < 1e-14);
    }

    #[test]
    fn tau_even_examples() {
        assert_abs_diff_eq!(
            tau_even(&expr("bell@1,2 x bell@3,4")).unwrap().value,
            1.0,
            epsilon = 1e-12
        );
        assert_abs_diff_eq!(
            tau_even(&expr("ghz:3@1,2,3 x ghz:3@4,5,6")).unwrap().value,
            0.0,
            epsilon = 1e-12
        );
        assert_abs_diff_eq!(
            tau_even(&expr("ghz:4@1,4,5,6 x bell@2,3")).unwrap().value,
            1.0,
            epsilon = 1e-12
        );
        assert_abs_diff_eq!(
            tau_even(&expr("ghz:3@1,3,5 x ghz:3@2,4,6")).unwrap().value,
            0.0,
            epsilon = 1e-12
        );
        assert!(tau_even(&ghz(5)).is_err());
    }

    #[test]
    fn tau_odd_examples() {
        assert_abs_diff_eq!(
            tau_odd(&expr("bell@1,2 x ghz:3@3,4,5")).unwrap().value,
            0.0,
            epsilon = 1e-12
        );
        assert_abs_diff_eq!(
            tau_odd(&expr("ghz:3@1,2,3 x bell@4,5")).unwrap().value,
            1.0,
            epsilon = 1e-12
        );
        assert_abs_diff_eq!(
            tau_odd(&expr("ghz:3@1,2,5 x bell@3,4")).unwrap().value,
            1.0,
            epsilon = 1e-12
        );
        assert_abs_diff_eq!(
            tau_odd(&expr("bell@1,5 x ghz:3@2,3,4")).unwrap().value,
            0.0,
            epsilon = 1e-12
        );
        assert_abs_diff_eq!(tau_odd(&ghz(5)).unwrap().value, 1.0, epsilon = 1e-12);
        assert!(tau_odd(&ghz(4)).is_err());
    }

    #[test]
    fn tau_dispatch() {
        assert_abs_diff_eq!(tau(&ghz(4)).unwrap().value, 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(tau(&ghz(3)).unwrap().value, 1.0, epsilon = 1e-12);
        assert_eq!(tau(&ghz(3)).unwrap().measure, Measure::Tau);
        for n in 2..=9 {
            assert_eq!(tau(&StateVector::basis(n, 3).unwrap()).unwrap().value, 0.0);
        }
        assert!(tau(&StateVector::basis(1, 0).unwrap()).is_err());
    }

    #[test]
    fn residual_examples() {
        let psi = expr("bell@1,2 x ghz:3@3,4,5");
        assert_abs_diff_eq!(tau_residual(&psi, 5).unwrap().value, 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(tau_residual(&psi, 1).unwrap().value, 0.0, epsilon = 1e-12);
        assert!(tau_residual(&psi, 0).is_err());
        assert!(tau_residual(&psi, 6).is_err());
        assert!(matches!(
            tau_residual(&ghz(4), 1),
            Err(Error::Parity { .. })
        ));
    }

    #[test]
    fn residuals_agree_at_three_qubits() {
        for seed in 0..500 {
            let psi = random_state(3, seed).unwrap();
            let r = residuals(&psi).unwrap();
            assert!(
                (r[0] - r[1]).abs() <= 1e-12 && (r[0] - r[2]).abs() <= 1e-12,
                "{r:?}"
            );
        }
    }

    #[test]
    fn r_tangle_examples() {
        assert_abs_diff_eq!(r_tangle(&ghz(3)).unwrap().value, 1.0, epsilon = 1e-12);
        let report = r_tangle(&expr("bell@1,2 x ghz:3@3,4,5")).unwrap();
        assert_abs_diff_eq!(report.value, 0.6, epsilon = 1e-12);
        let res = report.residuals.clone().unwrap();
        for (got, want) in res.iter().zip([0.0, 0.0, 1.0, 1.0, 1.0]) {
            assert_abs_diff_eq!(*got, want, epsilon = 1e-12);
        }
        assert_abs_diff_eq!(report.value, res.iter().sum::<f64>() / 5.0);
        assert_abs_diff_eq!(r_tangle(&w(3)).unwrap().value, 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(
            three_tangle_oracle(&w(3)).unwrap().value,
            0.0,
            epsilon = 1e-12
        );
        assert!(r_tangle(&ghz(4)).is_err());
    }

    #[test]
    fn concurrence_examples() {
        assert_abs_diff_eq!(
            concurrence(&StateVector::bell()).unwrap().value,
            1.0,
            epsilon = 1e-15
        );
        assert_eq!(
            concurrence(&StateVector::basis(2, 0).unwrap())
                .unwrap()
                .value,
            0.0
        );
        let plus_plus = StateVector::from_real(&[0.5, 0.5, 0.5, 0.5]).unwrap();
        assert_eq!(concurrence(&plus_plus).unwrap().value, 0.0);
        assert!(concurrence(&ghz(3)).is_err());
        for seed in 0..100 {
            let psi = random_state(2, seed).unwrap();
            let diff = concurrence(&psi).unwrap().value - tau_even(&psi).unwrap().value;
            assert!(diff.abs() <= 1e-15);
        }
    }

    #[test]
    fn unnormalized_reports_carry_norm() {
        let psi = StateVector::bell().scaled(c(3.0));
        let report = tau_even(&psi).unwrap();
        assert_abs_diff_eq!(report.value, 9.0, epsilon = 1e-12);
        assert_abs_diff_eq!(report.input_norm, 3.0, epsilon = 1e-12);
    }

    #[test]
    fn homogeneity_degrees() {
        let mut rng = rng_from_seed(5);
        for n in [2usize, 4, 6] {
            let psi = crate::state::random::random_state_from(n, &mut rng).unwrap();
            let k = crate::state::random::complex_gaussian(&mut rng);
            let base = tau_even(&psi).unwrap().value;
            let scaled = tau_even(&psi.scaled(k)).unwrap().value;
            assert!((scaled - k.norm_sqr() * base).abs() <= 1e-9 * scaled.max(1.0));
        }
        for n in [3usize, 5, 7] {
            let psi = crate::state::random::random_state_from(n, &mut rng).unwrap();
            let k = crate::state::random::complex_gaussian(&mut rng);
            let base = tau_odd(&psi).unwrap().value;
            let scaled = tau_odd(&psi.scaled(k)).unwrap().value;
            assert!((scaled - k.norm_sqr().powi(2) * base).abs() <= 1e-9 * scaled.max(1.0));
        }
    }

    #[test]
    fn strategies_bit_identical() {
        let even = random_state(16, 3).unwrap();
        let odd = random_state(15, 4).unwrap();
        let a = i_star_with(&even, Strategy::Sequential).unwrap().value;
        let b = i_star_with(&even, Strategy::Parallel).unwrap().value;
        assert_eq!(
            (a.re.to_bits(), a.im.to_bits()),
            (b.re.to_bits(), b.im.to_bits())
        );
        let a = odd_invariant_with(&odd, Strategy::Sequential).unwrap();
        let b = odd_invariant_with(&odd, Strategy::Parallel).unwrap();
        assert_eq!(
            (a.re.to_bits(), a.im.to_bits()),
            (b.re.to_bits(), b.im.to_bits())
        );
    }

    #[test]
    fn measure_names_round_trip() {
        for m in [
            Measure::Tau,
            Measure::TauEven,
            Measure::TauOdd,
            Measure::Residual(3),
            Measure::R,
            Measure::Concurrence,
            Measure::Wong,
            Measure::ThreeTangle,
        ] {
            assert_eq!(m.to_string().parse::<Measure>().unwrap(), m);
        }
        assert!("entropy".parse::<Measure>().is_err());
        assert!("residual:x".parse::<Measure>().is_err());
    }

    #[test]
    fn evaluate_dispatch() {
        let psi = expr("ghz:3@1,2,3 x bell@4,5");
        let r = evaluate(&psi, Measure::Residual(4)).unwrap();
        assert_eq!(r.measure, Measure::Residual(4));
        assert!(evaluate(&psi, Measure::Concurrence).is_err());
        assert_abs_diff_eq!(
            evaluate(&ghz(3), Measure::ThreeTangle).unwrap().value,
            1.0,
            epsilon = 1e-12
        );
    }
}
