//! Two-outcome local POVMs and the averaged measures `⟨τ^η⟩` they produce.
//!
//! A pair `(A₁, A₂)` acts on one qubit with `A₁†A₁ + A₂†A₂ = I`. Writing
//! `A₁ = U₁ D₁ V₁` with `D₁ = diag(a, b)`, the second operator is built as
//! `A₂ = W (I - A₁†A₁)^{1/2}`, so `|det A₂| = √((1-a²)(1-b²))`. No relation
//! between the right factors of `A₁` and `A₂` is imposed.

use std::fmt;
use std::str::FromStr;

use rand::Rng;

use crate::error::{Error, Result};
use crate::measures::{r_tangle, tau_even, tau_odd, tau_residual};
use crate::state::random::{random_operator_from, rng_from_seed, OperatorKind};
use crate::state::{LocalOperator, StateVector};

/// Branch probabilities at or below this are treated as exactly zero.
pub const ZERO_PROBABILITY: f64 = 1e-24;

const NORMALIZED_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
pub struct PovmPair {
    pub a1: LocalOperator,
    pub a2: LocalOperator,
    /// Singular values of `a1`, `a >= b`.
    pub a: f64,
    pub b: f64,
}

impl PovmPair {
    /// Pairs two operators as given; the singular parameters are read off `a1`.
    pub fn new(a1: LocalOperator, a2: LocalOperator) -> Self {
        let [a, b] = a1.singular_values();
        PovmPair {
            a1,
            a2,
            a: a.min(1.0),
            b: b.min(1.0),
        }
    }

    /// `A₁ = diag(a, b)`, `A₂ = diag(√(1-a²), √(1-b²))`.
    pub fn diagonal(a: f64, b: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&a) || !(0.0..=1.0).contains(&b) {
            return Err(Error::domain(format!(
                "diagonal POVM parameters must lie in [0, 1], got ({a}, {b})"
            )));
        }
        Ok(PovmPair {
            a1: LocalOperator::diag_real(a, b),
            a2: LocalOperator::diag_real((1.0 - a * a).sqrt(), (1.0 - b * b).sqrt()),
            a: a.max(b),
            b: a.min(b),
        })
    }

    /// Frobenius distance of `A₁†A₁ + A₂†A₂` from the identity.
    pub fn completeness_defect(&self) -> f64 {
        let sum = self.a1.adjoint() * self.a1 + self.a2.adjoint() * self.a2;
        sum.distance(&LocalOperator::identity())
    }

    /// `det D₁ = ab`.
    pub fn det_d1(&self) -> f64 {
        self.a * self.b
    }

    /// `det D₂ = √((1-a²)(1-b²))`.
    pub fn det_d2(&self) -> f64 {
        ((1.0 - self.a * self.a) * (1.0 - self.b * self.b))
            .max(0.0)
            .sqrt()
    }

    pub fn operator(&self, outcome: usize) -> &LocalOperator {
        if outcome == 1 {
            &self.a1
        } else {
            &self.a2
        }
    }
}

/// Completes a contraction `a1` to a POVM with a seeded random unitary `W`.
pub fn make_povm(a1: LocalOperator, seed: u64) -> Result<PovmPair> {
    make_povm_from(a1, &mut rng_from_seed(seed))
}

pub fn make_povm_from<R: Rng + ?Sized>(a1: LocalOperator, rng: &mut R) -> Result<PovmPair> {
    if !a1.is_contraction(1e-12) {
        return Err(Error::domain(format!(
            "A₁ must be a contraction, largest singular value is {}",
            a1.singular_values()[0]
        )));
    }
    let defect = LocalOperator::identity() - a1.adjoint() * a1;
    let w = random_operator_from(OperatorKind::Unitary, rng);
    Ok(PovmPair::new(a1, w * defect.psd_sqrt()))
}

/// Random POVM whose first operator is a seeded random contraction.
pub fn random_povm<R: Rng + ?Sized>(rng: &mut R) -> PovmPair {
    let a1 = random_operator_from(OperatorKind::Contraction, rng);
    make_povm_from(a1, rng).expect("random contractions are contractions")
}

#[derive(Debug, Clone, PartialEq)]
pub struct BranchOutcome {
    /// `I ⊗ ... ⊗ Aᵢ ⊗ ... ⊗ I |ψ⟩`.
    pub raw: StateVector,
    pub probability: f64,
    /// `raw / √p`, or `None` for a zero-probability branch.
    pub state: Option<StateVector>,
}

/// Applies both POVM operators to qubit `k` of a normalized state.
pub fn branch(
    psi: &StateVector,
    k: usize,
    povm: &PovmPair,
) -> Result<(BranchOutcome, BranchOutcome)> {
    if !psi.is_normalized(NORMALIZED_TOL) {
        return Err(Error::domain(format!(
            "POVM branches need a normalized state, norm is {}",
            psi.norm()
        )));
    }
    let outcome = |op: &LocalOperator| -> Result<BranchOutcome> {
        let raw = psi.apply_single(k, op)?;
        let probability = raw.norm_sqr();
        let state = if probability > ZERO_PROBABILITY {
            Some(raw.scaled((1.0 / probability.sqrt()).into()))
        } else {
            None
        };
        Ok(BranchOutcome {
            raw,
            probability,
            state,
        })
    };
    Ok((outcome(&povm.a1)?, outcome(&povm.a2)?))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MonotoneMeasure {
    Even,
    Odd,
    /// `τ^(i)`, one-based.
    Residual(usize),
    R,
}

impl MonotoneMeasure {
    /// The measure on a normalized state.
    pub fn value(self, psi: &StateVector) -> Result<f64> {
        Ok(match self {
            MonotoneMeasure::Even => tau_even(psi)?.value,
            MonotoneMeasure::Odd => tau_odd(psi)?.value,
            MonotoneMeasure::Residual(i) => tau_residual(psi, i)?.value,
            MonotoneMeasure::R => r_tangle(psi)?.value,
        })
    }
}

impl fmt::Display for MonotoneMeasure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonotoneMeasure::Even => f.write_str("even"),
            MonotoneMeasure::Odd => f.write_str("odd"),
            MonotoneMeasure::Residual(i) => write!(f, "residual:{i}"),
            MonotoneMeasure::R => f.write_str("r"),
        }
    }
}

impl FromStr for MonotoneMeasure {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "even" => Ok(MonotoneMeasure::Even),
            "odd" => Ok(MonotoneMeasure::Odd),
            "r" => Ok(MonotoneMeasure::R),
            _ => s
                .strip_prefix("residual:")
                .and_then(|i| i.parse().ok())
                .map(MonotoneMeasure::Residual)
                .ok_or_else(|| Error::domain(format!("unknown monotone measure `{s}`"))),
        }
    }
}

/// `⟨τ^η⟩ = p₁ τ^η(φ₁) + p₂ τ^η(φ₂)`, with zero-probability branches
/// contributing nothing.
pub fn monotone_average(
    psi: &StateVector,
    k: usize,
    povm: &PovmPair,
    eta: f64,
    measure: MonotoneMeasure,
) -> Result<f64> {
    if !(eta > 0.0 && eta <= 1.0) {
        return Err(Error::domain(format!("η must lie in (0, 1], got {eta}")));
    }
    // parity is checked before any branch work
    measure.value(psi)?;
    let (first, second) = branch(psi, k, povm)?;
    let mut total = 0.0;
    for outcome in [first, second] {
        if let Some(state) = &outcome.state {
            total += outcome.probability * measure.value(state)?.powf(eta);
        }
    }
    Ok(total)
}
