//! Wong–Christensen even n-tangle: a quartic contraction of four amplitude
//! copies with antisymmetric symbols. Slots `1..n-1` pair `(α, β)` and
//! `(γ, δ)`; slot `n` pairs `(α, γ)` and `(β, δ)`. Used as a cross-reference
//! oracle only; no relation to the quadratic measure is asserted.

use super::{Measure, MeasureReport};
use crate::error::{Error, Parity, Result};
use crate::state::StateVector;

/// Largest `n` evaluated unless the caller raises the cap. The sum has
/// `2^(4n)` terms.
pub const DEFAULT_ORACLE_CAP: usize = 4;

/// The 2x2 Levi-Civita symbol: `ε₀₁ = 1`, `ε₁₀ = -1`, zero on the diagonal.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AntisymmetricSymbol;

impl AntisymmetricSymbol {
    pub const TABLE: [[i8; 2]; 2] = [[0, 1], [-1, 0]];

    #[inline]
    pub fn get(a: usize, b: usize) -> i8 {
        Self::TABLE[a][b]
    }
}

pub fn wong_tangle(psi: &StateVector) -> Result<MeasureReport> {
    wong_tangle_capped(psi, DEFAULT_ORACLE_CAP)
}

pub fn wong_tangle_capped(psi: &StateVector, cap: usize) -> Result<MeasureReport> {
    let n = psi.n();
    if n % 2 == 1 {
        return Err(Error::Parity {
            op: "Wong–Christensen tangle",
            n,
            expected: Parity::Even,
        });
    }
    if n > cap {
        return Err(Error::domain(format!(
            "Wong–Christensen tangle at n = {n} exceeds the oracle cap {cap}"
        )));
    }
    let a = psi.amps();
    let dim = a.len();
    // qubit q (one-based) is bit n - q
    let bit = |index: usize, q: usize| (index >> (n - q)) & 1;
    let eps = AntisymmetricSymbol::get;

    let mut sum = num_complex::Complex64::ZERO;
    for alpha in 0..dim {
        for beta in 0..dim {
            let mut left: i32 = 1;
            for q in 1..n {
                left *= eps(bit(alpha, q), bit(beta, q)) as i32;
                if left == 0 {
                    break;
                }
            }
            if left == 0 {
                continue;
            }
            let ab = a[alpha] * a[beta];
            for gamma in 0..dim {
                let with_ag = left * eps(bit(alpha, n), bit(gamma, n)) as i32;
                if with_ag == 0 {
                    continue;
                }
                for delta in 0..dim {
                    let mut coef = with_ag * eps(bit(beta, n), bit(delta, n)) as i32;
                    for q in 1..n {
                        if coef == 0 {
                            break;
                        }
                        coef *= eps(bit(gamma, q), bit(delta, q)) as i32;
                    }
                    if coef != 0 {
                        sum += ab * a[gamma] * a[delta] * coef as f64;
                    }
                }
            }
        }
    }
    Ok(MeasureReport {
        measure: Measure::Wong,
        n,
        value: 2.0 * sum.norm(),
        residuals: None,
        input_norm: psi.norm(),
        source: None,
        tolerance: None,
    })
}
