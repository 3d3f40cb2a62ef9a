//! Coffman–Kundu–Wootters 3-tangle, written from the hyperdeterminant form
//! in their construction. This is an external reference kept only to
//! cross-check the odd measure at three qubits; it shares no code with it.

use num_complex::Complex64;

use super::{Measure, MeasureReport};
use crate::error::{Error, Result};
use crate::state::StateVector;

/// `τ_ABC = 4 |d₁ - 2 d₂ + 4 d₃|`.
pub fn three_tangle_oracle(psi: &StateVector) -> Result<MeasureReport> {
    if psi.n() != 3 {
        return Err(Error::domain(format!(
            "the 3-tangle oracle needs exactly three qubits, got n = {}",
            psi.n()
        )));
    }
    let amps = psi.amps();
    let a = |i: usize, j: usize, k: usize| -> Complex64 { amps[4 * i + 2 * j + k] };

    let d1 = a(0, 0, 0).powi(2) * a(1, 1, 1).powi(2)
        + a(0, 0, 1).powi(2) * a(1, 1, 0).powi(2)
        + a(0, 1, 0).powi(2) * a(1, 0, 1).powi(2)
        + a(1, 0, 0).powi(2) * a(0, 1, 1).powi(2);

    let d2 = a(0, 0, 0) * a(1, 1, 1) * a(0, 1, 1) * a(1, 0, 0)
        + a(0, 0, 0) * a(1, 1, 1) * a(1, 0, 1) * a(0, 1, 0)
        + a(0, 0, 0) * a(1, 1, 1) * a(1, 1, 0) * a(0, 0, 1)
        + a(0, 1, 1) * a(1, 0, 0) * a(1, 0, 1) * a(0, 1, 0)
        + a(0, 1, 1) * a(1, 0, 0) * a(1, 1, 0) * a(0, 0, 1)
        + a(1, 0, 1) * a(0, 1, 0) * a(1, 1, 0) * a(0, 0, 1);

    let d3 = a(0, 0, 0) * a(1, 1, 0) * a(1, 0, 1) * a(0, 1, 1)
        + a(1, 1, 1) * a(0, 0, 1) * a(0, 1, 0) * a(1, 0, 0);

    let value = 4.0 * (d1 - 2.0 * d2 + 4.0 * d3).norm();
    Ok(MeasureReport {
        measure: Measure::ThreeTangle,
        n: 3,
        value,
        residuals: None,
        input_norm: psi.norm(),
        source: None,
        tolerance: None,
    })
}
