//! Seeded generators for states and local operators.
//!
//! All sampling goes through ChaCha20 seeded from a `u64`; there is no global
//! generator. Suites derive one seed per trial with [`derive_seed`].

use std::f64::consts::FRAC_1_SQRT_2;
use std::str::FromStr;

use nalgebra::Matrix2;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use rand_distr::StandardNormal;

use super::{check_capacity, LocalOperator, StateVector, DEFAULT_MAX_QUBITS};
use crate::error::{Error, Result};

pub type SeededRng = ChaCha20Rng;

pub fn rng_from_seed(seed: u64) -> SeededRng {
    ChaCha20Rng::seed_from_u64(seed)
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Seed for trial `index` of stream `stream` under master seed `master`.
pub fn derive_seed(master: u64, stream: u64, index: u64) -> u64 {
    splitmix64(splitmix64(master ^ splitmix64(stream)).wrapping_add(index))
}

/// Standard complex Gaussian: real and imaginary parts `N(0, 1/2)`.
pub fn complex_gaussian<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    Complex64::new(re * FRAC_1_SQRT_2, im * FRAC_1_SQRT_2)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OperatorKind {
    /// Independent complex Gaussian entries.
    General,
    /// General, rescaled to determinant one.
    SpecialLinear,
    /// Haar-distributed unitary.
    Unitary,
    /// General, rescaled so the largest singular value is at most one.
    Contraction,
    /// Rank one, hence singular.
    RankOne,
}

impl FromStr for OperatorKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "general" => Ok(OperatorKind::General),
            "special_linear" | "sl" => Ok(OperatorKind::SpecialLinear),
            "unitary" => Ok(OperatorKind::Unitary),
            "contraction" => Ok(OperatorKind::Contraction),
            "rank_one" => Ok(OperatorKind::RankOne),
            other => Err(Error::domain(format!("unknown operator kind `{other}`"))),
        }
    }
}

/// Haar-random pure state: Gaussian amplitudes, then normalized.
pub fn random_state(n: usize, seed: u64) -> Result<StateVector> {
    random_state_from(n, &mut rng_from_seed(seed))
}

pub fn random_state_from<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<StateVector> {
    if n == 0 {
        return Err(Error::domain("a state needs at least one qubit"));
    }
    check_capacity(n, DEFAULT_MAX_QUBITS)?;
    let amps: Vec<Complex64> = (0..1usize << n).map(|_| complex_gaussian(rng)).collect();
    StateVector::new(amps)?.normalized()
}

pub fn random_operator(kind: OperatorKind, seed: u64) -> LocalOperator {
    random_operator_from(kind, &mut rng_from_seed(seed))
}

fn gaussian_matrix<R: Rng + ?Sized>(rng: &mut R) -> Matrix2<Complex64> {
    Matrix2::from_fn(|_, _| complex_gaussian(rng))
}

pub fn random_operator_from<R: Rng + ?Sized>(kind: OperatorKind, rng: &mut R) -> LocalOperator {
    match kind {
        OperatorKind::General => LocalOperator::from_matrix(gaussian_matrix(rng)),
        OperatorKind::SpecialLinear => loop {
            let m = LocalOperator::from_matrix(gaussian_matrix(rng));
            let det = m.det();
            if det.norm() > 1e-6 {
                break m.scale(det.sqrt().inv());
            }
        },
        OperatorKind::Unitary => {
            let qr = gaussian_matrix(rng).qr();
            let r = qr.r();
            // fix column phases so the distribution is Haar
            let phases =
                Matrix2::from_diagonal(&nalgebra::Vector2::new(phase(r[(0, 0)]), phase(r[(1, 1)])));
            LocalOperator::from_matrix(qr.q() * phases)
        }
        OperatorKind::Contraction => {
            let m = LocalOperator::from_matrix(gaussian_matrix(rng));
            let top = m.singular_values()[0];
            let shrink: f64 = 1.0 - rng.gen::<f64>(); // (0, 1]
            m.scale(Complex64::new(shrink / top, 0.0))
        }
        OperatorKind::RankOne => {
            let u = [complex_gaussian(rng), complex_gaussian(rng)];
            let v = [complex_gaussian(rng), complex_gaussian(rng)];
            LocalOperator::new([[u[0] * v[0], u[0] * v[1]], [u[1] * v[0], u[1] * v[1]]])
        }
    }
}

fn phase(z: Complex64) -> Complex64 {
    if z.norm() == 0.0 {
        Complex64::ONE
    } else {
        z / z.norm()
    }
}
