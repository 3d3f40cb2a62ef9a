//! Pure n-qubit states as dense amplitude vectors.
//!
//! Amplitude `a_i` multiplies the basis state `|i_{n-1} ... i_0⟩`, and qubit 1
//! is the most significant bit. With this ordering the amplitudes of a product
//! `φ ⊗ ω` are `a_{k·2^m + i} = b_k c_i`, so "first `l` qubits" always means the
//! high bits of the index.

mod operator;
mod permutation;
pub mod product;
pub mod qsv;
pub mod random;

use std::str::FromStr;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::par::{self, Strategy};

pub use operator::LocalOperator;
pub use permutation::QubitPermutation;
pub use product::{Factor, FactorSource, ProductExpression};

/// Default ceiling on the qubit count of constructed states.
pub const DEFAULT_MAX_QUBITS: usize = 26;

/// Hard ceiling: nothing larger is representable.
pub const HARD_MAX_QUBITS: usize = 30;

#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    n: usize,
    amps: Vec<Complex64>,
}

/// The named families available to `named_state` and product expressions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NamedKind {
    Ghz,
    W,
    Bell,
    Basis,
}

impl FromStr for NamedKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "ghz" => Ok(NamedKind::Ghz),
            "w" => Ok(NamedKind::W),
            "bell" => Ok(NamedKind::Bell),
            "basis" => Ok(NamedKind::Basis),
            other => Err(Error::domain(format!("unknown state kind `{other}`"))),
        }
    }
}

fn check_capacity(n: usize, max: usize) -> Result<()> {
    if n > max.min(HARD_MAX_QUBITS) {
        return Err(Error::Capacity {
            n,
            max: max.min(HARD_MAX_QUBITS),
        });
    }
    Ok(())
}

impl StateVector {
    /// Wraps raw amplitudes; the length must be `2^n` with `n >= 1`.
    pub fn new(amps: Vec<Complex64>) -> Result<Self> {
        let len = amps.len();
        if len < 2 || !len.is_power_of_two() {
            return Err(Error::domain(format!(
                "amplitude count {len} is not 2^n with n >= 1"
            )));
        }
        let n = len.trailing_zeros() as usize;
        check_capacity(n, HARD_MAX_QUBITS)?;
        Ok(StateVector { n, amps })
    }

    pub fn from_real(amps: &[f64]) -> Result<Self> {
        Self::new(amps.iter().map(|&re| Complex64::new(re, 0.0)).collect())
    }

    pub fn zeros(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::domain("a state needs at least one qubit"));
        }
        check_capacity(n, DEFAULT_MAX_QUBITS)?;
        Ok(StateVector {
            n,
            amps: vec![Complex64::ZERO; 1 << n],
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    pub fn amps(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn into_amps(self) -> Vec<Complex64> {
        self.amps
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    pub fn is_normalized(&self, tol: f64) -> bool {
        (self.norm_sqr() - 1.0).abs() <= tol
    }

    /// The state divided by its norm; fails on the zero vector.
    pub fn normalized(&self) -> Result<Self> {
        let norm = self.norm();
        if norm == 0.0 || !norm.is_finite() {
            return Err(Error::domain("cannot normalize a zero or non-finite state"));
        }
        Ok(self.scaled(Complex64::new(1.0 / norm, 0.0)))
    }

    pub fn scaled(&self, c: Complex64) -> Self {
        StateVector {
            n: self.n,
            amps: self.amps.iter().map(|a| a * c).collect(),
        }
    }

    /// Largest per-amplitude absolute difference.
    pub fn max_abs_diff(&self, other: &StateVector) -> f64 {
        assert_eq!(self.n, other.n, "comparing states of different size");
        self.amps
            .iter()
            .zip(&other.amps)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn approx_eq(&self, other: &StateVector, tol: f64) -> bool {
        self.n == other.n && self.max_abs_diff(other) <= tol
    }

    /// `(|0...0⟩ + |1...1⟩)/√2`.
    pub fn ghz(n: usize) -> Result<Self> {
        let mut s = Self::zeros(n)?;
        let h = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
        let last = s.dim() - 1;
        s.amps[0] = h;
        s.amps[last] = h;
        Ok(s)
    }

    /// Equal superposition of the `n` weight-one basis states.
    pub fn w(n: usize) -> Result<Self> {
        let mut s = Self::zeros(n)?;
        let amp = Complex64::new(1.0 / (n as f64).sqrt(), 0.0);
        for q in 0..n {
            s.amps[1 << q] = amp;
        }
        Ok(s)
    }

    pub fn bell() -> Self {
        Self::ghz(2).expect("two qubits are within capacity")
    }

    pub fn basis(n: usize, index: usize) -> Result<Self> {
        let mut s = Self::zeros(n)?;
        if index >= s.dim() {
            return Err(Error::domain(format!(
                "basis index {index} out of range for {n} qubits"
            )));
        }
        s.amps[index] = Complex64::ONE;
        Ok(s)
    }

    /// Named-state constructor; `extra` is the basis index for `Basis`.
    pub fn named(kind: NamedKind, n: usize, extra: Option<usize>) -> Result<Self> {
        match kind {
            NamedKind::Ghz => Self::ghz(n),
            NamedKind::W => Self::w(n),
            NamedKind::Bell if n == 2 => Ok(Self::bell()),
            NamedKind::Bell => Err(Error::domain(format!(
                "bell is a two-qubit state, requested {n} qubits"
            ))),
            NamedKind::Basis => Self::basis(
                n,
                extra.ok_or_else(|| Error::domain("basis state needs an index"))?,
            ),
        }
    }

    /// `self ⊗ other` with `self` on the leading qubits.
    pub fn tensor(&self, other: &StateVector) -> Result<Self> {
        self.tensor_with_capacity(other, DEFAULT_MAX_QUBITS)
    }

    pub fn tensor_with_capacity(&self, other: &StateVector, max_qubits: usize) -> Result<Self> {
        let n = self.n + other.n;
        check_capacity(n, max_qubits)?;
        let mut amps = Vec::with_capacity(1 << n);
        for b in &self.amps {
            amps.extend(other.amps.iter().map(|c| b * c));
        }
        Ok(StateVector { n, amps })
    }

    /// Relabels qubits: qubit `q` of `self` becomes qubit `pi.image(q)`.
    pub fn permute(&self, pi: &QubitPermutation) -> Result<Self> {
        self.permute_with(pi, Strategy::default())
    }

    pub fn permute_with(&self, pi: &QubitPermutation, strategy: Strategy) -> Result<Self> {
        if pi.n() != self.n {
            return Err(Error::domain(format!(
                "permutation on {} qubits applied to a {}-qubit state",
                pi.n(),
                self.n
            )));
        }
        if pi.is_identity() {
            return Ok(self.clone());
        }
        let n = self.n;
        // Output bit position of each source qubit, both as shift amounts.
        let moves: Vec<(u32, u32)> = pi
            .images_zero_based()
            .iter()
            .enumerate()
            .map(|(q, &t)| ((n - 1 - q) as u32, (n - 1 - t) as u32))
            .collect();
        let mut amps = vec![Complex64::ZERO; self.dim()];
        par::fill_indexed(&mut amps, strategy, |j| {
            let mut src = 0usize;
            for &(from, to) in &moves {
                src |= ((j >> to) & 1) << from;
            }
            self.amps[src]
        });
        Ok(StateVector { n, amps })
    }

    /// `m` acting on qubit `k` (one-based), identity elsewhere.
    pub fn apply_single(&self, k: usize, m: &LocalOperator) -> Result<Self> {
        self.apply_single_with(k, m, Strategy::default())
    }

    pub fn apply_single_with(
        &self,
        k: usize,
        m: &LocalOperator,
        strategy: Strategy,
    ) -> Result<Self> {
        if k == 0 || k > self.n {
            return Err(Error::domain(format!(
                "qubit label {k} out of range 1..={}",
                self.n
            )));
        }
        let mask = 1usize << (self.n - k);
        let rows = [
            [m.entry(0, 0), m.entry(0, 1)],
            [m.entry(1, 0), m.entry(1, 1)],
        ];
        let mut amps = vec![Complex64::ZERO; self.dim()];
        par::fill_indexed(&mut amps, strategy, |i| {
            let row = &rows[(i & mask != 0) as usize];
            row[0] * self.amps[i & !mask] + row[1] * self.amps[i | mask]
        });
        Ok(StateVector { n: self.n, amps })
    }

    /// `(ops[0] ⊗ ... ⊗ ops[n-1]) |self⟩`.
    pub fn apply_local(&self, ops: &[LocalOperator]) -> Result<Self> {
        if ops.len() != self.n {
            return Err(Error::domain(format!(
                "{} local operators supplied for {} qubits",
                ops.len(),
                self.n
            )));
        }
        let identity = LocalOperator::identity();
        let mut out = self.clone();
        for (slot, op) in ops.iter().enumerate() {
            if *op != identity {
                out = out.apply_single(slot + 1, op)?;
            }
        }
        Ok(out)
    }

    /// Builds the state a product expression describes.
    pub fn build_product(expr: &ProductExpression) -> Result<Self> {
        expr.build()
    }
}
