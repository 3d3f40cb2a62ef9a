//! Wall-clock comparison of the quadratic even measure against the quartic
//! Wong–Christensen oracle, alongside their multiplication counts.

use std::fmt::{self, Write as _};
use std::io;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::measures::{tau_even, wong_tangle_capped, DEFAULT_ORACLE_CAP};
use crate::state::random::random_state;
use crate::state::DEFAULT_MAX_QUBITS;

pub const CSV_HEADER: &str = "n,measure,median_ns,min_ns,op_count";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BenchMeasure {
    Quadratic,
    Quartic,
}

impl BenchMeasure {
    /// Complex multiplications per evaluation: `2^(n-1)` for the quadratic
    /// measure, `3·2^(4n)` for the quartic contraction.
    pub fn op_count(self, n: usize) -> u64 {
        match self {
            BenchMeasure::Quadratic => 1u64 << (n - 1),
            BenchMeasure::Quartic => 3u64 << (4 * n),
        }
    }
}

impl fmt::Display for BenchMeasure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BenchMeasure::Quadratic => f.write_str("quadratic"),
            BenchMeasure::Quartic => f.write_str("quartic"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BenchRecord {
    pub n: usize,
    pub measure: BenchMeasure,
    pub median_ns: u64,
    pub min_ns: u64,
    pub op_count: u64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchConfig {
    pub n_min: usize,
    pub n_max: usize,
    pub reps: usize,
    pub oracle_cap: usize,
    pub seed: u64,
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig {
            n_min: 2,
            n_max: 20,
            reps: 5,
            oracle_cap: DEFAULT_ORACLE_CAP,
            seed: 0,
        }
    }
}

/// Times both measures on one random state per even `n` in range. Quartic rows
/// appear only up to the oracle cap.
pub fn run_bench(config: &BenchConfig) -> Result<Vec<BenchRecord>> {
    if config.n_max > DEFAULT_MAX_QUBITS {
        return Err(Error::Capacity {
            n: config.n_max,
            max: DEFAULT_MAX_QUBITS,
        });
    }
    if config.n_min < 2 || config.n_min > config.n_max {
        return Err(Error::domain(format!(
            "bad qubit range {}..={}",
            config.n_min, config.n_max
        )));
    }
    if config.reps == 0 {
        return Err(Error::domain("repetitions must be at least 1"));
    }
    let mut records = Vec::new();
    for n in (config.n_min..=config.n_max).filter(|n| n % 2 == 0) {
        let psi = random_state(n, config.seed ^ n as u64)?;
        records.push(time(n, BenchMeasure::Quadratic, config.reps, || {
            tau_even(&psi).map(|r| r.value)
        })?);
        if n <= config.oracle_cap {
            records.push(time(n, BenchMeasure::Quartic, config.reps, || {
                wong_tangle_capped(&psi, config.oracle_cap).map(|r| r.value)
            })?);
        }
    }
    Ok(records)
}

fn time(
    n: usize,
    measure: BenchMeasure,
    reps: usize,
    mut f: impl FnMut() -> Result<f64>,
) -> Result<BenchRecord> {
    let mut samples = Vec::with_capacity(reps);
    for _ in 0..reps {
        let start = Instant::now();
        std::hint::black_box(f()?);
        samples.push(start.elapsed().as_nanos() as u64);
    }
    samples.sort_unstable();
    Ok(BenchRecord {
        n,
        measure,
        median_ns: samples[samples.len() / 2],
        min_ns: samples[0],
        op_count: measure.op_count(n),
    })
}

pub fn write_csv<W: io::Write>(records: &[BenchRecord], w: W) -> Result<()> {
    let mut writer = csv::Writer::from_writer(w);
    for r in records {
        writer.serialize(r)?;
    }
    writer.flush()?;
    Ok(())
}

pub fn read_csv<R: io::Read>(r: R) -> Result<Vec<BenchRecord>> {
    let mut reader = csv::Reader::from_reader(r);
    let header: Vec<&str> = reader.headers()?.iter().collect();
    if header.join(",") != CSV_HEADER {
        return Err(Error::parse(
            1,
            1,
            format!("expected header `{CSV_HEADER}`"),
        ));
    }
    reader
        .deserialize()
        .map(|row| row.map_err(Error::from))
        .collect()
}

pub fn to_text(records: &[BenchRecord]) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{:>3}  {:<9}  {:>14}  {:>14}  {:>20}",
        "n", "measure", "median_ns", "min_ns", "op_count"
    );
    for r in records {
        let _ = writeln!(
            out,
            "{:>3}  {:<9}  {:>14}  {:>14}  {:>20}",
            r.n, r.measure, r.median_ns, r.min_ns, r.op_count
        );
    }
    for r in records
        .iter()
        .filter(|r| r.measure == BenchMeasure::Quartic)
    {
        let ratio = r.op_count / BenchMeasure::Quadratic.op_count(r.n);
        let _ = writeln!(
            out,
            "op-count ratio quartic/quadratic at n={}: {ratio}",
            r.n
        );
    }
    out
}
