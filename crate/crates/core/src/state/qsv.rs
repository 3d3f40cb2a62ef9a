//! The `qsv` plain-text state format.
//!
//! ```text
//! qsv 1
//! n 2
//! 7.0710678118654757e-1 0.0000000000000000e0
//! 0.0000000000000000e0 0.0000000000000000e0
//! 0.0000000000000000e0 0.0000000000000000e0
//! 7.0710678118654757e-1 0.0000000000000000e0
//! ```
//!
//! One `re im` line per amplitude in index order. Writers emit 17 significant
//! digits, so reading back reproduces every amplitude bit for bit.

use std::fmt::Write as _;
use std::io::Write;
use std::path::Path;

use num_complex::Complex64;

use super::{StateVector, HARD_MAX_QUBITS};
use crate::error::{Error, Result};

pub const HEADER: &str = "qsv 1";

pub fn to_string(psi: &StateVector) -> String {
    let mut out = String::with_capacity(48 * psi.dim() + 16);
    let _ = writeln!(out, "{HEADER}\nn {}", psi.n());
    for a in psi.amps() {
        let _ = writeln!(out, "{:.16e} {:.16e}", a.re, a.im);
    }
    out
}

pub fn write<W: Write>(psi: &StateVector, mut w: W) -> Result<()> {
    w.write_all(to_string(psi).as_bytes())?;
    Ok(())
}

pub fn write_file(psi: &StateVector, path: impl AsRef<Path>) -> Result<()> {
    std::fs::write(path, to_string(psi))?;
    Ok(())
}

pub fn read_file(path: impl AsRef<Path>) -> Result<StateVector> {
    parse(&std::fs::read_to_string(path)?)
}

/// One-based column of `token` inside `line`.
fn column_of(line: &str, token: &str) -> usize {
    token.as_ptr() as usize - line.as_ptr() as usize + 1
}

fn parse_component(line: &str, token: &str, lineno: usize) -> Result<f64> {
    let value: f64 = token.parse().map_err(|_| {
        Error::parse(
            lineno,
            column_of(line, token),
            format!("`{token}` is not a decimal number"),
        )
    })?;
    if !value.is_finite() {
        return Err(Error::parse(
            lineno,
            column_of(line, token),
            "amplitudes must be finite",
        ));
    }
    Ok(value)
}

pub fn parse(text: &str) -> Result<StateVector> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));

    match lines.next() {
        Some((_, l)) if l.trim_end() == HEADER => {}
        Some((_, l)) => {
            return Err(Error::parse(
                1,
                1,
                format!("expected `{HEADER}`, found `{l}`"),
            ));
        }
        None => return Err(Error::parse(1, 1, "empty input")),
    }

    let (lineno, line) = lines
        .next()
        .ok_or_else(|| Error::parse(2, 1, "missing `n <int>` line"))?;
    let mut fields = line.split_whitespace();
    if fields.next() != Some("n") {
        return Err(Error::parse(lineno, 1, "expected `n <int>`"));
    }
    let count_tok = fields
        .next()
        .ok_or_else(|| Error::parse(lineno, line.len() + 1, "missing qubit count"))?;
    let n: usize = count_tok.parse().map_err(|_| {
        Error::parse(
            lineno,
            column_of(line, count_tok),
            format!("`{count_tok}` is not a qubit count"),
        )
    })?;
    if n == 0 || n > HARD_MAX_QUBITS {
        return Err(Error::parse(
            lineno,
            column_of(line, count_tok),
            format!("qubit count must be in 1..={HARD_MAX_QUBITS}"),
        ));
    }
    if let Some(extra) = fields.next() {
        return Err(Error::parse(
            lineno,
            column_of(line, extra),
            "unexpected token",
        ));
    }

    let dim = 1usize << n;
    let mut amps = Vec::with_capacity(dim);
    let mut last_line = lineno;
    for (lineno, line) in lines {
        last_line = lineno;
        let mut fields = line.split_whitespace();
        let Some(re_tok) = fields.next() else {
            // trailing blank lines are tolerated, interior ones are not
            if amps.len() == dim {
                continue;
            }
            return Err(Error::parse(lineno, 1, "blank line inside amplitude block"));
        };
        if amps.len() == dim {
            return Err(Error::parse(
                lineno,
                column_of(line, re_tok),
                format!("more than 2^{n} = {dim} amplitude lines"),
            ));
        }
        let im_tok = fields.next().ok_or_else(|| {
            Error::parse(lineno, line.len() + 1, "expected `re im`, found one number")
        })?;
        if let Some(extra) = fields.next() {
            return Err(Error::parse(
                lineno,
                column_of(line, extra),
                "unexpected token",
            ));
        }
        amps.push(Complex64::new(
            parse_component(line, re_tok, lineno)?,
            parse_component(line, im_tok, lineno)?,
        ));
    }
    if amps.len() != dim {
        return Err(Error::parse(
            last_line + 1,
            1,
            format!("expected {dim} amplitude lines, found {}", amps.len()),
        ));
    }
    StateVector::new(amps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::state::random::random_state;
    use proptest::prelude::*;

    #[test]
    fn bell_text() {
        let text = to_string(&StateVector::bell());
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some("qsv 1"));
        assert_eq!(lines.next(), Some("n 2"));
        assert_eq!(
            lines.next(),
            Some("7.0710678118654757e-1 0.0000000000000000e0")
        );
        assert_eq!(text.lines().count(), 6);
    }

    #[test]
    fn accepts_decimal_and_scientific() {
        let s = parse("qsv 1\nn 1\n0.6 0\n-8E-1 1e-3\n\n").unwrap();
        assert_eq!(s.amps()[0], Complex64::new(0.6, 0.0));
        assert_eq!(s.amps()[1], Complex64::new(-0.8, 0.001));
    }

    fn parse_err(text: &str) -> (usize, usize) {
        match parse(text) {
            Err(Error::Parse { line, column, .. }) => (line, column),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn errors_point_at_line_and_column() {
        assert_eq!(parse_err(""), (1, 1));
        assert_eq!(parse_err("qsv 2\n"), (1, 1));
        assert_eq!(parse_err("qsv 1\nm 1\n"), (2, 1));
        assert_eq!(parse_err("qsv 1\nn x\n"), (2, 3));
        assert_eq!(parse_err("qsv 1\nn 1\n1 0\n0 abc\n"), (4, 3));
        assert_eq!(parse_err("qsv 1\nn 1\n1 0\n"), (4, 1));
        assert_eq!(parse_err("qsv 1\nn 1\n1 0\n0 0\n0 0\n"), (5, 1));
        assert_eq!(parse_err("qsv 1\nn 1\n1\n0 0\n"), (3, 2));
        assert_eq!(parse_err("qsv 1\nn 1\n1 0 0\n0 0\n"), (3, 5));
        assert_eq!(parse_err("qsv 1\nn 1\n1 inf\n0 0\n"), (3, 3));
    }

    #[test]
    fn file_round_trip() {
        let dir = std::env::temp_dir().join(format!("ntangle-qsv-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("state.qsv");
        let psi = random_state(5, 3).unwrap();
        write_file(&psi, &path).unwrap();
        assert_eq!(read_file(&path).unwrap(), psi);
        std::fs::remove_dir_all(dir).unwrap();
    }

    proptest! {
        #[test]
        fn round_trip_is_exact(n in 1usize..=6, seed in any::<u64>(), scale in -1e6f64..1e6) {
            let psi = random_state(n, seed).unwrap().scaled(Complex64::new(scale, 0.0));
            prop_assert_eq!(parse(&to_string(&psi)).unwrap(), psi);
        }
    }
}
