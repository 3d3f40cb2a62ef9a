//! Product-state expressions such as `ghz:4@1,4,5,6 x bell@2,3`.
//!
//! Factors are separated by a standalone `x`. Each factor is
//! `name[:size[:index]][@labels]` or `file:path[@labels]`, where labels are
//! one-based qubit positions. A factor without labels takes the next
//! consecutive block. Across all factors the labels must cover `1..=n` exactly.

use std::path::PathBuf;

use super::{qsv, NamedKind, QubitPermutation, StateVector};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub enum FactorSource {
    Named {
        kind: NamedKind,
        n: usize,
        index: Option<usize>,
    },
    File(PathBuf),
    State(StateVector),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Factor {
    pub source: FactorSource,
    /// One-based qubit labels, in the factor's own qubit order. Empty means
    /// "next consecutive block".
    pub labels: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct ProductExpression {
    pub factors: Vec<Factor>,
}

impl ProductExpression {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_state(mut self, state: StateVector, labels: &[usize]) -> Self {
        self.factors.push(Factor {
            source: FactorSource::State(state),
            labels: labels.to_vec(),
        });
        self
    }

    pub fn with_named(mut self, kind: NamedKind, n: usize, labels: &[usize]) -> Self {
        self.factors.push(Factor {
            source: FactorSource::Named {
                kind,
                n,
                index: None,
            },
            labels: labels.to_vec(),
        });
        self
    }

    /// Parses the textual form; errors report line 1 and the column of the
    /// offending token.
    pub fn parse(text: &str) -> Result<Self> {
        let mut factors = Vec::new();
        let mut expect_factor = true;
        for (col, token) in tokens(text) {
            if token == "x" || token == "X" {
                if expect_factor {
                    return Err(Error::parse(1, col, "expected a factor before `x`"));
                }
                expect_factor = true;
                continue;
            }
            if !expect_factor {
                return Err(Error::parse(1, col, "factors must be separated by `x`"));
            }
            factors.push(parse_factor(token, col)?);
            expect_factor = false;
        }
        if factors.is_empty() {
            return Err(Error::parse(1, 1, "empty product expression"));
        }
        if expect_factor {
            return Err(Error::parse(1, text.len() + 1, "expression ends with `x`"));
        }
        Ok(ProductExpression { factors })
    }

    /// Tensors the factors in listed order, then moves each factor's qubits
    /// to its labels.
    pub fn build(&self) -> Result<StateVector> {
        let mut state: Option<StateVector> = None;
        let mut images = Vec::new();
        for factor in &self.factors {
            let piece = match &factor.source {
                FactorSource::Named { kind, n, index } => StateVector::named(*kind, *n, *index)?,
                FactorSource::File(path) => qsv::read_file(path)?,
                FactorSource::State(s) => s.clone(),
            };
            if factor.labels.is_empty() {
                let start = images.len() + 1;
                images.extend(start..start + piece.n());
            } else if factor.labels.len() != piece.n() {
                return Err(Error::domain(format!(
                    "factor has {} qubits but {} labels",
                    piece.n(),
                    factor.labels.len()
                )));
            } else {
                images.extend_from_slice(&factor.labels);
            }
            state = Some(match state {
                None => piece,
                Some(acc) => acc.tensor(&piece)?,
            });
        }
        let state = state.ok_or_else(|| Error::domain("empty product expression"))?;
        let pi = QubitPermutation::from_images(&images).map_err(|_| {
            Error::domain(format!(
                "labels {images:?} do not partition 1..={}",
                state.n()
            ))
        })?;
        state.permute(&pi)
    }
}

/// Whitespace-separated tokens with their one-based columns.
fn tokens(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.split_whitespace()
        .map(move |t| (t.as_ptr() as usize - text.as_ptr() as usize + 1, t))
}

fn parse_number(text: &str, col: usize, what: &str) -> Result<usize> {
    text.parse()
        .map_err(|_| Error::parse(1, col, format!("`{text}` is not a valid {what}")))
}

fn parse_factor(token: &str, col: usize) -> Result<Factor> {
    let (head, labels) = match token.rfind('@') {
        Some(at) => {
            let label_col = col + at + 1;
            let mut labels = Vec::new();
            let mut offset = 0;
            for part in token[at + 1..].split(',') {
                labels.push(parse_number(part, label_col + offset, "qubit label")?);
                offset += part.len() + 1;
            }
            (&token[..at], labels)
        }
        None => (token, Vec::new()),
    };

    if let Some(path) = head.strip_prefix("file:") {
        if path.is_empty() {
            return Err(Error::parse(1, col + 5, "missing file path"));
        }
        return Ok(Factor {
            source: FactorSource::File(PathBuf::from(path)),
            labels,
        });
    }

    let mut parts = head.split(':');
    let name = parts.next().unwrap_or_default();
    let kind: NamedKind = name
        .parse()
        .map_err(|_| Error::parse(1, col, format!("unknown state `{name}`")))?;
    let mut offset = name.len() + 1;
    let size = match parts.next() {
        Some(s) => {
            let v = parse_number(s, col + offset, "qubit count")?;
            offset += s.len() + 1;
            Some(v)
        }
        None => None,
    };
    let index = match parts.next() {
        Some(s) => Some(parse_number(s, col + offset, "basis index")?),
        None => None,
    };
    if parts.next().is_some() {
        return Err(Error::parse(
            1,
            col,
            format!("too many `:` fields in `{head}`"),
        ));
    }
    let n = match (kind, size) {
        (_, Some(n)) => n,
        (NamedKind::Bell, None) => 2,
        (_, None) if !labels.is_empty() => labels.len(),
        (_, None) => {
            return Err(Error::parse(
                1,
                col,
                format!("`{name}` needs a size, e.g. `{name}:3`"),
            ));
        }
    };
    if kind == NamedKind::Basis && index.is_none() {
        return Err(Error::parse(
            1,
            col,
            "basis factors need an index: `basis:<n>:<index>`",
        ));
    }
    Ok(Factor {
        source: FactorSource::Named { kind, n, index },
        labels,
    })
}
