use thiserror::Error;

/// Qubit-count parity a measure is defined for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

impl std::fmt::Display for Parity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Parity::Even => f.write_str("even"),
            Parity::Odd => f.write_str("odd"),
        }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("index {index} is outside the domain of {what} (n = {bits})")]
    IndexOutOfRange {
        what: &'static str,
        index: u64,
        bits: u32,
    },

    #[error("{0}")]
    Domain(String),

    #[error("{op} is defined for {expected} n only, got n = {n}")]
    Parity {
        op: &'static str,
        n: usize,
        expected: Parity,
    },

    #[error("{n} qubits exceeds the configured maximum of {max}")]
    Capacity { n: usize, max: usize },

    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
