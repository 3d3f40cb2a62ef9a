//! Polynomial entanglement measures for pure n-qubit states.
//!
//! Amplitudes are indexed with qubit 1 as the most significant bit. The even
//! measure is `2|I*|`, the odd one is built from a quartic SL-invariant, and
//! the odd n-tangle `R` averages residuals over which qubit sits first.

pub mod bench;
pub mod bitops;
pub mod error;
pub mod locc;
pub mod measures;
pub mod par;
pub mod state;
pub mod verify;

pub use error::{Error, Parity, Result};
pub use measures::{evaluate, tau, tau_even, tau_odd, Measure, MeasureReport};
pub use par::Strategy;
pub use state::{LocalOperator, ProductExpression, QubitPermutation, StateVector};
