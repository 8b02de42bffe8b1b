//! Exact symbolic computation in ℂ((t)) and its type-space flows.

pub mod abflows;
pub mod error;
pub mod hahn;
pub mod onetypes;
pub mod oracle;
pub mod series;
pub mod sl2flow;
pub mod valfield;

pub use error::{Error, Result};
pub use hahn::{HahnElement, Value};
pub use series::{Coefficient, LaurentSeries};

/// Precision and resource bounds threaded through all computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Config {
    /// Number of coefficients compared when exact comparison is unavailable.
    pub precision: usize,
    /// Number of infinite levels `s1..sL` available for realizations.
    pub levels: usize,
    /// Bound on leading-term searches in lazily defined series.
    pub horizon: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config { precision: 32, levels: 8, horizon: series::laurent::DEFAULT_HORIZON }
    }
}
