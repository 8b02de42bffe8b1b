//! The computable model of ℂ((t)): exact coefficients and Laurent series.

pub mod coeff;
pub mod gauss;
pub mod laurent;
pub mod poly;
pub mod upoly;

pub use coeff::Coefficient;
pub use gauss::GaussRat;
pub use laurent::LaurentSeries;
pub use poly::{MPoly, Monomial};
