//! Truncated Laurent and Puiseux series with the operators used throughout:
//! products, inverses, roots, `q d/dq`, substitutions `q -> q^m` and
//! `q -> c q`, logarithms and exponentials.

mod json;
mod puiseux;
mod qseries;

pub use puiseux::PuiseuxSeries;
pub use qseries::{MulConfig, QSeries, KARATSUBA_THRESHOLD};
