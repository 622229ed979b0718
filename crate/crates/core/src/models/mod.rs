//! The two elliptic orbifolds and their identity suites.

pub mod d4;
pub mod e6;

use crate::exact::Rational;
use crate::frobenius::IdentityReport;
use crate::series::QSeries;

/// A genus-one potential `linear * t + series(q)` and its checks.
#[derive(Debug, Clone)]
pub struct GenusOne {
    pub linear: Rational,
    pub series: QSeries,
    /// `q d/dq` of the whole potential.
    pub derivative: QSeries,
    pub reports: Vec<IdentityReport>,
}
