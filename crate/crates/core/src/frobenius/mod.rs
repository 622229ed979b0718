//! Frobenius potentials, WDVV and Euler checks, and identity reports.

mod euler;
mod poly;
mod potential;
mod report;
mod wdvv;

pub use euler::euler_residual;
pub use poly::{Exponents, SeriesPoly};
pub use potential::{determinant, invert, metric_from_potential, FrobeniusPotential, MetricMatrix};
pub use report::{compare_at_order, Failure, IdentityReport, Status};
pub use wdvv::{wdvv_residual, wdvv_residual_with, WdvvOptions, WdvvSystem};
