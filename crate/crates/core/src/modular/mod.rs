//! Modular objects as exact `q`-expansions.

mod eta;
mod halphen;
mod jfun;
mod lattice;
mod sigma;
mod theta;

pub(crate) use eta::ceil_rational;
pub use eta::{eta_expand, eta_laurent, euler_product, EtaQuotient};
pub use halphen::{
    f_at_power, f_negated_argument, halphen_suite, halphen_verify, theta_eta_forms, theta_xs,
};
pub use jfun::{big_j_series, delta_series, e4_series, j_series};
pub use lattice::{lattice_theta, lattice_theta_with, Coset, LatticeSpec};
pub use sigma::{f_series, sigma, sigma_k};
pub use theta::{theta_jacobi, theta_log_derivative, theta_unit, Theta};
