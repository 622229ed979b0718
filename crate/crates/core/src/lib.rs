//! Exact truncated q-series machinery for the genus-zero and genus-one
//! Gromov-Witten potentials of the elliptic orbifolds `P^1_{2,2,2,2}` and
//! `P^1_{3,3,3}`.
//!
//! Layers, bottom up:
//!
//! - [`exact`]: rationals and cyclotomic fields.
//! - [`series`]: truncated Laurent/Puiseux series over an exact field.
//! - [`modular`]: divisor sums, eta quotients, theta constants, lattice
//!   thetas, `E_4`, `j` and the Halphen system.
//! - [`frobenius`]: potentials, flat metrics, WDVV and Euler residuals.
//! - [`models`]: the `D_4` and `E_6` orbifolds and their identity suites.
//!
//! Every check returns an [`IdentityReport`] certifying equality up to an
//! explicit truncation order.

pub mod error;
pub mod exact;
pub mod frobenius;
pub mod models;
pub mod modular;
pub mod par;
pub mod series;

pub use error::{Error, Result};
pub use exact::{CyclotomicNumber, Field, Rational};
pub use frobenius::{FrobeniusPotential, IdentityReport};
pub use par::Execution;
pub use series::{PuiseuxSeries, QSeries};
