//! Exact coefficient fields: rationals and cyclotomic fields.

mod cyclotomic;
mod field;
mod rational;

pub use cyclotomic::{cyclotomic_polynomial, cyclotomic_root, euler_phi, CyclotomicNumber};
pub use field::Field;
pub use rational::{rat, Rational};
