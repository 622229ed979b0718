use std::fmt;

use crate::error::Result;
use crate::exact::Rational;

/// An exact coefficient field for truncated series.
///
/// Methods take references and return fresh values so the series code can
/// stay generic without reference-operator bounds.
pub trait Field: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn negated(&self) -> Self;
    fn inverse(&self) -> Result<Self>;
    fn from_rational(r: &Rational) -> Self;
    /// An exact `n`-th root, if one exists in the field and the
    /// implementation can find it.
    fn nth_root(&self, n: u32) -> Option<Self>;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    /// Exact textual form used in machine-readable reports.
    fn exact_string(&self) -> String {
        self.to_string()
    }

    fn from_integer(n: i64) -> Self {
        Self::from_rational(&Rational::from_integer(n))
    }

    fn scale_rational(&self, r: &Rational) -> Self {
        self.times(&Self::from_rational(r))
    }

    fn add_assign_ref(&mut self, rhs: &Self) {
        *self = self.plus(rhs);
    }

    /// `self += a * b`
    fn add_product(&mut self, a: &Self, b: &Self) {
        if !a.is_zero() && !b.is_zero() {
            *self = self.plus(&a.times(b));
        }
    }
}

impl Field for Rational {
    fn zero() -> Self {
        Rational::zero()
    }

    fn one() -> Self {
        Rational::one()
    }

    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }

    fn is_one(&self) -> bool {
        Rational::is_one(self)
    }

    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }

    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn negated(&self) -> Self {
        -self
    }

    fn inverse(&self) -> Result<Self> {
        self.recip()
    }

    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }

    fn nth_root(&self, n: u32) -> Option<Self> {
        Rational::nth_root(self, n)
    }

    fn scale_rational(&self, r: &Rational) -> Self {
        self * r
    }

    fn exact_string(&self) -> String {
        self.to_fraction_string()
    }

    fn add_assign_ref(&mut self, rhs: &Self) {
        *self += rhs;
    }
}
