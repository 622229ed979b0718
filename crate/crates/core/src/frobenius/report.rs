use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::exact::Field;
use crate::series::QSeries;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// Where an identity first failed: the multi-index of the offending
/// component (coordinates, quadruple or monomial exponents; empty for a
/// scalar identity), the `q`-exponent and the residual coefficient there.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub indices: Vec<i64>,
    pub exponent: i64,
    pub residual: String,
}

/// Outcome of one exact identity check, certified up to `O(q^order)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub name: String,
    pub order: i64,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub failure: Option<Failure>,
}

impl IdentityReport {
    pub fn pass(name: impl Into<String>, order: i64) -> Self {
        Self {
            name: name.into(),
            order,
            status: Status::Pass,
            failure: None,
        }
    }

    pub fn fail(name: impl Into<String>, order: i64, failure: Failure) -> Self {
        Self {
            name: name.into(),
            order,
            status: Status::Fail,
            failure: Some(failure),
        }
    }

    pub fn from_failure(name: impl Into<String>, order: i64, failure: Option<Failure>) -> Self {
        match failure {
            Some(f) => Self::fail(name, order, f),
            None => Self::pass(name, order),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// Checks `lhs == rhs` coefficientwise below `q^order`. If either side is
    /// known to less than `order`, the check fails at the achieved precision.
    pub fn compare<F: Field>(
        name: impl Into<String>,
        lhs: &QSeries<F>,
        rhs: &QSeries<F>,
        order: i64,
    ) -> Self {
        Self::compare_indexed(name, Vec::new(), lhs, rhs, order)
    }

    pub fn compare_indexed<F: Field>(
        name: impl Into<String>,
        indices: Vec<i64>,
        lhs: &QSeries<F>,
        rhs: &QSeries<F>,
        order: i64,
    ) -> Self {
        let (l, r) = (lhs.truncate(order), rhs.truncate(order));
        if let Some((exponent, d)) = l.first_difference(&r) {
            return Self::fail(
                name,
                order,
                Failure {
                    indices,
                    exponent,
                    residual: d.exact_string(),
                },
            );
        }
        let achieved = l.prec().min(r.prec());
        if achieved < order {
            return Self::fail(
                name,
                order,
                Failure {
                    indices,
                    exponent: achieved,
                    residual: format!("O(q^{achieved})"),
                },
            );
        }
        Self::pass(name, order)
    }

    /// Checks that `residual` vanishes below `q^order`.
    pub fn vanishes<F: Field>(name: impl Into<String>, residual: &QSeries<F>, order: i64) -> Self {
        Self::compare(name, residual, &QSeries::zero(order), order)
    }

    /// A single report that passes iff every part passes; the failure is the
    /// first failing part's, with its name prefixed to the residual.
    pub fn all_of(name: impl Into<String>, parts: &[IdentityReport]) -> Self {
        let order = parts.iter().map(|r| r.order).min().unwrap_or(0);
        match parts.iter().find(|r| !r.passed()) {
            None => Self::pass(name, order),
            Some(bad) => {
                let mut f = bad
                    .failure
                    .clone()
                    .expect("failing report carries a failure");
                f.residual = format!("{}: {}", bad.name, f.residual);
                Self::fail(name, order, f)
            }
        }
    }
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.failure {
            None => write!(f, "PASS  {} (exact to O(q^{}))", self.name, self.order),
            Some(fl) => write!(
                f,
                "FAIL  {} (order {}): first residual {} at q^{} indices {:?}",
                self.name, self.order, fl.residual, fl.exponent, fl.indices
            ),
        }
    }
}

/// Evaluates `build` at increasing working orders until both sides are
/// known to at least `order`, then compares them.
pub fn compare_at_order<F, B>(
    name: &str,
    order: i64,
    start: i64,
    build: B,
) -> Result<IdentityReport>
where
    F: Field,
    B: Fn(i64) -> Result<(QSeries<F>, QSeries<F>)>,
{
    let mut work = start.max(order);
    for _ in 0..16 {
        let (lhs, rhs) = build(work)?;
        let achieved = lhs.prec().min(rhs.prec());
        if achieved >= order {
            return Ok(IdentityReport::compare(name, &lhs, &rhs, order));
        }
        work += (order - achieved).max(1);
    }
    let (lhs, rhs) = build(work)?;
    Ok(IdentityReport::compare(name, &lhs, &rhs, order))
}
