//! Random exact series for property checks.
#![allow(dead_code)]

use orbifold_gw::exact::Rational;
use orbifold_gw::QSeries;
use proptest::prelude::*;

pub fn small_rational() -> impl Strategy<Value = Rational> {
    (-30i64..=30, 1i64..=7).prop_map(|(n, d)| Rational::new(n, d))
}

pub fn nonzero_rational() -> impl Strategy<Value = Rational> {
    (1i64..=30, 1i64..=7, any::<bool>())
        .prop_map(|(n, d, neg)| Rational::new(if neg { -n } else { n }, d))
}

/// A Laurent series with valuation in `-2..=2` known to `O(q^order)`.
pub fn series(order: i64) -> impl Strategy<Value = QSeries> {
    (
        -2i64..=2,
        prop::collection::vec(small_rational(), 0..=(order + 2) as usize),
    )
        .prop_map(move |(start, c)| QSeries::new(start, c, order))
}

/// A power series with constant term 1.
pub fn unit_series(order: i64) -> impl Strategy<Value = QSeries> {
    prop::collection::vec(small_rational(), (order - 1) as usize).prop_map(move |mut c| {
        c.insert(0, Rational::one());
        QSeries::new(0, c, order)
    })
}

/// `c q^v (1 + ...)` with nonzero `c`.
pub fn invertible_series(order: i64) -> impl Strategy<Value = QSeries> {
    (-2i64..=2, nonzero_rational(), unit_series(order))
        .prop_map(move |(v, c, u)| u.scale(&c).shift(v))
}

/// Exact coefficientwise equality up to the smaller precision, plus a
/// precision floor so the comparison is not vacuous.
pub fn same(a: &QSeries, b: &QSeries, min_prec: i64) -> Result<(), TestCaseError> {
    prop_assert!(
        a.prec().min(b.prec()) >= min_prec,
        "precision {} / {} below {min_prec}",
        a.prec(),
        b.prec()
    );
    prop_assert_eq!(a.first_difference(b), None, "{} vs {}", a, b);
    Ok(())
}
