mod common;

use common::{invertible_series, nonzero_rational, same, series, small_rational, unit_series};
use num_bigint::BigInt;
use orbifold_gw::exact::{cyclotomic_root, CyclotomicNumber, Field, Rational};
use orbifold_gw::models::{d4, e6};
use orbifold_gw::modular::EtaQuotient;
use orbifold_gw::{PuiseuxSeries, QSeries};
use proptest::prelude::*;

const T: i64 = 20;
const ORDERS: [u64; 5] = [1, 3, 9, 24, 72];

fn cyclotomic(order: u64) -> impl Strategy<Value = CyclotomicNumber> {
    prop::collection::vec(small_rational(), 0..12)
        .prop_map(move |c| CyclotomicNumber::from_polynomial(order, &c))
}

fn cyclotomic_triple(
) -> impl Strategy<Value = (CyclotomicNumber, CyclotomicNumber, CyclotomicNumber)> {
    prop::sample::select(ORDERS.to_vec())
        .prop_flat_map(|n| (cyclotomic(n), cyclotomic(n), cyclotomic(n)))
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn cyclotomic_field_axioms((a, b, c) in cyclotomic_triple()) {
        prop_assert_eq!(a.plus(&b), b.plus(&a));
        prop_assert_eq!(a.times(&b), b.times(&a));
        prop_assert_eq!(a.times(&b).times(&c), a.times(&b.times(&c)));
        prop_assert_eq!(a.times(&b.plus(&c)), a.times(&b).plus(&a.times(&c)));
        prop_assert!(a.minus(&a).is_zero());
        if !a.is_zero() {
            prop_assert!(a.times(&a.inverse().unwrap()).is_one());
        }
    }

    #[test]
    fn cyclotomic_root_has_exact_order(n in prop::sample::select(ORDERS.to_vec()), k in -100i64..100) {
        let z = cyclotomic_root(n, k);
        prop_assert!(z.pow(n as i64).unwrap().is_one());
        prop_assert_eq!(z.times(&cyclotomic_root(n, -k)), CyclotomicNumber::one());
    }

    #[test]
    fn embedding_is_a_ring_map(a in cyclotomic(9), b in cyclotomic(9), m in prop::sample::select(vec![1u64, 2, 8])) {
        let target = 9 * m;
        let (ea, eb) = (a.embed(target).unwrap(), b.embed(target).unwrap());
        prop_assert_eq!(a.times(&b).embed(target).unwrap(), ea.times(&eb));
        prop_assert_eq!(a.plus(&b).embed(target).unwrap(), ea.plus(&eb));
        prop_assert_eq!(cyclotomic_root(9, 1).embed(target).unwrap(), cyclotomic_root(target, m as i64));
    }

    #[test]
    fn rational_arithmetic_is_exact(a in any::<i64>(), b in any::<i64>(), c in 1i64..i64::MAX, d in 1i64..i64::MAX) {
        let (x, y) = (Rational::new(a, c), Rational::new(b, d));
        let big = |n: i64| BigInt::from(n);
        let sum = &x + &y;
        prop_assert_eq!(sum.numer() * x.denom() * y.denom(), (x.numer() * y.denom() + y.numer() * x.denom()) * sum.denom());
        let prod = &x * &y;
        prop_assert_eq!(prod.numer() * big(c) * big(d), big(a) * big(b) * prod.denom());
        prop_assert_eq!(&(&x - &y) + &y, x.clone());
        if !y.is_zero() {
            prop_assert_eq!(&(&x / &y) * &y, x);
        }
    }

    #[test]
    fn rational_string_round_trip(n in any::<i64>(), d in 1i64..i64::MAX) {
        let x = Rational::new(n, d);
        prop_assert_eq!(x.to_fraction_string().parse::<Rational>().unwrap(), x.clone());
        prop_assert_eq!(x.to_string().parse::<Rational>().unwrap(), x);
    }

    #[test]
    fn truncation_commutes_with_products(a in unit_series(T), b in unit_series(T), k in 1i64..T) {
        let lhs = a.mul(&b).truncate(k);
        let rhs = a.truncate(k).mul(&b.truncate(k));
        same(&lhs, &rhs, k)?;
        prop_assert!(a.truncate(k).prec() <= a.prec());
        prop_assert_eq!(a.truncate(k).truncate(T), a.truncate(k));
    }

    #[test]
    fn series_ring_axioms(a in series(T), b in series(T), c in series(T)) {
        same(&a.mul(&b), &b.mul(&a), T - 4)?;
        same(&a.mul(&b.add(&c)), &a.mul(&b).add(&a.mul(&c)), T - 4)?;
        same(&a.mul(&b).mul(&c), &a.mul(&b.mul(&c)), T - 6)?;
    }

    #[test]
    fn division_inverts_multiplication(a in series(T), b in invertible_series(T)) {
        let q = a.mul(&b).div(&b).unwrap();
        same(&q, &a, T - 10)?;
    }

    #[test]
    fn exp_and_log_invert(a in unit_series(T)) {
        let l = a.log_unit().unwrap();
        same(&l.exp().unwrap(), &a, T)?;
        same(&a.log_derivative().unwrap(), &l.qdq(), T)?;
    }

    #[test]
    fn rational_powers_compose(a in unit_series(T), p in -6i64..=6, q in 1i64..=6) {
        let r = Rational::new(p, q);
        let x = a.pow_rational(&r).unwrap();
        let back = x.pow(q).unwrap();
        same(&back, &a.pow(p).unwrap(), T)?;
    }

    #[test]
    fn scale_variable_matches_substitution(a in series(T), c in nonzero_rational()) {
        let scaled = a.scale_variable(&c).unwrap();
        for n in -2..T {
            let expected = &a.coeff(n) * &c.pow(n as i32).unwrap();
            prop_assert_eq!(scaled.coeff(n), expected);
        }
    }

    #[test]
    fn puiseux_products_add_offsets(x in unit_series(T), y in unit_series(T), p in -12i64..12, q in 1i64..24) {
        let off = Rational::new(p, q);
        let a = PuiseuxSeries::new(Rational::from_integer(2), off.clone(), x).unwrap();
        let b = PuiseuxSeries::new(Rational::new(-1, 3), off.clone(), y).unwrap();
        let prod = a.mul(&b);
        prop_assert_eq!(prod.offset(), &(&off + &off));
        prop_assert_eq!(prod.scalar(), &Rational::new(-2, 3));
        prop_assert_eq!(prod.div(&b).unwrap(), a);
    }

    #[test]
    fn eta_quotient_strings_round_trip(
        factors in prop::collection::vec((1u32..=12, -6i64..=6, 1i64..=3), 0..4)
    ) {
        let spec = EtaQuotient::new(factors.iter().map(|&(m, n, d)| (m, Rational::new(n, d))).collect()).unwrap();
        let text = spec.to_string();
        prop_assert_eq!(text.parse::<EtaQuotient>().unwrap(), spec);
    }

    #[test]
    fn third_derivatives_are_symmetric(a in 0usize..6, b in 0usize..6, c in 0usize..6) {
        let f = d4::d4_build_potential(8).unwrap();
        let x = f.third_derivative(a, b, c).unwrap();
        for (i, j, k) in [(a, c, b), (b, a, c), (b, c, a), (c, a, b), (c, b, a)] {
            prop_assert_eq!(&f.third_derivative(i, j, k).unwrap(), &x);
        }
    }

    #[test]
    fn e6_third_derivatives_are_symmetric(a in 0usize..8, b in 0usize..8, c in 0usize..8) {
        let f = e6::e6_build_potential(6, false).unwrap();
        let table = f.third_derivative_table();
        let x = f.third_derivative(a, b, c).unwrap();
        prop_assert_eq!(&table[(a * 8 + b) * 8 + c], &x);
        prop_assert_eq!(&f.third_derivative(c, a, b).unwrap(), &x);
    }
}

#[test]
fn series_constructors_agree() {
    let a = QSeries::from_fn(0, 6, |n| Rational::from_integer(n + 1));
    let b = QSeries::new(0, (1..=6).map(Rational::from_integer).collect(), 6);
    assert_eq!(a, b);
    assert_eq!(
        QSeries::<Rational>::monomial(Rational::one(), 3, 6).valuation(),
        Some(3)
    );
}
