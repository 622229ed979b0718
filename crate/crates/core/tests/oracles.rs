//! Values recomputed by elementary means and compared with the library.

use orbifold_gw::exact::{rat, Rational};
use orbifold_gw::models::{d4, e6};
use orbifold_gw::modular::{
    delta_series, e4_series, euler_product, f_series, j_series, lattice_theta, sigma, sigma_k,
    theta_jacobi, LatticeSpec, Theta,
};
use orbifold_gw::QSeries;

fn int(n: i64) -> Rational {
    Rational::from_integer(n)
}

fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

/// Partition counts by the coin-change recurrence.
fn partitions(len: usize) -> Vec<i64> {
    let mut p = vec![0i64; len];
    p[0] = 1;
    for part in 1..len {
        for n in part..len {
            p[n] += p[n - part];
        }
    }
    p
}

#[test]
fn euler_product_is_pentagonal() {
    let order = 200;
    let p = euler_product(order);
    let mut expected = vec![0i64; order as usize];
    for k in 0..20i64 {
        let s = if k % 2 == 0 { 1 } else { -1 };
        for g in [k * (3 * k - 1) / 2, k * (3 * k + 1) / 2] {
            if g < order {
                expected[g as usize] = s;
            }
        }
    }
    for (n, e) in expected.iter().enumerate() {
        assert_eq!(p.coeff(n as i64), int(*e), "q^{n}");
    }
}

#[test]
fn inverse_euler_product_counts_partitions() {
    let order = 120;
    let inv = euler_product(order).inv().unwrap();
    let p = partitions(order as usize);
    for n in 0..order {
        assert_eq!(inv.coeff(n), int(p[n as usize]));
    }
    assert_eq!(p[100], 190_569_292);
    let cubed = euler_product(order / 3).substitute_power(3).inv().unwrap();
    for n in 0..order - 2 {
        let e = if n % 3 == 0 { p[(n / 3) as usize] } else { 0 };
        assert_eq!(cubed.coeff(n), int(e), "q^{n}");
    }
}

#[test]
fn sigma_matches_divisor_lists() {
    for n in 1..=500u64 {
        let d = divisors(n);
        assert_eq!(sigma(n), d.iter().sum::<u64>(), "sigma({n})");
        assert_eq!(sigma_k(n, 3), d.iter().map(|x| x.pow(3)).sum::<u64>());
    }
}

#[test]
fn sigma_four_n_relation() {
    for n in 1..=10_000u64 {
        assert_eq!(sigma(4 * n) + 2 * sigma(n), 3 * sigma(2 * n), "n = {n}");
    }
}

#[test]
fn f_series_constant_and_coefficients() {
    let f = f_series(30);
    assert_eq!(f.coeff(0), rat(-1, 24));
    assert_eq!(f.coeff(12), int(28));
    assert_eq!(f.coeff(29), int(30));
}

#[test]
fn delta_by_repeated_squaring() {
    let order = 40;
    let p = euler_product(order);
    let p2 = p.square();
    let p4 = p2.square();
    let p8 = p4.square();
    let p16 = p8.square();
    let via_squares = p16.mul(&p8).shift(1).truncate(order);
    let d = delta_series(order);
    assert_eq!(d.first_difference(&via_squares), None);
    let tau = [
        1, -24, 252, -1472, 4830, -6048, -16744, 84480, -113643, -115920,
    ];
    for (n, t) in tau.iter().enumerate() {
        assert_eq!(d.coeff(n as i64 + 1), int(*t), "tau({})", n + 1);
    }
}

#[test]
fn e4_and_j_coefficients() {
    let e4 = e4_series(5);
    assert_eq!(e4.coeff(1), int(240));
    assert_eq!(e4.coeff(2), int(2160));
    let j = j_series(5).unwrap();
    let expected = [
        (-1, 1i64),
        (0, 744),
        (1, 196_884),
        (2, 21_493_760),
        (3, 864_299_970),
        (4, 20_245_856_256),
    ];
    for (n, c) in expected {
        assert_eq!(j.coeff(n), int(c), "q^{n}");
    }
}

/// `r_4(n) = 8 sum_{d | n, 4 does not divide d} d`.
fn r4(n: u64) -> i64 {
    if n == 0 {
        return 1;
    }
    8 * divisors(n).into_iter().filter(|d| d % 4 != 0).sum::<u64>() as i64
}

#[test]
fn lattice_counts_match_four_squares() {
    let order = 60;
    let root = lattice_theta(LatticeSpec::ROOT, order);
    let coset = lattice_theta(LatticeSpec::OMEGA1, order);
    for n in 0..order {
        let (even, odd) = if n % 2 == 0 {
            (r4(n as u64), 0)
        } else {
            (0, r4(n as u64))
        };
        assert_eq!(root.coeff(n), int(even), "root q^{n}");
        assert_eq!(coset.coeff(n), int(odd), "coset q^{n}");
    }
    assert_eq!(root.coeff(2), int(24));
    assert_eq!(coset.coeff(1), int(8));
}

#[test]
fn jacobi_quartic_identity() {
    let order = 40;
    let fourth = |t| theta_jacobi(t, order).pow(4).unwrap().to_laurent().unwrap();
    let lhs = fourth(Theta::Three);
    let rhs = fourth(Theta::Two).add(&fourth(Theta::Four));
    assert_eq!(lhs.truncate(30).first_difference(&rhs.truncate(30)), None);
    assert!(lhs.prec().min(rhs.prec()) >= 30);
}

#[test]
fn d4_odd_part_is_odd_divisor_sums() {
    let c = d4::d4_analytic(50).unwrap();
    for n in 0..50i64 {
        let e = if n % 2 == 1 {
            sigma(n as u64) as i64
        } else {
            0
        };
        assert_eq!(c.a.coeff(n), int(e), "q^{n}");
    }
    assert_eq!(c.b.coeff(0), rat(-1, 24));
    assert_eq!(c.b.coeff(4), int(1));
    assert_eq!(c.b.coeff(8), int(3));
}

#[test]
fn gw_invariants_are_twisted_divisor_counts() {
    let rows = e6::e6_gw_table(30).unwrap();
    for row in rows {
        let m = (3 * row.k + 1) as u64;
        let count: i64 = divisors(m)
            .into_iter()
            .map(|d| match d % 3 {
                1 => 1,
                2 => -1,
                _ => 0,
            })
            .sum();
        assert!(row.agrees(), "c_{}", row.k);
        assert_eq!(row.eta, int(count), "c_{}", row.k);
    }
}

#[test]
fn supports_mod_three() {
    let h = e6::e6_h_analytic(60).unwrap();
    for n in -1..60i64 {
        if n.rem_euclid(3) != 2 {
            assert!(h.coeff(n).is_zero(), "h at q^{n}");
        }
    }
    assert_eq!(h.coeff(-1), rat(1, 3));
    let f0 = e6::e6_f0_eta(60).unwrap();
    for n in 0..60i64 {
        if n % 3 != 1 {
            assert!(f0.coeff(n).is_zero(), "f0 at q^{n}");
        }
    }
    let fi = e6::e6_build_fi(30).unwrap();
    assert_eq!(&fi.big_a * &fi.big_a, rat(1, 9));
}

#[test]
fn schwarzian_solver_is_independent_of_working_order() {
    let long = e6::e6_schwarzian_solve(45);
    let short = e6::e6_schwarzian_solve(20);
    assert_eq!(short.first_difference(&long.truncate(20)), None);
    assert_eq!(QSeries::prec(&short), 20);
}
