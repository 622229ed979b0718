//! The orbifold `P^1_{2,2,2,2}` and the elliptic root system `D_4^{(1,1)}`.

use crate::error::Result;
use crate::exact::Rational;
use crate::frobenius::{FrobeniusPotential, IdentityReport};
use crate::models::GenusOne;
use crate::modular::{
    euler_product, f_at_power, f_negated_argument, f_series, lattice_theta, theta_xs, EtaQuotient,
    LatticeSpec,
};
use crate::series::QSeries;

/// The coefficient functions `f_0, f_1, f_2` of the quantum part.
#[derive(Debug, Clone, PartialEq)]
pub struct D4Coefficients {
    pub a: QSeries,
    pub b: QSeries,
    pub c: QSeries,
}

impl D4Coefficients {
    pub fn as_array(&self) -> [&QSeries; 3] {
        [&self.a, &self.b, &self.c]
    }

    pub fn truncate(&self, order: i64) -> Self {
        Self {
            a: self.a.truncate(order),
            b: self.b.truncate(order),
            c: self.c.truncate(order),
        }
    }
}

fn r(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

/// Solves the WDVV recursion for `a_n, b_n, c_n` with `a_1 = 1`; the
/// `n = 0, 1` equations force `c_0 = 0` and `b_0 = -1/24`.
pub fn d4_recursion_solve(order: i64) -> D4Coefficients {
    let len = order.max(2) as usize;
    let mut a = vec![Rational::zero(); len];
    let mut b = vec![Rational::zero(); len];
    let mut c = vec![Rational::zero(); len];
    b[0] = r(-1, 24);
    a[1] = Rational::one();
    let conv = |x: &[Rational], y: &[Rational], n: usize| -> Rational {
        let mut s = Rational::zero();
        for k in 1..n {
            if !x[k].is_zero() && !y[n - k].is_zero() {
                s += &(&x[k] * &y[n - k]);
            }
        }
        s
    };
    for n in 2..len {
        let nn = Rational::from_integer(n as i64);
        let aa = conv(&a, &a, n);
        let cc = conv(&c, &c, n);
        let ac = conv(&a, &c, n);
        let ab = conv(&a, &b, n);
        let bc = conv(&b, &c, n);
        let cn = (&(&aa * &r(6, 1)) - &(&cc * &r(8, 3))) * nn.recip().expect("n > 0");
        let an = (&(&ac * &r(8, 3)) - &(&ab * &r(24, 1))) * Rational::new(1, n as i64 - 1);
        let inner = &bc - &(&cn * &r(1, 24));
        let bn = (&(&(&aa * &r(-2, 3)) - &(&inner * &r(16, 3))) + &(&cc * &r(8, 9)))
            * nn.recip().expect("n > 0");
        a[n] = an;
        b[n] = bn;
        c[n] = cn;
    }
    let mk = |v: Vec<Rational>| QSeries::new(0, v, len as i64).truncate(order);
    D4Coefficients {
        a: mk(a),
        b: mk(b),
        c: mk(c),
    }
}

/// `f_0 = (f(q) - f(-q))/2`, `f_1 = f(q^4)`, `f_2 = f - f_0 - f_1`.
pub fn d4_analytic(order: i64) -> Result<D4Coefficients> {
    let f = f_series(order);
    let a = f.sub(&f_negated_argument(order)?).scale_rational(&r(1, 2));
    let b = f_at_power(4, order);
    let c = f.sub(&a).sub(&b);
    Ok(D4Coefficients { a, b, c })
}

/// The coefficients as `-q d/dq log` of eta quotients.
pub fn d4_eta_quotients() -> [EtaQuotient; 3] {
    [
        EtaQuotient::new(vec![(1, r(1, 1)), (2, r(-3, 2)), (4, r(1, 2))]).expect("valid"),
        EtaQuotient::single(4, r(1, 4)),
        EtaQuotient::new(vec![(2, r(3, 2)), (4, r(-3, 4))]).expect("valid"),
    ]
}

pub fn d4_eta_forms(order: i64) -> Result<D4Coefficients> {
    let [a, b, c] = d4_eta_quotients().map(|e| e.log_derivative(order).map(|s| s.neg()));
    Ok(D4Coefficients {
        a: a?,
        b: b?,
        c: c?,
    })
}

/// Checks the eta forms against the given coefficients.
pub fn d4_eta_form_reports(coeffs: &D4Coefficients, order: i64) -> Result<Vec<IdentityReport>> {
    let eta = d4_eta_forms(order)?;
    Ok(["f0-eta-form", "f1-eta-form", "f2-eta-form"]
        .iter()
        .zip(coeffs.as_array().iter().zip(eta.as_array()))
        .map(|(name, (x, y))| IdentityReport::compare(*name, x, y, order))
        .collect())
}

/// The three ODEs `q d/dq f_i = quadratic(f)` for `coeffs`.
pub fn d4_ode_reports(coeffs: &D4Coefficients, order: i64) -> Vec<IdentityReport> {
    let D4Coefficients { a, b, c } = coeffs;
    let lin = |terms: &[(&QSeries, &QSeries, Rational)]| {
        terms.iter().fold(QSeries::zero(order), |acc, (x, y, k)| {
            acc.add(&x.mul(y).scale_rational(k))
        })
    };
    let rhs_a = lin(&[(a, c, r(8, 3)), (a, b, r(-24, 1))]);
    let rhs_b = lin(&[(a, a, r(-2, 3)), (b, c, r(-16, 3)), (c, c, r(8, 9))]);
    let rhs_c = lin(&[(a, a, r(6, 1)), (c, c, r(-8, 3))]);
    vec![
        IdentityReport::compare("ode-f0", &a.qdq(), &rhs_a, order),
        IdentityReport::compare("ode-f1", &b.qdq(), &rhs_b, order),
        IdentityReport::compare("ode-f2", &c.qdq(), &rhs_c, order),
    ]
}

/// `X_2 = -6 f_1 + 2/3 f_2`, `X_3 = 2 f_0 - 4/3 f_2`, `X_4 = -2 f_0 - 4/3 f_2`.
pub fn d4_theta_bridge_reports(coeffs: &D4Coefficients, order: i64) -> Result<Vec<IdentityReport>> {
    let xs = theta_xs(order)?;
    let D4Coefficients { a, b, c } = coeffs;
    let combos = [
        b.scale_rational(&r(-6, 1)).add(&c.scale_rational(&r(2, 3))),
        a.scale_rational(&r(2, 1)).sub(&c.scale_rational(&r(4, 3))),
        a.scale_rational(&r(-2, 1)).sub(&c.scale_rational(&r(4, 3))),
    ];
    Ok(["x2-linear", "x3-linear", "x4-linear"]
        .iter()
        .zip(xs.iter().zip(&combos))
        .map(|(name, (x, y))| IdentityReport::compare(*name, x, y, order))
        .collect())
}

/// ODEs, eta forms and theta bridge for the analytic solution.
pub fn d4_ode_suite(order: i64) -> Result<Vec<IdentityReport>> {
    let coeffs = d4_analytic(order)?;
    let mut out = d4_ode_reports(&coeffs, order);
    out.extend(d4_eta_form_reports(&coeffs, order)?);
    out.extend(d4_theta_bridge_reports(&coeffs, order)?);
    Ok(out)
}

pub fn d4_verify_odes(order: i64) -> Result<IdentityReport> {
    Ok(IdentityReport::all_of("d4-odes", &d4_ode_suite(order)?))
}

/// Coordinates `t0, t1, t2, t3, t4, t`.
pub const D4_COORDS: [&str; 6] = ["t0", "t1", "t2", "t3", "t4", "t"];

/// The potential
/// `t0^2 t/2 + t0 sum t_i^2 / 4 + t1 t2 t3 t4 f0 + sum t_i^4 f1 / 4 + sum_{i<j} t_i^2 t_j^2 f2 / 6`.
pub fn d4_potential_from(coeffs: &D4Coefficients, order: i64) -> Result<FrobeniusPotential> {
    let names = D4_COORDS.iter().map(|s| s.to_string()).collect();
    let mut degrees = vec![Rational::one()];
    degrees.extend(std::iter::repeat_n(r(1, 2), 4));
    degrees.push(Rational::zero());
    let mut p = FrobeniusPotential::new(names, degrees, 0, 5, order);
    p.add_classical(p.monomial(&[("t0", 2), ("t", 1)])?, r(1, 2));
    let ts = ["t1", "t2", "t3", "t4"];
    for t in ts {
        p.add_classical(p.monomial(&[("t0", 1), (t, 2)])?, r(1, 4));
    }
    let e = p.monomial(&[("t1", 1), ("t2", 1), ("t3", 1), ("t4", 1)])?;
    p.add_quantum(e, &Rational::one(), &coeffs.a)?;
    for t in ts {
        p.add_quantum(p.monomial(&[(t, 4)])?, &r(1, 4), &coeffs.b)?;
    }
    for i in 0..4 {
        for j in i + 1..4 {
            p.add_quantum(p.monomial(&[(ts[i], 2), (ts[j], 2)])?, &r(1, 6), &coeffs.c)?;
        }
    }
    Ok(p)
}

pub fn d4_build_potential(order: i64) -> Result<FrobeniusPotential> {
    d4_potential_from(&d4_analytic(order)?, order)
}

/// `h_0 = Theta_{w1}/8`, `h_1 = -1/2 [ (1/2) d/dt log eta(q^2) + Theta_0/24 ]`,
/// `h_2 = -3/2 [ (1/2) d/dt log eta(q^2) - Theta_0/24 ]` with `q = e^t`.
pub fn d4_elliptic_weyl(order: i64) -> Result<D4Coefficients> {
    let theta0 = lattice_theta(LatticeSpec::ROOT, order);
    let theta1 = lattice_theta(LatticeSpec::OMEGA1, order);
    let half_dlog = EtaQuotient::single(2, Rational::one())
        .log_derivative(order)?
        .scale_rational(&r(1, 2));
    let t24 = theta0.scale_rational(&r(1, 24));
    Ok(D4Coefficients {
        a: theta1.scale_rational(&r(1, 8)),
        b: half_dlog.add(&t24).scale_rational(&r(-1, 2)),
        c: half_dlog.sub(&t24).scale_rational(&r(-3, 2)),
    })
}

pub fn d4_elliptic_weyl_reports(order: i64) -> Result<Vec<IdentityReport>> {
    let h = d4_elliptic_weyl(order)?;
    let f = d4_analytic(order)?;
    Ok(["h0=f0", "h1=f1", "h2=f2"]
        .iter()
        .zip(h.as_array().iter().zip(f.as_array()))
        .map(|(name, (x, y))| IdentityReport::compare(*name, x, y, order))
        .collect())
}

pub fn d4_elliptic_weyl_compare(order: i64) -> Result<IdentityReport> {
    Ok(IdentityReport::all_of(
        "elliptic-weyl",
        &d4_elliptic_weyl_reports(order)?,
    ))
}

/// `F_1 = -1/2 log eta(q^2) = -t/24 - 1/2 log prod (1 - q^{2n})`, with
/// `q d/dq F_1 = f(q^2)` and `f_1 + f_2/3 = f(q^2)`.
pub fn d4_genus_one(order: i64) -> Result<GenusOne> {
    let inner = (order + 1) / 2;
    let log_prod = euler_product(inner.max(1))
        .substitute_power(2)
        .truncate(order)
        .log_unit()?;
    let linear = r(-1, 24);
    let series = log_prod.scale_rational(&r(-1, 2));
    let derivative = series.qdq().add_constant(&linear);
    let target = f_at_power(2, order);
    let coeffs = d4_analytic(order)?;
    let virasoro = coeffs.b.add(&coeffs.c.scale_rational(&r(1, 3)));
    let reports = vec![
        IdentityReport::compare("d4-genus-one-derivative", &derivative, &target, order),
        IdentityReport::compare("d4-genus-one-virasoro", &virasoro, &target, order),
    ];
    Ok(GenusOne {
        linear,
        series,
        derivative,
        reports,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn recursion_seeds_and_first_terms() {
        let s = d4_recursion_solve(8);
        assert_eq!(s.b.coeff(0), rat(-1, 24));
        assert_eq!(s.c.coeff(0), rat(0, 1));
        assert_eq!(s.a.coeff(1), rat(1, 1));
        assert_eq!(s.a.coeff(2), rat(0, 1));
        assert_eq!(s.a.coeff(3), rat(4, 1));
        assert_eq!(s.c.coeff(2), rat(3, 1));
        assert_eq!(s.a.prec(), 8);
    }

    #[test]
    fn recursion_matches_analytic() {
        let s = d4_recursion_solve(30);
        let f = d4_analytic(30).unwrap();
        assert_eq!(s, f);
        assert_eq!(f.a.to_string(), d4_analytic(30).unwrap().a.to_string());
    }

    #[test]
    fn analytic_leading_terms() {
        let f = d4_analytic(6).unwrap();
        assert_eq!(f.a.to_string(), "q + 4q^3 + 6q^5 + O(q^6)");
        assert_eq!(f.b.coeff(0), rat(-1, 24));
        assert_eq!(f.c.coeff(0), rat(0, 1));
    }

    #[test]
    fn suites_pass_at_small_order() {
        for rep in d4_ode_suite(16).unwrap() {
            assert!(rep.passed(), "{rep}");
        }
        assert!(d4_elliptic_weyl_compare(16).unwrap().passed());
        let g = d4_genus_one(16).unwrap();
        assert_eq!(g.linear, rat(-1, 24));
        assert!(g.reports.iter().all(IdentityReport::passed));
        assert_eq!(g.derivative.coeff(2), rat(1, 1));
    }

    #[test]
    fn perturbed_f2_breaks_odes() {
        let mut f = d4_analytic(12).unwrap();
        f.c = f.c.add(&QSeries::monomial(rat(1, 1), 3, 12));
        assert!(d4_ode_reports(&f, 12).iter().any(|r| !r.passed()));
    }
}
