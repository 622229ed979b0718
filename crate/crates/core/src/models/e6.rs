//! The orbifold `P^1_{3,3,3}`, the Hesse-pencil function `h(q)` and the
//! simple elliptic singularity `E_6^{(1,1)}`.

use crate::error::{Error, Result};
use crate::exact::{cyclotomic_root, CyclotomicNumber, Rational};
use crate::frobenius::{compare_at_order, Failure, FrobeniusPotential, IdentityReport};
use crate::models::GenusOne;
use crate::modular::{
    big_j_series, ceil_rational, eta_expand, eta_laurent, euler_product, f_at_power, EtaQuotient,
};
use crate::par::{self, Execution};
use crate::series::{PuiseuxSeries, QSeries};

type Cyc = CyclotomicNumber;

/// The field `Q(zeta_72)` holding every root-of-unity prefactor.
pub const ZETA_ORDER: u64 = 72;

fn r(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

/// Precision margin for intermediate series whose Laurent tails shrink
/// under powers and quotients.
const MARGIN: i64 = 8;

/// `(1 - a^3)^2 [a' a''' - 3/2 (a'')^2] + 1/2 (8 + a^3) a (a')^4` with `' = q d/dq`.
pub fn schwarzian_residual(a: &QSeries) -> QSeries {
    let d1 = a.qdq();
    let d2 = d1.qdq();
    let d3 = d2.qdq();
    let a3 = a.square().mul(a);
    let one_minus = a3.neg().add_constant(&Rational::one());
    let bracket = d1.mul(&d3).sub(&d2.square().scale_rational(&r(3, 2)));
    let left = one_minus.square().mul(&bracket);
    let right = a3
        .add_constant(&Rational::from_integer(8))
        .mul(a)
        .mul(&d1.square().square())
        .scale_rational(&r(1, 2));
    left.add(&right)
}

/// The unique Laurent series `a = q^-1/3 + ...` with vanishing
/// [`schwarzian_residual`], to `O(q^order)`.
///
/// Step `n` sets `a_{n-1} = 0`, reads the coefficient `s` of `q^{n-8}` in
/// the residual and solves `-n^3 a_{-1}^7 a_{n-1} + s = 0`.
pub fn e6_schwarzian_solve(order: i64) -> QSeries {
    let lead = r(1, 3);
    let lead7_inv = lead.pow(-7).expect("nonzero");
    let mut coeffs = vec![lead];
    for n in 1..=order {
        coeffs.push(Rational::zero());
        let a = QSeries::new(-1, coeffs.clone(), n);
        let s = schwarzian_residual(&a).coeff(n - 8);
        let n3 = Rational::from_integer(n * n * n);
        let next = &(&s * &lead7_inv) / &n3;
        *coeffs.last_mut().expect("pushed") = next;
    }
    QSeries::new(-1, coeffs, order + 1).truncate(order)
}

/// For `a = c q^-1 + O(1)` the residual has no term at or below `q^-8`,
/// whatever `c` is; this is why the recursion starts at `n = 1`.
pub fn e6_degenerate_audit(samples: &[Rational]) -> IdentityReport {
    let failure = samples.iter().find_map(|c| {
        let a = QSeries::new(-1, vec![c.clone()], 0);
        let s = schwarzian_residual(&a);
        (s.prec() > -8)
            .then(|| s.coeff(-8))
            .filter(|x| !x.is_zero())
            .map(|x| Failure {
                indices: vec![],
                exponent: -8,
                residual: x.to_fraction_string(),
            })
    });
    IdentityReport::from_failure("schwarzian-degenerate", -7, failure)
}

/// `h(q) = 1 + (1/3) (eta(q) / eta(q^9))^3` to `O(q^order)`.
pub fn e6_h_analytic(order: i64) -> Result<QSeries> {
    let ratio = eta_laurent(&EtaQuotient::from_ints(&[(1, 3), (9, -3)]), order)?;
    Ok(ratio
        .scale_rational(&r(1, 3))
        .add_constant(&Rational::one()))
}

/// The solver against the eta expansion, and the residual of the solver's
/// own output.
pub fn e6_schwarzian_reports(order: i64) -> Result<Vec<IdentityReport>> {
    let a = e6_schwarzian_solve(order);
    let h = e6_h_analytic(order)?;
    let s = schwarzian_residual(&a);
    Ok(vec![
        IdentityReport::compare("schwarzian=h", &a, &h, order),
        IdentityReport::vanishes("schwarzian-residual", &s, order - 8),
    ])
}

fn eta_cyc(m: u32, r: i64, rel_prec: i64) -> Result<PuiseuxSeries<Cyc>> {
    let e = EtaQuotient::from_ints(&[(m, r)]);
    let order = rel_prec + ceil_rational(&e.offset());
    Ok(eta_expand(&e, order)?.to_cyclotomic(ZETA_ORDER))
}

/// `eta(c q)` with `c = zeta_72^k` and the branch `zeta_72^b` for `c^{1/24}`.
fn twisted_eta(k: i64, b: i64, rel_prec: i64) -> Result<PuiseuxSeries<Cyc>> {
    eta_cyc(1, 1, rel_prec)?.twist(
        &cyclotomic_root(ZETA_ORDER, k),
        Some(&cyclotomic_root(ZETA_ORDER, b)),
    )
}

fn compare_puiseux(
    name: &str,
    lhs: &PuiseuxSeries<Cyc>,
    rhs: &PuiseuxSeries<Cyc>,
    order: i64,
) -> IdentityReport {
    if lhs.offset() != rhs.offset() {
        return IdentityReport::fail(
            name,
            order,
            Failure {
                indices: vec![],
                exponent: 0,
                residual: format!("offsets {} vs {}", lhs.offset(), rhs.offset()),
            },
        );
    }
    let l = lhs.unit().scale(lhs.scalar());
    let r = rhs.unit().scale(rhs.scalar());
    IdentityReport::compare(name, &l, &r, order)
}

/// `exp(2 pi i/24) eta(q) eta(q w^-1) eta(q w^-2) eta(q^9) = eta(q^3)^4`
/// in `Q(zeta_72)`, `w = zeta_72^24`, with branches `zeta_72^-1`, `zeta_72^-2`.
pub fn eta_product_report(order: i64) -> Result<IdentityReport> {
    let p = order + 1;
    let lhs = eta_cyc(1, 1, p)?
        .mul(&twisted_eta(-24, -1, p)?)
        .mul(&twisted_eta(-48, -2, p)?)
        .mul(&eta_cyc(9, 1, p)?);
    let prefactor = lhs.scalar().checked_mul(&cyclotomic_root(ZETA_ORDER, 3))?;
    let lhs = PuiseuxSeries::new(prefactor, lhs.offset().clone(), lhs.unit().clone())?;
    let rhs = eta_cyc(3, 4, p)?;
    Ok(compare_puiseux("eta-product-zeta72", &lhs, &rhs, order))
}

/// `h = w + (1/3) (eta(q w^-2)/eta(q^9))^3 exp(2 pi i/12)` and
/// `h = w^2 + (1/3) (eta(q w^-1)/eta(q^9))^3 exp(2 pi i/24)`.
pub fn h_twist_reports(order: i64) -> Result<Vec<IdentityReport>> {
    let p = order + MARGIN;
    let h = e6_h_analytic(order)?.map(|c| Cyc::from_rational_in(ZETA_ORDER, c.clone()));
    let eta9_cubed = eta_cyc(9, 3, p)?;
    let mut out = Vec::new();
    for (name, k, b, prefactor, constant) in [
        ("h-twist-omega", -48, -2, 6, 24),
        ("h-twist-omega2", -24, -1, 3, 48),
    ] {
        let quotient = twisted_eta(k, b, p)?.pow(3)?.div(&eta9_cubed)?;
        let scalar = cyclotomic_root(ZETA_ORDER, prefactor).scale(&r(1, 3));
        let rhs = quotient
            .to_laurent()?
            .scale(&scalar)
            .add_constant(&cyclotomic_root(ZETA_ORDER, constant));
        out.push(IdentityReport::compare(name, &h, &rhs, order));
    }
    Ok(out)
}

/// The rational identities for `h` and `J`, each to `O(q^order)`.
pub fn e6_rational_identities(order: i64) -> Result<Vec<IdentityReport>> {
    let h_at = |w: i64| e6_h_analytic(w);
    let one = Rational::one();
    let mut out = Vec::new();

    out.push(compare_at_order(
        "j-relation",
        order,
        order + MARGIN,
        |w| {
            let h = h_at(w)?;
            let h3 = h.pow(3)?;
            let num = h3.mul(&h3.add_constant(&Rational::from_integer(8)).pow(3)?);
            let den = h3.neg().add_constant(&one).pow(3)?;
            Ok((num.div(&den)?.scale_rational(&r(-1, 64)), big_j_series(w)?))
        },
    )?);

    out.push(compare_at_order(
        "cusp-form-j",
        order,
        order + MARGIN,
        |w| {
            let j = big_j_series(w)?;
            let num = j.qdq().pow(6)?;
            let den = j.pow(4)?.mul(&j.add_constant(&-&one).pow(3)?);
            let lhs = num
                .div(&den)?
                .scale_rational(&Rational::from_integer(64 * 19683).recip()?);
            Ok((lhs, eta_laurent(&EtaQuotient::from_ints(&[(3, 24)]), w)?))
        },
    )?);

    out.push(compare_at_order("h-cubed", order, order + MARGIN, |w| {
        let lhs = h_at(w)?.pow(3)?.add_constant(&-&one);
        let rhs = eta_laurent(&EtaQuotient::from_ints(&[(3, 12), (9, -12)]), w)?
            .scale_rational(&r(1, 27));
        Ok((lhs, rhs))
    })?);

    out.push(compare_at_order(
        "cusp-form-h",
        order,
        order + MARGIN,
        |w| {
            let h = h_at(w)?;
            let num = h.qdq().pow(6)?;
            let den = h.pow(3)?.add_constant(&-&one).pow(3)?;
            Ok((
                num.div(&den)?.scale_rational(&r(1, 27)),
                eta_laurent(&EtaQuotient::from_ints(&[(3, 24)]), w)?,
            ))
        },
    )?);

    out.push(compare_at_order(
        "h-derivative-eta",
        order,
        order + MARGIN,
        |w| {
            let h = h_at(w)?;
            let lhs = h.qdq().div(&h.pow(3)?.neg().add_constant(&one))?;
            let rhs = eta_laurent(&EtaQuotient::from_ints(&[(9, 6), (3, -2)]), w)?
                .scale_rational(&r(9, 1));
            Ok((lhs, rhs))
        },
    )?);
    Ok(out)
}

/// The identities over `Q(zeta_72)`, each to `O(q^order)`.
pub fn e6_cyclotomic_identities(order: i64) -> Result<Vec<IdentityReport>> {
    let mut out = vec![eta_product_report(order)?];
    out.extend(h_twist_reports(order)?);
    Ok(out)
}

pub fn e6_identity_suite(order: i64) -> Result<Vec<IdentityReport>> {
    let mut out = e6_rational_identities(order)?;
    out.extend(e6_cyclotomic_identities(order)?);
    Ok(out)
}

/// `a(q)`, the fourteen coefficient functions and the normalization `A`.
#[derive(Debug, Clone, PartialEq)]
pub struct E6Coefficients {
    pub a: QSeries,
    pub f: Vec<QSeries>,
    pub big_a: Rational,
}

/// `A (a' / (1 - a^3))^{1/2}` with `A` fixed by the leading term `q`.
pub fn f0_from_a(a: &QSeries) -> Result<(QSeries, Rational)> {
    let d = a.qdq();
    let ratio = d.div(&a.pow(3)?.neg().add_constant(&Rational::one()))?;
    let root = ratio.nth_root(2)?;
    let lead = root
        .leading_coeff()
        .ok_or(Error::ZeroDivisor { order: root.prec() })?
        .clone();
    let big_a = lead.recip()?;
    Ok((root.scale_rational(&big_a), big_a))
}

/// The closed forms `f_1 .. f_13` in terms of `a` and `f_0`.
pub fn fi_closed_forms(a: &QSeries, f0: &QSeries, order: i64) -> Result<Vec<QSeries>> {
    let a2 = a.square();
    let a3 = a2.mul(a);
    let f02 = f0.square();
    let f03 = f02.mul(f0);
    let f04 = f02.square();
    let dlog = f0.qdq().div(f0)?;
    let a2f02 = a2.mul(&f02);
    let f = vec![
        f0.clone(),
        a.mul(f0),
        dlog.scale_rational(&r(-1, 9)).add(&a2f02),
        f02.clone(),
        a.mul(&f02),
        dlog.scale_rational(&r(-2, 9)).add(&a2f02),
        f03.clone(),
        a.mul(&f03),
        a2.mul(&f03),
        a3.mul(&f03),
        a.mul(&f04).scale_rational(&r(3, 1)),
        a2.mul(&f04).scale_rational(&r(3, 1)),
        a3.add_constant(&r(2, 1)).mul(&f04),
        a.mul(&a3.neg().add_constant(&r(2, 1)))
            .mul(&f04)
            .scale_rational(&r(3, 1)),
    ];
    Ok(f.into_iter().map(|s| s.truncate(order)).collect())
}

/// The forms derived from WDVV for a general `A`, in terms of `a` alone
/// (besides `f_0`).
pub fn fi_general_forms(
    a: &QSeries,
    f0: &QSeries,
    big_a: &Rational,
    order: i64,
) -> Result<Vec<QSeries>> {
    let one = Rational::one();
    let d1 = a.qdq();
    let d2 = d1.qdq();
    let a2 = a.square();
    let a3 = a2.mul(a);
    let u = d1.div(&a3.neg().add_constant(&one))?;
    let d2_over_d1 = d2.div(&d1)?;
    let a_inv2 = big_a.pow(-2)?;
    let f6 = f0
        .pow(3)?
        .scale_rational(&(&Rational::new(1, 81) * &a_inv2.pow(2)?));
    let f04 = f0.pow(4)?;
    let f10 = a
        .mul(&f04)
        .scale_rational(&(&Rational::new(1, 243) * &a_inv2.pow(3)?));
    let f = vec![
        f0.clone(),
        a.mul(f0),
        d2_over_d1.add(&a2.mul(&u)).scale_rational(&r(-1, 18)),
        u.scale_rational(&r(1, 9)),
        a.mul(&u).scale_rational(&r(1, 9)),
        d2_over_d1
            .add(&a2.mul(&u).scale_rational(&r(2, 1)))
            .scale_rational(&r(-1, 9)),
        f6.clone(),
        a.mul(&f6),
        a2.mul(&f6),
        a3.mul(&f6),
        f10.clone(),
        a.mul(&f10),
        a3.add_constant(&r(2, 1))
            .mul(&f04)
            .scale_rational(&(&Rational::new(1, 729) * &a_inv2.pow(3)?)),
        a3.neg().add_constant(&r(2, 1)).mul(&f10),
    ];
    Ok(f.into_iter().map(|s| s.truncate(order)).collect())
}

/// `f_0 = eta(q^9)^3 / eta(q^3)`.
pub fn e6_f0_eta(order: i64) -> Result<QSeries> {
    eta_laurent(&EtaQuotient::from_ints(&[(9, 3), (3, -1)]), order)
}

/// All `f_i` from the analytic `a = h` and the eta form of `f_0`.
pub fn e6_build_fi(order: i64) -> Result<E6Coefficients> {
    let w = order + MARGIN;
    let a = e6_h_analytic(w)?;
    let f0 = e6_f0_eta(w)?;
    let (_, big_a) = f0_from_a(&a)?;
    let f = fi_closed_forms(&a, &f0, order)?;
    Ok(E6Coefficients {
        a: a.truncate(order),
        f,
        big_a,
    })
}

/// All `f_i` from the Schwarzian solver and the square-root form of `f_0`.
pub fn e6_build_fi_from_recursion(order: i64) -> Result<E6Coefficients> {
    let w = order + MARGIN;
    let a = e6_schwarzian_solve(w);
    let (f0, big_a) = f0_from_a(&a)?;
    let f = fi_closed_forms(&a, &f0, order)?;
    Ok(E6Coefficients {
        a: a.truncate(order),
        f,
        big_a,
    })
}

/// Cross-checks of the coefficient functions: `f_0` three ways, `A^2 = 1/9`
/// and the general-`A` forms of every `f_i`.
pub fn e6_fi_reports(order: i64) -> Result<Vec<IdentityReport>> {
    let w = order + MARGIN;
    let a = e6_h_analytic(w)?;
    let f0_eta = e6_f0_eta(w)?;
    let (f0_root, big_a) = f0_from_a(&a)?;
    let f0_rec = f0_from_a(&e6_schwarzian_solve(w))?.0;
    let mut out = vec![
        IdentityReport::compare("f0-root=eta", &f0_root, &f0_eta, order),
        IdentityReport::compare("f0-recursion=eta", &f0_rec, &f0_eta, order),
    ];
    let a_sq = &big_a * &big_a;
    out.push(if a_sq == r(1, 9) {
        IdentityReport::pass("normalization-a-squared", order)
    } else {
        IdentityReport::fail(
            "normalization-a-squared",
            order,
            Failure {
                indices: vec![],
                exponent: 0,
                residual: (&a_sq - &r(1, 9)).to_fraction_string(),
            },
        )
    });
    let closed = fi_closed_forms(&a, &f0_eta, order)?;
    let general = fi_general_forms(&a, &f0_eta, &big_a, order)?;
    for (i, (x, y)) in closed.iter().zip(&general).enumerate() {
        out.push(IdentityReport::compare(
            format!("f{i}-closed=general-a"),
            x,
            y,
            order,
        ));
    }
    Ok(out)
}

/// Coordinates `t0 .. t6, t`.
pub const E6_COORDS: [&str; 8] = ["t0", "t1", "t2", "t3", "t4", "t5", "t6", "t"];

type Block = (Rational, Vec<Vec<(&'static str, u8)>>);

fn blocks(repeated_f11: bool) -> Vec<Block> {
    let m = |xs: &[(&'static str, u8)]| xs.to_vec();
    let f11 = if repeated_f11 {
        vec![
            m(&[("t4", 1), ("t5", 1), ("t6", 4)]),
            m(&[("t4", 1), ("t5", 4), ("t6", 1)]),
            m(&[("t4", 1), ("t5", 1), ("t6", 4)]),
        ]
    } else {
        vec![
            m(&[("t4", 1), ("t5", 1), ("t6", 4)]),
            m(&[("t4", 1), ("t5", 4), ("t6", 1)]),
            m(&[("t4", 4), ("t5", 1), ("t6", 1)]),
        ]
    };
    vec![
        (r(1, 1), vec![m(&[("t1", 1), ("t2", 1), ("t3", 1)])]),
        (
            r(1, 6),
            vec![m(&[("t1", 3)]), m(&[("t2", 3)]), m(&[("t3", 3)])],
        ),
        (
            r(1, 1),
            vec![
                m(&[("t1", 1), ("t2", 1), ("t5", 1), ("t6", 1)]),
                m(&[("t1", 1), ("t3", 1), ("t4", 1), ("t6", 1)]),
                m(&[("t2", 1), ("t3", 1), ("t4", 1), ("t5", 1)]),
            ],
        ),
        (
            r(1, 2),
            vec![
                m(&[("t1", 2), ("t4", 1), ("t5", 1)]),
                m(&[("t2", 2), ("t4", 1), ("t6", 1)]),
                m(&[("t3", 2), ("t5", 1), ("t6", 1)]),
            ],
        ),
        (
            r(1, 2),
            vec![
                m(&[("t1", 1), ("t2", 1), ("t4", 2)]),
                m(&[("t1", 1), ("t3", 1), ("t5", 2)]),
                m(&[("t2", 1), ("t3", 1), ("t6", 2)]),
            ],
        ),
        (
            r(1, 4),
            vec![
                m(&[("t1", 2), ("t6", 2)]),
                m(&[("t2", 2), ("t5", 2)]),
                m(&[("t3", 2), ("t4", 2)]),
            ],
        ),
        (
            r(1, 6),
            vec![
                m(&[("t1", 1), ("t6", 1), ("t4", 3)]),
                m(&[("t1", 1), ("t6", 1), ("t5", 3)]),
                m(&[("t2", 1), ("t5", 1), ("t4", 3)]),
                m(&[("t2", 1), ("t5", 1), ("t6", 3)]),
                m(&[("t3", 1), ("t4", 1), ("t5", 3)]),
                m(&[("t3", 1), ("t4", 1), ("t6", 3)]),
            ],
        ),
        (
            r(1, 2),
            vec![
                m(&[("t1", 1), ("t4", 1), ("t5", 1), ("t6", 2)]),
                m(&[("t2", 1), ("t4", 1), ("t5", 2), ("t6", 1)]),
                m(&[("t3", 1), ("t4", 2), ("t5", 1), ("t6", 1)]),
            ],
        ),
        (
            r(1, 4),
            vec![
                m(&[("t1", 1), ("t4", 2), ("t5", 2)]),
                m(&[("t2", 1), ("t4", 2), ("t6", 2)]),
                m(&[("t3", 1), ("t5", 2), ("t6", 2)]),
            ],
        ),
        (
            r(1, 24),
            vec![
                m(&[("t1", 1), ("t6", 4)]),
                m(&[("t2", 1), ("t5", 4)]),
                m(&[("t3", 1), ("t4", 4)]),
            ],
        ),
        (
            r(1, 36),
            vec![
                m(&[("t4", 3), ("t5", 3)]),
                m(&[("t4", 3), ("t6", 3)]),
                m(&[("t5", 3), ("t6", 3)]),
            ],
        ),
        (r(1, 24), f11),
        (r(1, 8), vec![m(&[("t4", 2), ("t5", 2), ("t6", 2)])]),
        (
            r(1, 720),
            vec![m(&[("t4", 6)]), m(&[("t5", 6)]), m(&[("t6", 6)])],
        ),
    ]
}

/// The potential with quantum blocks weighted by `coeffs.f`. With
/// `repeated_f11` the `f_11` block repeats `t4 t5 t6^4` in place of
/// `t4^4 t5 t6`.
pub fn e6_potential_from(
    coeffs: &E6Coefficients,
    order: i64,
    repeated_f11: bool,
) -> Result<FrobeniusPotential> {
    let names = E6_COORDS.iter().map(|s| s.to_string()).collect();
    let mut degrees = vec![Rational::one()];
    degrees.extend(std::iter::repeat_n(r(2, 3), 3));
    degrees.extend(std::iter::repeat_n(r(1, 3), 3));
    degrees.push(Rational::zero());
    let mut p = FrobeniusPotential::new(names, degrees, 0, 7, order);
    p.add_classical(p.monomial(&[("t0", 2), ("t", 1)])?, r(1, 2));
    for (x, y) in [("t1", "t6"), ("t2", "t5"), ("t3", "t4")] {
        p.add_classical(p.monomial(&[("t0", 1), (x, 1), (y, 1)])?, r(1, 3));
    }
    for ((c, monos), f) in blocks(repeated_f11).into_iter().zip(&coeffs.f) {
        for mono in monos {
            p.add_quantum(p.monomial(&mono)?, &c, f)?;
        }
    }
    Ok(p)
}

pub fn e6_build_potential(order: i64, repeated_f11: bool) -> Result<FrobeniusPotential> {
    e6_potential_from(&e6_build_fi(order)?, order, repeated_f11)
}

/// One row of the invariant table: `c_k` by three routes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GwRow {
    pub k: i64,
    /// Coefficient of `q^{3k+1}` in `eta(q^9)^3 / eta(q^3)`.
    pub eta: Rational,
    /// The same coefficient of `f_0` built from the Schwarzian solver.
    pub recursion: Rational,
    /// Coefficient of `Q^{k+1/3}` in `eta(Q^3)^3 / eta(Q)`.
    pub direct: Rational,
}

impl GwRow {
    pub fn agrees(&self) -> bool {
        self.eta == self.recursion && self.eta == self.direct
    }
}

pub fn e6_gw_table(kmax: i64) -> Result<Vec<GwRow>> {
    e6_gw_table_with(kmax, Execution::default())
}

pub fn e6_gw_table_with(kmax: i64, exec: Execution) -> Result<Vec<GwRow>> {
    let order = 3 * kmax.max(0) + 2;
    let routes: Vec<Result<Vec<Rational>>> = par::map_indexed(exec, 3, |route| match route {
        0 => e6_f0_eta(order).map(|f| (0..=kmax.max(0)).map(|k| f.coeff(3 * k + 1)).collect()),
        1 => f0_from_a(&e6_schwarzian_solve(order + MARGIN))
            .map(|(f, _)| (0..=kmax.max(0)).map(|k| f.coeff(3 * k + 1)).collect()),
        _ => eta_expand(&EtaQuotient::from_ints(&[(3, 3), (1, -1)]), kmax.max(0) + 1)
            .map(|p| (0..=kmax.max(0)).map(|k| p.unit().coeff(k)).collect()),
    });
    let mut it = routes.into_iter();
    let (eta, rec, direct) = (
        it.next().expect("3")?,
        it.next().expect("3")?,
        it.next().expect("3")?,
    );
    Ok((0..=kmax.max(0) as usize)
        .map(|k| GwRow {
            k: k as i64,
            eta: eta[k].clone(),
            recursion: rec[k].clone(),
            direct: direct[k].clone(),
        })
        .collect())
}

/// `F_1 = -1/3 log eta(q^3) = -t/24 - 1/3 log prod (1 - q^{3n})` with
/// `q d/dq F_1 = f(q^3)`, the Virasoro form `3/4 f_2 + 3/8 f_5` and its
/// expression through `h`.
pub fn e6_genus_one(order: i64) -> Result<GenusOne> {
    let inner = (order + 2) / 3;
    let log_prod = euler_product(inner.max(1))
        .substitute_power(3)
        .truncate(order)
        .log_unit()?;
    let linear = r(-1, 24);
    let series = log_prod.scale_rational(&r(-1, 3));
    let derivative = series.qdq().add_constant(&linear);
    let target = f_at_power(3, order);
    let coeffs = e6_build_fi(order)?;
    let virasoro = coeffs.f[2]
        .scale_rational(&r(3, 4))
        .add(&coeffs.f[5].scale_rational(&r(3, 8)));
    let h = e6_h_analytic(order + MARGIN)?;
    let dh = h.qdq();
    let via_h = dh.log_derivative()?.scale_rational(&r(-1, 12)).sub(
        &dh.mul(&h.square())
            .div(&h.pow(3)?.neg().add_constant(&Rational::one()))?
            .scale_rational(&r(1, 8)),
    );
    let eta_form = EtaQuotient::single(3, Rational::one())
        .log_derivative(order)?
        .scale_rational(&r(-1, 3));
    let reports = vec![
        IdentityReport::compare("e6-genus-one-derivative", &derivative, &target, order),
        IdentityReport::compare("e6-genus-one-virasoro", &virasoro, &target, order),
        IdentityReport::compare("e6-genus-one-via-h", &via_h, &eta_form, order),
        IdentityReport::compare("e6-genus-one-eta", &eta_form, &target, order),
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
    fn solver_leading_coefficients() {
        let a = e6_schwarzian_solve(10);
        assert_eq!(a.prec(), 10);
        assert_eq!(a.coeff(-1), rat(1, 3));
        for n in [0, 1, 3, 4, 6, 7] {
            assert_eq!(a.coeff(n), rat(0, 1), "a_{n}");
        }
        assert_eq!(a.coeff(2), rat(5, 3));
        assert_eq!(a.coeff(5), rat(-7, 3));
        assert_eq!(a.coeff(8), rat(1, 1));
    }

    #[test]
    fn solver_matches_eta_form() {
        for rep in e6_schwarzian_reports(20).unwrap() {
            assert!(rep.passed(), "{rep}");
        }
        assert!(e6_degenerate_audit(&[rat(1, 3), rat(2, 1), rat(-5, 7)]).passed());
    }

    #[test]
    fn h_leading_terms() {
        let h = e6_h_analytic(6).unwrap();
        assert_eq!(h.valuation(), Some(-1));
        assert_eq!(h.coeff(-1), rat(1, 3));
        assert_eq!(h.coeff(0), rat(0, 1));
    }

    #[test]
    fn identities_at_small_order() {
        for rep in e6_identity_suite(12).unwrap() {
            assert!(rep.passed(), "{rep}");
        }
    }

    #[test]
    fn coefficient_functions() {
        let c = e6_build_fi(8).unwrap();
        assert_eq!(c.f[0].to_string(), "q + q^4 + 2q^7 + O(q^8)");
        assert_eq!(c.f[1].coeff(0), rat(1, 3));
        assert_eq!(&c.big_a * &c.big_a, rat(1, 9));
        for rep in e6_fi_reports(8).unwrap() {
            assert!(rep.passed(), "{rep}");
        }
    }

    #[test]
    fn gw_table_first_rows() {
        let t = e6_gw_table(2).unwrap();
        let c: Vec<Rational> = t.iter().map(|row| row.eta.clone()).collect();
        assert_eq!(c, vec![rat(1, 1), rat(1, 1), rat(2, 1)]);
        assert!(t.iter().all(GwRow::agrees));
    }

    #[test]
    fn genus_one_small() {
        let g = e6_genus_one(12).unwrap();
        assert_eq!(g.linear, rat(-1, 24));
        assert_eq!(g.derivative.coeff(3), rat(1, 1));
        for rep in &g.reports {
            assert!(rep.passed(), "{rep}");
        }
    }
}
