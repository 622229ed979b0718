//! Halphen's system for the theta log-derivatives, their eta forms and the
//! parity identity for `f(q)`.

use crate::error::Result;
use crate::exact::Rational;
use crate::frobenius::IdentityReport;
use crate::modular::eta::EtaQuotient;
use crate::modular::sigma::f_series;
use crate::modular::theta::{theta_log_derivative, Theta};
use crate::series::{PuiseuxSeries, QSeries};

/// `X_2, X_3, X_4` to `O(q^order)`.
pub fn theta_xs(order: i64) -> Result<[QSeries; 3]> {
    Ok([
        theta_log_derivative(Theta::Two, order)?,
        theta_log_derivative(Theta::Three, order)?,
        theta_log_derivative(Theta::Four, order)?,
    ])
}

/// Eta quotients whose log-derivatives give `X_2, X_3, X_4`. The scalar 2
/// in front of the first one is invisible to the log-derivative.
pub fn theta_eta_forms() -> [EtaQuotient; 3] {
    [
        EtaQuotient::from_ints(&[(2, -1), (4, 2)]),
        EtaQuotient::from_ints(&[(1, -2), (2, 5), (4, -2)]),
        EtaQuotient::from_ints(&[(1, 2), (2, -1)]),
    ]
}

/// `f(q^m)` to `O(q^order)`.
pub fn f_at_power(m: u32, order: i64) -> QSeries {
    let inner = (order + m as i64 - 1).div_euclid(m as i64).max(1);
    f_series(inner).substitute_power(m).truncate(order)
}

/// `f(-q)`, realized as the twist `q -> -q`.
pub fn f_negated_argument(order: i64) -> Result<QSeries> {
    let p = PuiseuxSeries::from_unit(f_series(order))?;
    p.twist(&Rational::from_integer(-1), None)?.to_laurent()
}

/// The three Halphen equations, the eta forms of each `X_i`, and
/// `(f(q) + f(-q))/2 = 3 f(q^2) - 2 f(q^4)`, each to `O(q^order)`.
pub fn halphen_suite(order: i64) -> Result<Vec<IdentityReport>> {
    let xs = theta_xs(order)?;
    let half = Rational::new(1, 2);
    let two = Rational::from_integer(2);
    let mut out = Vec::new();
    for (i, j) in [(0usize, 1usize), (1, 2), (2, 0)] {
        let lhs = xs[i].add(&xs[j]).qdq().scale_rational(&half);
        let rhs = xs[i].mul(&xs[j]).scale_rational(&two);
        let name = format!("halphen-x{}x{}", i + 2, j + 2);
        out.push(IdentityReport::compare(name, &lhs, &rhs, order));
    }
    for (k, eta) in theta_eta_forms().iter().enumerate() {
        let rhs = eta.log_derivative(order)?;
        out.push(IdentityReport::compare(
            format!("x{}-eta-form", k + 2),
            &xs[k],
            &rhs,
            order,
        ));
    }
    let f = f_series(order);
    let lhs = f.add(&f_negated_argument(order)?).scale_rational(&half);
    let rhs = f_at_power(2, order)
        .scale_rational(&Rational::from_integer(3))
        .sub(&f_at_power(4, order).scale_rational(&two));
    out.push(IdentityReport::compare("f-parity", &lhs, &rhs, order));
    Ok(out)
}

/// The whole [`halphen_suite`] as one report.
pub fn halphen_verify(order: i64) -> Result<IdentityReport> {
    Ok(IdentityReport::all_of("halphen", &halphen_suite(order)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn suite_passes() {
        let suite = halphen_suite(30).unwrap();
        assert_eq!(suite.len(), 7);
        for r in &suite {
            assert!(r.passed(), "{r}");
        }
        assert!(halphen_verify(12).unwrap().passed());
    }

    #[test]
    fn f_of_minus_q() {
        let s = f_negated_argument(4).unwrap();
        assert_eq!(s.coeff(0), rat(-1, 24));
        assert_eq!(s.coeff(1), rat(-1, 1));
        assert_eq!(s.coeff(2), rat(3, 1));
        assert_eq!(s.coeff(3), rat(-4, 1));
    }
}
