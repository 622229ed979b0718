//! `E_4`, `Delta`, the `j`-invariant and `J(q) = j(q^3) / 1728`.

use crate::error::Result;
use crate::exact::Rational;
use crate::modular::eta::euler_product;
use crate::modular::sigma::sigma_k;
use crate::series::QSeries;

/// `E_4 = 1 + 240 sum sigma_3(n) q^n`.
pub fn e4_series(order: i64) -> QSeries {
    QSeries::from_fn(0, order.max(0), |n| {
        if n == 0 {
            Rational::one()
        } else {
            Rational::from_integer(240 * sigma_k(n as u64, 3) as i64)
        }
    })
}

/// `Delta = eta(q)^24 = q prod (1 - q^n)^24`.
pub fn delta_series(order: i64) -> QSeries {
    let unit = euler_product((order - 1).max(0))
        .pow(24)
        .expect("integer power");
    unit.shift(1)
}

/// `j = E_4^3 / Delta = q^-1 + 744 + 196884 q + ...` to `O(q^order)`.
pub fn j_series(order: i64) -> Result<QSeries> {
    let e4 = e4_series(order + 1);
    let delta = delta_series(order + 2);
    e4.pow(3)?.div(&delta)
}

/// `J(q) = j(q^3) / 1728 = (q^-3 + 744 + ...) / 1728` to `O(q^order)`.
pub fn big_j_series(order: i64) -> Result<QSeries> {
    let inner = (order + 2).div_euclid(3).max(0);
    let j = j_series(inner)?;
    Ok(j.substitute_power(3)
        .truncate(order)
        .scale(&Rational::new(1, 1728)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn j_leading_terms() {
        let j = j_series(3).unwrap();
        assert_eq!(j.prec(), 3);
        assert_eq!(j.valuation(), Some(-1));
        assert_eq!(j.coeff(-1), rat(1, 1));
        assert_eq!(j.coeff(0), rat(744, 1));
        assert_eq!(j.coeff(1), rat(196884, 1));
        assert_eq!(j.coeff(2), rat(21493760, 1));
    }

    #[test]
    fn big_j_normalization() {
        let j = big_j_series(4).unwrap();
        assert_eq!(j.prec(), 4);
        assert_eq!(j.valuation(), Some(-3));
        assert_eq!(j.coeff(-3), rat(1, 1728));
        assert_eq!(j.coeff(0), rat(744, 1728));
        assert_eq!(j.coeff(3), rat(196884, 1728));
    }

    #[test]
    fn delta_coefficients() {
        let d = delta_series(5);
        assert_eq!(d.to_string(), "q - 24q^2 + 252q^3 - 1472q^4 + O(q^5)");
    }
}
