//! Sparse polynomials in the flat coordinates with `q`-series coefficients.

use std::collections::BTreeMap;

use crate::exact::Rational;
use crate::series::QSeries;

/// Exponent vector over all coordinates.
pub type Exponents = Vec<u8>;

/// `sum_m c_m(q) t^m` with every coefficient known to `O(q^order)`.
/// Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq)]
pub struct SeriesPoly {
    dim: usize,
    order: i64,
    terms: BTreeMap<Exponents, QSeries>,
}

impl SeriesPoly {
    pub fn zero(dim: usize, order: i64) -> Self {
        Self {
            dim,
            order,
            terms: BTreeMap::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn order(&self) -> i64 {
        self.order
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &QSeries)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn get(&self, exps: &[u8]) -> Option<&QSeries> {
        self.terms.get(exps)
    }

    /// Adds `c * t^exps`.
    pub fn add_term(&mut self, exps: Exponents, c: QSeries) {
        assert_eq!(exps.len(), self.dim, "exponent vector length");
        let c = c.truncate(self.order);
        match self.terms.remove(&exps) {
            Some(old) => {
                let s = old.add(&c);
                if !s.is_zero() {
                    self.terms.insert(exps, s);
                }
            }
            None => {
                if !c.is_zero() {
                    self.terms.insert(exps, c);
                }
            }
        }
    }

    pub fn add_rational_term(&mut self, exps: Exponents, c: Rational) {
        let order = self.order;
        self.add_term(exps, QSeries::constant(c, order));
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        out.order = self.order.min(rhs.order);
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out.retruncate();
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.scale(&Rational::from_integer(-1)))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero(self.dim, self.order);
        if !c.is_zero() {
            for (e, s) in &self.terms {
                out.terms.insert(e.clone(), s.scale_rational(c));
            }
        }
        out
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::zero(self.dim, self.order.min(rhs.order));
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e: Exponents = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, ca.mul(cb));
            }
        }
        out
    }

    /// `d/dt_i`. When `i` is the special coordinate `t = log q`, the
    /// coefficients are differentiated by `q d/dq` as well (product rule).
    pub fn derivative(&self, i: usize, special: Option<usize>) -> Self {
        let mut out = Self::zero(self.dim, self.order);
        for (e, c) in &self.terms {
            if e[i] > 0 {
                let mut e2 = e.clone();
                e2[i] -= 1;
                out.add_term(e2, c.scale_rational(&Rational::from_integer(e[i] as i64)));
            }
            if special == Some(i) {
                out.add_term(e.clone(), c.qdq());
            }
        }
        out
    }

    /// Lowers the precision of every coefficient to `order`.
    pub fn truncate(&self, order: i64) -> Self {
        let mut out = Self::zero(self.dim, order.min(self.order));
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    fn retruncate(&mut self) {
        let order = self.order;
        self.terms = std::mem::take(&mut self.terms)
            .into_iter()
            .map(|(e, c)| (e, c.truncate(order)))
            .filter(|(_, c)| !c.is_zero())
            .collect();
    }

    /// The lexicographically first nonzero term: exponents, lowest
    /// `q`-exponent and its coefficient.
    pub fn first_nonzero(&self) -> Option<(&Exponents, i64, Rational)> {
        self.terms.iter().next().map(|(e, c)| {
            let v = c.valuation().expect("stored terms are nonzero");
            (e, v, c.coeff(v))
        })
    }

    /// With `special` the index of `t`, the value is a constant iff it has
    /// at most the empty monomial and that coefficient has no `q`-dependence.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (e, c) = self.terms.iter().next()?;
                if e.iter().any(|&x| x > 0) {
                    return None;
                }
                let c0 = c.coeff(0);
                if c.sub(&QSeries::constant(c0.clone(), c.prec())).is_zero() {
                    Some(c0)
                } else {
                    None
                }
            }
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn derivative_rules() {
        let mut p = SeriesPoly::zero(3, 5);
        // (1/2) t0^2 t and t1 * (q + 2q^2)
        p.add_rational_term(vec![2, 0, 1], rat(1, 2));
        p.add_term(
            vec![0, 1, 0],
            QSeries::new(1, vec![rat(1, 1), rat(2, 1)], 5),
        );
        let d = p.derivative(2, Some(2));
        assert_eq!(d.get(&[2, 0, 0]).unwrap().coeff(0), rat(1, 2));
        assert_eq!(d.get(&[0, 1, 0]).unwrap().coeff(2), rat(4, 1));
        let ddd = p
            .derivative(0, Some(2))
            .derivative(0, Some(2))
            .derivative(2, Some(2));
        assert_eq!(ddd.as_constant(), Some(rat(1, 1)));
    }

    #[test]
    fn cancellation_drops_terms() {
        let mut p = SeriesPoly::zero(1, 4);
        p.add_rational_term(vec![1], rat(3, 1));
        let z = p.sub(&p);
        assert!(z.is_empty());
        assert_eq!(p.mul(&p).get(&[2]).unwrap().coeff(0), rat(9, 1));
    }
}
