use std::fmt;

use crate::error::{Error, Result};
use crate::exact::{CyclotomicNumber, Field, Rational};
use crate::series::QSeries;

/// `scalar * q^offset * unit` with a rational offset and a unit power series
/// whose constant term is 1.
///
/// Houses the eta function, `theta_2` and twisted etas, whose fractional
/// leading exponents do not fit a Laurent series.
#[derive(Clone)]
pub struct PuiseuxSeries<F = Rational> {
    scalar: F,
    offset: Rational,
    unit: QSeries<F>,
}

impl<F: Field> PuiseuxSeries<F> {
    /// Normalizes `scalar * q^offset * series` so the unit part starts with
    /// `1`; the valuation and leading coefficient of `series` move into the
    /// offset and scalar.
    pub fn new(scalar: F, offset: Rational, series: QSeries<F>) -> Result<Self> {
        let (Some(v), Some(lead)) = (series.valuation(), series.leading_coeff()) else {
            return Err(Error::ZeroDivisor {
                order: series.prec(),
            });
        };
        let lead_inv = lead.inverse()?;
        let scalar = scalar.times(lead);
        let unit = series.shift(-v).scale(&lead_inv);
        Ok(Self {
            scalar,
            offset: &offset + &Rational::from_integer(v),
            unit,
        })
    }

    pub fn from_unit(unit: QSeries<F>) -> Result<Self> {
        Self::new(F::one(), Rational::zero(), unit)
    }

    pub fn scalar(&self) -> &F {
        &self.scalar
    }

    pub fn offset(&self) -> &Rational {
        &self.offset
    }

    pub fn unit(&self) -> &QSeries<F> {
        &self.unit
    }

    /// Precision of the unit part, relative to `q^offset`.
    pub fn relative_prec(&self) -> i64 {
        self.unit.prec()
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        Self {
            scalar: self.scalar.times(&rhs.scalar),
            offset: &self.offset + &rhs.offset,
            unit: self.unit.mul(&rhs.unit),
        }
    }

    pub fn inv(&self) -> Result<Self> {
        Ok(Self {
            scalar: self.scalar.inverse()?,
            offset: -&self.offset,
            unit: self.unit.inv()?,
        })
    }

    pub fn div(&self, rhs: &Self) -> Result<Self> {
        Ok(self.mul(&rhs.inv()?))
    }

    pub fn pow(&self, exp: i64) -> Result<Self> {
        let scalar = if exp >= 0 {
            self.scalar.clone()
        } else {
            self.scalar.inverse()?
        };
        let mut s = F::one();
        for _ in 0..exp.unsigned_abs() {
            s = s.times(&scalar);
        }
        Ok(Self {
            scalar: s,
            offset: &self.offset * &Rational::from_integer(exp),
            unit: self.unit.pow(exp)?,
        })
    }

    /// Rational power; the unit part goes through `exp(r log unit)` and the
    /// scalar needs an exact root in the field.
    pub fn pow_rational(&self, r: &Rational) -> Result<Self> {
        if let Some(e) = r.to_i64() {
            return self.pow(e);
        }
        let den = u32::try_from(r.denom())
            .map_err(|_| Error::InvalidArgument(format!("exponent {r}")))?;
        let root = self
            .scalar
            .nth_root(den)
            .ok_or_else(|| Error::LeadingCoefficientNotPower {
                coeff: self.scalar.to_string(),
                n: den,
            })?;
        let num = i64::try_from(r.numer())
            .map_err(|_| Error::InvalidArgument(format!("exponent {r}")))?;
        let scalar = if num >= 0 { root } else { root.inverse()? };
        let mut s = F::one();
        for _ in 0..num.unsigned_abs() {
            s = s.times(&scalar);
        }
        Ok(Self {
            scalar: s,
            offset: &self.offset * r,
            unit: self.unit.pow_rational(r)?,
        })
    }

    /// `q -> c q`. The unit coefficient of `q^n` picks up `c^n`; the scalar
    /// picks up `branch`, the caller's choice of `c^offset`. For integral
    /// offsets the branch may be omitted and `c^offset` is used.
    pub fn twist(&self, c: &F, branch: Option<&F>) -> Result<Self> {
        let factor = match (branch, self.offset.to_i64()) {
            (Some(b), _) => b.clone(),
            (None, Some(k)) if k >= 0 => pow_field(c, k as u64),
            (None, Some(k)) => pow_field(&c.inverse()?, k.unsigned_abs()),
            (None, None) => {
                return Err(Error::BranchMissing {
                    offset: self.offset.to_string(),
                })
            }
        };
        Ok(Self {
            scalar: self.scalar.times(&factor),
            offset: self.offset.clone(),
            unit: self.unit.scale_variable(c)?,
        })
    }

    /// `offset + q d/dq log(unit)`; the scalar prefactor drops out.
    pub fn log_derivative(&self) -> Result<QSeries<F>> {
        let d = self.unit.qdq().mul(&self.unit.inv()?);
        Ok(d.add_constant(&F::from_rational(&self.offset)))
    }

    /// The series as a Laurent series, which requires an integral offset.
    pub fn to_laurent(&self) -> Result<QSeries<F>> {
        let k = self.offset.to_i64().ok_or_else(|| {
            Error::InvalidArgument(format!("offset {} is not an integer", self.offset))
        })?;
        Ok(self.unit.scale(&self.scalar).shift(k))
    }

    pub fn truncate_unit(&self, order: i64) -> Self {
        Self {
            scalar: self.scalar.clone(),
            offset: self.offset.clone(),
            unit: self.unit.truncate(order),
        }
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> PuiseuxSeries<G> {
        PuiseuxSeries {
            scalar: f(&self.scalar),
            offset: self.offset.clone(),
            unit: self.unit.map(f),
        }
    }
}

impl PuiseuxSeries<Rational> {
    /// Embeds into `Q(zeta_order)`.
    pub fn to_cyclotomic(&self, order: u64) -> PuiseuxSeries<CyclotomicNumber> {
        self.map(|c| CyclotomicNumber::from_rational_in(order, c.clone()))
    }
}

fn pow_field<F: Field>(c: &F, e: u64) -> F {
    let mut acc = F::one();
    for _ in 0..e {
        acc = acc.times(c);
    }
    acc
}

impl<F: Field> PartialEq for PuiseuxSeries<F> {
    fn eq(&self, other: &Self) -> bool {
        self.scalar == other.scalar && self.offset == other.offset && self.unit == other.unit
    }
}

impl<F: Field> fmt::Display for PuiseuxSeries<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if !self.scalar.is_one() {
            parts.push(format!("({})", self.scalar));
        }
        if !self.offset.is_zero() {
            if self.offset.is_integer() {
                parts.push(format!("q^{}", self.offset));
            } else {
                parts.push(format!("q^({})", self.offset));
            }
        }
        parts.push(format!("({})", self.unit));
        f.write_str(&parts.join(" * "))
    }
}

impl<F: Field> fmt::Debug for PuiseuxSeries<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{cyclotomic_root, rat};

    #[test]
    fn normalization_moves_leading_term() {
        let s = QSeries::new(2, vec![rat(3, 1), rat(6, 1)], 6);
        let p = PuiseuxSeries::new(rat(1, 1), rat(1, 4), s).unwrap();
        assert_eq!(*p.offset(), rat(9, 4));
        assert_eq!(*p.scalar(), rat(3, 1));
        assert_eq!(p.unit().coeff(0), Rational::one());
        assert_eq!(p.unit().coeff(1), rat(2, 1));
        assert!(PuiseuxSeries::new(rat(1, 1), rat(0, 1), QSeries::<Rational>::zero(3)).is_err());
    }

    #[test]
    fn twist_identity_and_branch_rules() {
        let unit = QSeries::new(0, vec![rat(1, 1), rat(-1, 1), rat(-1, 1)], 3);
        let p = PuiseuxSeries::new(rat(1, 1), rat(1, 24), unit)
            .unwrap()
            .to_cyclotomic(72);
        let one = CyclotomicNumber::one();
        assert_eq!(p.twist(&one, Some(&one)).unwrap(), p);
        assert!(matches!(
            p.twist(&one, None),
            Err(Error::BranchMissing { .. })
        ));
        let w_inv = cyclotomic_root(72, -24);
        let t = p.twist(&w_inv, Some(&cyclotomic_root(72, -1))).unwrap();
        assert_eq!(t.unit().coeff(1), w_inv.negate());
        assert_eq!(*t.scalar(), cyclotomic_root(72, -1));
    }

    #[test]
    fn integral_offset_twist_without_branch() {
        let p = PuiseuxSeries::new(rat(1, 1), rat(2, 1), QSeries::one(4)).unwrap();
        let t = p.twist(&rat(-1, 1), None).unwrap();
        assert_eq!(*t.scalar(), rat(1, 1));
        let p3 = PuiseuxSeries::new(rat(1, 1), rat(3, 1), QSeries::one(4)).unwrap();
        assert_eq!(*p3.twist(&rat(-1, 1), None).unwrap().scalar(), rat(-1, 1));
    }

    #[test]
    fn log_derivative_keeps_offset() {
        let p = PuiseuxSeries::new(rat(2, 1), rat(1, 4), QSeries::one(5)).unwrap();
        let d = p.log_derivative().unwrap();
        assert_eq!(d.coeff(0), rat(1, 4));
        assert_eq!(d.prec(), 5);
    }

    #[test]
    fn powers() {
        let p = PuiseuxSeries::new(
            rat(4, 1),
            rat(1, 3),
            QSeries::new(0, vec![rat(1, 1), rat(2, 1)], 6),
        )
        .unwrap();
        let r = p.pow_rational(&rat(1, 2)).unwrap();
        assert_eq!(*r.scalar(), rat(2, 1));
        assert_eq!(*r.offset(), rat(1, 6));
        let back = r.pow(2).unwrap();
        assert_eq!(back, p);
        let inv = p.pow(-1).unwrap();
        assert_eq!(inv.mul(&p).to_laurent().unwrap(), QSeries::one(6));
    }
}
