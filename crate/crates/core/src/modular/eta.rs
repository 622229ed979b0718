//! Dedekind eta quotients `prod eta(q^m)^r` as exact Puiseux expansions.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::series::{PuiseuxSeries, QSeries};

/// `prod eta(q^m)^r` over the listed `(m, r)` factors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EtaQuotient {
    factors: Vec<(u32, Rational)>,
}

impl EtaQuotient {
    /// Factors with a zero exponent are dropped; repeated scales are kept
    /// in order and multiply out in the expansion.
    pub fn new(factors: Vec<(u32, Rational)>) -> Result<Self> {
        if let Some((m, _)) = factors.iter().find(|(m, _)| *m == 0) {
            return Err(Error::InvalidArgument(format!(
                "eta scale must be positive, got {m}"
            )));
        }
        Ok(Self {
            factors: factors.into_iter().filter(|(_, r)| !r.is_zero()).collect(),
        })
    }

    /// Integer-exponent shorthand.
    pub fn from_ints(factors: &[(u32, i64)]) -> Self {
        Self::new(
            factors
                .iter()
                .map(|&(m, r)| (m, Rational::from_integer(r)))
                .collect(),
        )
        .expect("positive scales")
    }

    pub fn single(m: u32, r: Rational) -> Self {
        Self::new(vec![(m, r)]).expect("positive scale")
    }

    pub fn factors(&self) -> &[(u32, Rational)] {
        &self.factors
    }

    /// `sum m r / 24`, the leading `q`-exponent.
    pub fn offset(&self) -> Rational {
        let s: Rational = self
            .factors
            .iter()
            .map(|(m, r)| r * &Rational::from_integer(*m as i64))
            .sum();
        s * Rational::new(1, 24)
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut factors = self.factors.clone();
        factors.extend(rhs.factors.iter().cloned());
        Self { factors }
    }

    pub fn pow(&self, e: &Rational) -> Self {
        Self::new(self.factors.iter().map(|(m, r)| (*m, r * e)).collect()).expect("positive scales")
    }

    /// The unit part `prod_n prod (1 - q^{mn})^r` to relative precision `prec`.
    pub fn unit(&self, prec: i64) -> Result<QSeries> {
        let prec = prec.max(0);
        let mut acc = QSeries::one(prec);
        for (m, r) in &self.factors {
            let inner_prec = (prec + *m as i64 - 1) / *m as i64;
            let base = euler_product(inner_prec);
            let powered = base.pow_rational(r)?;
            acc = acc.mul(&powered.substitute_power(*m).truncate(prec));
        }
        Ok(acc)
    }

    /// Normalized log-derivative `q d/dq log` of the quotient, to `O(q^prec)`.
    pub fn log_derivative(&self, prec: i64) -> Result<QSeries> {
        let unit = self.unit(prec)?;
        Ok(unit.log_derivative()?.add_constant(&self.offset()))
    }
}

/// `prod_{n >= 1} (1 - q^n)` to `O(q^prec)`, one sparse factor at a time.
pub fn euler_product(prec: i64) -> QSeries {
    let len = prec.max(0) as usize;
    let mut c = vec![0i64; len];
    if len > 0 {
        c[0] = 1;
    }
    for n in 1..len {
        for k in (n..len).rev() {
            c[k] -= c[k - n];
        }
    }
    QSeries::new(
        0,
        c.into_iter().map(Rational::from_integer).collect(),
        prec.max(0),
    )
}

/// Exact expansion of `spec` with absolute truncation `O(q^order)`.
pub fn eta_expand(spec: &EtaQuotient, order: i64) -> Result<PuiseuxSeries> {
    let offset = spec.offset();
    let rel = ceil_rational(&(Rational::from_integer(order) - &offset)).max(0);
    PuiseuxSeries::new(Rational::one(), offset, spec.unit(rel)?)
}

/// The quotient as a Laurent series to `O(q^order)`; the offset must be an integer.
pub fn eta_laurent(spec: &EtaQuotient, order: i64) -> Result<QSeries> {
    eta_expand(spec, order)?.to_laurent()
}

pub(crate) fn ceil_rational(x: &Rational) -> i64 {
    let f = (-x).floor();
    -i64::try_from(f).expect("exponent fits in i64")
}

impl fmt::Display for EtaQuotient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|(m, r)| {
                if r.is_one() {
                    format!("eta({m})")
                } else {
                    format!("eta({m})^{r}")
                }
            })
            .collect();
        f.write_str(&parts.join(" * "))
    }
}

impl FromStr for EtaQuotient {
    type Err = Error;

    /// Parses `eta(9)^3 * eta(3)^-1`; exponents may be `p/r`, optionally
    /// parenthesized, and `^r` may be omitted.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |why: &str| Error::Parse(format!("{why} in eta quotient {s:?}"));
        let trimmed = s.trim();
        if trimmed == "1" {
            return Ok(Self {
                factors: Vec::new(),
            });
        }
        let mut factors = Vec::new();
        for part in trimmed.split('*') {
            let part: String = part.chars().filter(|c| !c.is_whitespace()).collect();
            let rest = part
                .strip_prefix("eta(")
                .ok_or_else(|| bad("expected eta(m)"))?;
            let close = rest.find(')').ok_or_else(|| bad("unclosed parenthesis"))?;
            let m: u32 = rest[..close].parse().map_err(|_| bad("bad scale"))?;
            let tail = &rest[close + 1..];
            let r = if tail.is_empty() {
                Rational::one()
            } else {
                let e = tail.strip_prefix('^').ok_or_else(|| bad("expected ^"))?;
                let e = e
                    .strip_prefix('(')
                    .and_then(|x| x.strip_suffix(')'))
                    .unwrap_or(e);
                e.parse::<Rational>().map_err(|_| bad("bad exponent"))?
            };
            factors.push((m, r));
        }
        Self::new(factors).map_err(|e| bad(&e.to_string()))
    }
}
