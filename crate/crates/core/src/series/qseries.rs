//! Truncated Laurent series in `q` over an exact field.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::exact::{Field, Rational};
use crate::par::{self, Execution};

/// Factor length above which multiplication switches to Karatsuba splitting.
pub const KARATSUBA_THRESHOLD: usize = 256;

/// Output length above which schoolbook products are computed in parallel.
const PARALLEL_MUL_THRESHOLD: usize = 48;

/// How a product is evaluated; the result never depends on it.
#[derive(Debug, Clone, Copy)]
pub struct MulConfig {
    pub karatsuba_threshold: usize,
    pub exec: Execution,
}

impl Default for MulConfig {
    fn default() -> Self {
        Self {
            karatsuba_threshold: KARATSUBA_THRESHOLD,
            exec: Execution::Parallel,
        }
    }
}

/// A Laurent series `sum c_n q^n + O(q^prec)`.
///
/// Coefficients are stored densely from the valuation up to (excluding) the
/// truncation order `prec`; exponents at or beyond `prec` are unknown, not
/// zero. The first stored coefficient is nonzero. A series that vanishes to
/// its precision stores nothing and has no valuation.
///
/// Equality (`==`) compares coefficients up to the smaller of the two
/// truncation orders, so it is not transitive across precisions.
#[derive(Clone)]
pub struct QSeries<F = Rational> {
    start: i64,
    coeffs: Vec<F>,
    prec: i64,
}

impl<F: Field> QSeries<F> {
    /// `sum coeffs[i] q^(start + i) + O(q^prec)`; coefficients at or beyond
    /// `prec` are dropped, missing ones below it are zero.
    pub fn new(start: i64, mut coeffs: Vec<F>, prec: i64) -> Self {
        let len = (prec - start).max(0) as usize;
        coeffs.truncate(len);
        coeffs.resize(len, F::zero());
        let mut s = Self {
            start: start.min(prec),
            coeffs,
            prec,
        };
        s.normalize();
        s
    }

    /// A series whose precision ends right after the given coefficients.
    pub fn from_coeffs(start: i64, coeffs: Vec<F>) -> Self {
        let prec = start + coeffs.len() as i64;
        Self::new(start, coeffs, prec)
    }

    pub fn from_fn(start: i64, prec: i64, f: impl FnMut(i64) -> F) -> Self {
        Self::new(start, (start..prec).map(f).collect(), prec)
    }

    pub fn zero(prec: i64) -> Self {
        Self {
            start: prec,
            coeffs: Vec::new(),
            prec,
        }
    }

    pub fn one(prec: i64) -> Self {
        Self::constant(F::one(), prec)
    }

    pub fn constant(c: F, prec: i64) -> Self {
        Self::monomial(c, 0, prec)
    }

    pub fn monomial(c: F, exp: i64, prec: i64) -> Self {
        if exp >= prec {
            return Self::zero(prec);
        }
        Self::new(exp, vec![c], prec)
    }

    fn normalize(&mut self) {
        let lead = self.coeffs.iter().position(|c| !c.is_zero());
        match lead {
            Some(0) => {}
            Some(k) => {
                self.coeffs.drain(..k);
                self.start += k as i64;
            }
            None => {
                self.coeffs.clear();
                self.start = self.prec;
            }
        }
    }

    /// Truncation order: coefficients are known for exponents `< prec`.
    pub fn prec(&self) -> i64 {
        self.prec
    }

    /// Lowest exponent with a nonzero coefficient, if any is known.
    pub fn valuation(&self) -> Option<i64> {
        (!self.coeffs.is_empty()).then_some(self.start)
    }

    /// Number of known coefficients beyond the leading one (`prec - valuation`).
    pub fn relative_prec(&self) -> i64 {
        self.prec - self.start
    }

    /// Whether the series vanishes up to its truncation order.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading_coeff(&self) -> Option<&F> {
        self.coeffs.first()
    }

    /// Coefficient of `q^n`, or `None` when `n` is beyond the precision.
    pub fn try_coeff(&self, n: i64) -> Option<F> {
        if n >= self.prec {
            None
        } else if n < self.start {
            Some(F::zero())
        } else {
            Some(self.coeffs[(n - self.start) as usize].clone())
        }
    }

    /// Coefficient of `q^n`.
    ///
    /// # Panics
    /// When `n >= prec`.
    pub fn coeff(&self, n: i64) -> F {
        self.try_coeff(n)
            .unwrap_or_else(|| panic!("coefficient of q^{n} unknown beyond O(q^{})", self.prec))
    }

    fn coeff_ref(&self, n: i64) -> Option<&F> {
        if n < self.start || n >= self.prec {
            None
        } else {
            Some(&self.coeffs[(n - self.start) as usize])
        }
    }

    /// Nonzero terms `(exponent, coefficient)` in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &F)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.start + i as i64, c))
    }

    /// Stored coefficients, starting at the valuation.
    pub fn raw_coeffs(&self) -> &[F] {
        &self.coeffs
    }

    /// Lowers the truncation order to `min(prec, order)`.
    pub fn truncate(&self, order: i64) -> Self {
        if order >= self.prec {
            return self.clone();
        }
        let keep = (order - self.start).max(0) as usize;
        Self::new(
            self.start,
            self.coeffs[..keep.min(self.coeffs.len())].to_vec(),
            order,
        )
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> QSeries<G> {
        QSeries::new(self.start, self.coeffs.iter().map(f).collect(), self.prec)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        self.combine(rhs, |a, b| a.plus(b), |b| b.clone())
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.combine(rhs, |a, b| a.minus(b), |b| b.negated())
    }

    fn combine(&self, rhs: &Self, both: impl Fn(&F, &F) -> F, only_rhs: impl Fn(&F) -> F) -> Self {
        let prec = self.prec.min(rhs.prec);
        let start = self.start.min(rhs.start).min(prec);
        let coeffs = (start..prec)
            .map(|n| match (self.coeff_ref(n), rhs.coeff_ref(n)) {
                (Some(a), Some(b)) => both(a, b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => only_rhs(b),
                (None, None) => F::zero(),
            })
            .collect();
        Self::new(start, coeffs, prec)
    }

    pub fn neg(&self) -> Self {
        Self {
            start: self.start,
            coeffs: self.coeffs.iter().map(F::negated).collect(),
            prec: self.prec,
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(self.prec);
        }
        Self {
            start: self.start,
            coeffs: self.coeffs.iter().map(|x| x.times(c)).collect(),
            prec: self.prec,
        }
    }

    pub fn scale_rational(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Self::zero(self.prec);
        }
        Self {
            start: self.start,
            coeffs: self.coeffs.iter().map(|x| x.scale_rational(r)).collect(),
            prec: self.prec,
        }
    }

    /// Adds a constant `c` (known exactly) to the series.
    pub fn add_constant(&self, c: &F) -> Self {
        self.add(&Self::constant(c.clone(), self.prec))
    }

    /// Multiplication by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            start: self.start + k,
            coeffs: self.coeffs.clone(),
            prec: self.prec + k,
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        self.mul_with(rhs, &MulConfig::default())
    }

    /// Product truncated at `min(prec_a + val_b, prec_b + val_a)`.
    pub fn mul_with(&self, rhs: &Self, cfg: &MulConfig) -> Self {
        let prec = match (self.valuation(), rhs.valuation()) {
            (Some(va), Some(vb)) => (self.prec + vb).min(rhs.prec + va),
            (None, Some(vb)) => self.prec + vb,
            (Some(va), None) => rhs.prec + va,
            (None, None) => self.prec + rhs.prec,
        };
        if self.is_zero() || rhs.is_zero() {
            return Self::zero(prec);
        }
        let start = self.start + rhs.start;
        let len = (prec - start) as usize;
        let a = &self.coeffs[..self.coeffs.len().min(len)];
        let b = &rhs.coeffs[..rhs.coeffs.len().min(len)];
        let coeffs = if a.len().min(b.len()) >= cfg.karatsuba_threshold {
            let mut full = karatsuba(a, b, cfg.karatsuba_threshold);
            full.truncate(len);
            full
        } else {
            schoolbook(a, b, len, cfg.exec)
        };
        Self::new(start, coeffs, prec)
    }

    pub fn square(&self) -> Self {
        self.mul(self)
    }

    /// Multiplicative inverse; the result has valuation `-valuation(self)`
    /// and the same relative precision.
    pub fn inv(&self) -> Result<Self> {
        let Some(lead) = self.leading_coeff() else {
            return Err(Error::ZeroDivisor { order: self.prec });
        };
        let lead_inv = lead.inverse()?;
        let len = self.coeffs.len();
        let mut out: Vec<F> = Vec::with_capacity(len);
        out.push(lead_inv.clone());
        for n in 1..len {
            let mut acc = F::zero();
            for k in 1..=n {
                acc.add_product(&self.coeffs[k], &out[n - k]);
            }
            out.push(acc.times(&lead_inv).negated());
        }
        let start = -self.start;
        Ok(Self::new(start, out, start + len as i64))
    }

    pub fn div(&self, rhs: &Self) -> Result<Self> {
        Ok(self.mul(&rhs.inv()?))
    }

    /// Integer power by repeated squaring; negative powers go through [`inv`](Self::inv).
    pub fn pow(&self, exp: i64) -> Result<Self> {
        let base = if exp < 0 { self.inv()? } else { self.clone() };
        let mut e = exp.unsigned_abs();
        let mut acc = Self::one(base.relative_prec().max(0));
        if base.is_zero() && e > 0 {
            // 0^e: precision grows with the power of the unknown tail.
            return Ok(Self::zero(base.prec.saturating_mul(e as i64)));
        }
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&b);
            }
            e >>= 1;
            if e > 0 {
                b = b.square();
            }
        }
        Ok(acc)
    }

    /// The operator `q d/dq`: the coefficient of `q^n` is multiplied by `n`.
    pub fn qdq(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| c.times(&F::from_integer(self.start + i as i64)))
            .collect();
        Self::new(self.start, coeffs, self.prec)
    }

    /// Substitution `q -> q^m`.
    pub fn substitute_power(&self, m: u32) -> Self {
        assert!(m >= 1, "substitution power must be positive");
        let m = m as i64;
        let prec = self.prec * m;
        if self.is_zero() {
            return Self::zero(prec);
        }
        let start = self.start * m;
        let mut coeffs = vec![F::zero(); (prec - start) as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * m as usize] = c.clone();
        }
        Self::new(start, coeffs, prec)
    }

    /// Substitution `q -> c q`: the coefficient of `q^n` is multiplied by `c^n`.
    pub fn scale_variable(&self, c: &F) -> Result<Self> {
        if self.is_zero() {
            return Ok(self.clone());
        }
        let mut power = if self.start >= 0 {
            field_pow(c, self.start as u64)
        } else {
            field_pow(&c.inverse()?, self.start.unsigned_abs())
        };
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for x in &self.coeffs {
            coeffs.push(x.times(&power));
            power = power.times(c);
        }
        Ok(Self::new(self.start, coeffs, self.prec))
    }

    fn unit_constant_check(&self) -> Result<()> {
        let c0 = self.try_coeff(0).unwrap_or_else(F::zero);
        if self.start != 0 || !c0.is_one() {
            return Err(Error::NotUnit {
                constant: c0.to_string(),
            });
        }
        Ok(())
    }

    /// `log(a)` for a power series with constant term 1, evaluated as the
    /// term-wise integral of `(q d/dq a) / a`.
    pub fn log_unit(&self) -> Result<Self> {
        self.unit_constant_check()?;
        let d = self.qdq().mul(&self.inv()?);
        let coeffs = (1..self.prec)
            .map(|n| d.coeff(n).scale_rational(&Rational::new(1, n)))
            .collect();
        Ok(Self::new(1, coeffs, self.prec))
    }

    /// `exp(g)` for a power series `g` without constant term.
    pub fn exp(&self) -> Result<Self> {
        if self.valuation().is_some_and(|v| v < 1) {
            let c = self.try_coeff(self.start).unwrap_or_else(F::zero);
            return Err(Error::InvalidArgument(format!(
                "exp needs zero constant term, got valuation {} ({c})",
                self.start
            )));
        }
        let len = self.prec.max(0) as usize;
        let g: Vec<F> = (0..len as i64).map(|k| self.coeff(k)).collect();
        let mut out = Vec::with_capacity(len);
        out.push(F::one());
        for n in 1..len {
            let mut acc = F::zero();
            for k in 1..=n {
                if !g[k].is_zero() {
                    acc.add_product(&g[k].times(&F::from_integer(k as i64)), &out[n - k]);
                }
            }
            out.push(acc.scale_rational(&Rational::new(1, n as i64)));
        }
        Ok(Self::new(0, out, self.prec.max(0)))
    }

    /// `a^r` for a unit with constant term 1, via `exp(r log a)`.
    pub fn pow_rational(&self, r: &Rational) -> Result<Self> {
        if let Some(e) = r.to_i64() {
            self.unit_constant_check()?;
            return self.pow(e);
        }
        self.log_unit()?.scale_rational(r).exp()
    }

    /// `(q d/dq a) / a` for any nonzero Laurent series.
    pub fn log_derivative(&self) -> Result<Self> {
        Ok(self.qdq().mul(&self.inv()?))
    }

    /// An `n`-th root `b` with `b^n = a` up to truncation. The leading
    /// coefficient root is the one found by [`Field::nth_root`] (the positive
    /// one over the rationals).
    pub fn nth_root(&self, n: u32) -> Result<Self> {
        assert!(n >= 1);
        let Some(v) = self.valuation() else {
            return Err(Error::ZeroDivisor { order: self.prec });
        };
        if v % n as i64 != 0 {
            return Err(Error::ValuationNotDivisible { valuation: v, n });
        }
        let lead = &self.coeffs[0];
        let root = lead
            .nth_root(n)
            .ok_or_else(|| Error::LeadingCoefficientNotPower {
                coeff: lead.to_string(),
                n,
            })?;
        let unit = self.shift(-v).scale(&lead.inverse()?);
        let unit_root = unit.pow_rational(&Rational::new(1, n as i64))?;
        Ok(unit_root.scale(&root).shift(v / n as i64))
    }

    /// First exponent below `min(prec)` where the series differ, with the
    /// difference `self - other` there.
    pub fn first_difference(&self, other: &Self) -> Option<(i64, F)> {
        let prec = self.prec.min(other.prec);
        let start = self.start.min(other.start);
        (start..prec).find_map(|n| {
            let a = self.coeff_ref(n);
            let b = other.coeff_ref(n);
            let d = match (a, b) {
                (Some(a), Some(b)) => a.minus(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.negated(),
                (None, None) => return None,
            };
            (!d.is_zero()).then_some((n, d))
        })
    }
}

fn field_pow<F: Field>(c: &F, mut e: u64) -> F {
    let mut acc = F::one();
    let mut b = c.clone();
    while e > 0 {
        if e & 1 == 1 {
            acc = acc.times(&b);
        }
        e >>= 1;
        if e > 0 {
            b = b.times(&b);
        }
    }
    acc
}

/// Schoolbook product restricted to the first `len` output coefficients.
fn schoolbook<F: Field>(a: &[F], b: &[F], len: usize, exec: Execution) -> Vec<F> {
    let coeff = |k: usize| {
        let mut acc = F::zero();
        let lo = k.saturating_sub(b.len() - 1);
        for i in lo..=k.min(a.len() - 1) {
            acc.add_product(&a[i], &b[k - i]);
        }
        acc
    };
    let exec = if len >= PARALLEL_MUL_THRESHOLD {
        exec
    } else {
        Execution::Sequential
    };
    par::map_indexed(exec, len, coeff)
}

/// Full product of two coefficient vectors by Karatsuba splitting, falling
/// back to schoolbook below `threshold`.
pub(crate) fn karatsuba<F: Field>(a: &[F], b: &[F], threshold: usize) -> Vec<F> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let out_len = a.len() + b.len() - 1;
    if a.len().min(b.len()) < threshold.max(2) {
        return schoolbook(a, b, out_len, Execution::Sequential);
    }
    let half = a.len().max(b.len()) / 2;
    let (a0, a1) = a.split_at(half.min(a.len()));
    let (b0, b1) = b.split_at(half.min(b.len()));
    let z0 = karatsuba(a0, b0, threshold);
    let z2 = karatsuba(a1, b1, threshold);
    let sum = |x: &[F], y: &[F]| -> Vec<F> {
        (0..x.len().max(y.len()))
            .map(|i| match (x.get(i), y.get(i)) {
                (Some(p), Some(q)) => p.plus(q),
                (Some(p), None) => p.clone(),
                (None, Some(q)) => q.clone(),
                (None, None) => F::zero(),
            })
            .collect()
    };
    let mut z1 = karatsuba(&sum(a0, a1), &sum(b0, b1), threshold);
    for (i, c) in z0.iter().enumerate() {
        z1[i] = z1[i].minus(c);
    }
    for (i, c) in z2.iter().enumerate() {
        z1[i] = z1[i].minus(c);
    }
    let mut out = vec![F::zero(); out_len];
    for (i, c) in z0.into_iter().enumerate() {
        out[i].add_assign_ref(&c);
    }
    for (i, c) in z1.into_iter().enumerate() {
        if i + half < out_len {
            out[i + half].add_assign_ref(&c);
        }
    }
    for (i, c) in z2.into_iter().enumerate() {
        out[i + 2 * half].add_assign_ref(&c);
    }
    out
}

impl<F: Field> PartialEq for QSeries<F> {
    fn eq(&self, other: &Self) -> bool {
        self.first_difference(other).is_none()
    }
}

impl<'a, F: Field> Add<&'a QSeries<F>> for &'a QSeries<F> {
    type Output = QSeries<F>;
    fn add(self, rhs: &'a QSeries<F>) -> QSeries<F> {
        QSeries::add(self, rhs)
    }
}

impl<'a, F: Field> Sub<&'a QSeries<F>> for &'a QSeries<F> {
    type Output = QSeries<F>;
    fn sub(self, rhs: &'a QSeries<F>) -> QSeries<F> {
        QSeries::sub(self, rhs)
    }
}

impl<'a, F: Field> Mul<&'a QSeries<F>> for &'a QSeries<F> {
    type Output = QSeries<F>;
    fn mul(self, rhs: &'a QSeries<F>) -> QSeries<F> {
        QSeries::mul(self, rhs)
    }
}

impl<F: Field> Neg for &QSeries<F> {
    type Output = QSeries<F>;
    fn neg(self) -> QSeries<F> {
        QSeries::neg(self)
    }
}

/// Renders one coefficient for a term, splitting off a leading minus sign.
pub(crate) fn term_parts(c: &str) -> (bool, String) {
    match c.strip_prefix('-') {
        Some(rest) if !rest.contains(' ') => (true, rest.to_string()),
        _ => (false, c.to_string()),
    }
}

pub(crate) fn write_term(out: &mut String, first: bool, coeff: &str, exp: i64) {
    let (neg, mag) = term_parts(coeff);
    if first {
        if neg {
            out.push('-');
        }
    } else {
        out.push_str(if neg { " - " } else { " + " });
    }
    let mag = if mag.contains(' ') || mag.contains('/') {
        format!("({mag})")
    } else {
        mag
    };
    match exp {
        0 => out.push_str(&mag),
        _ => {
            if mag != "1" {
                out.push_str(&mag);
            }
            out.push('q');
            if exp != 1 {
                out.push_str(&format!("^{exp}"));
            }
        }
    }
}

impl<F: Field> fmt::Display for QSeries<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        let mut first = true;
        for (n, c) in self.terms() {
            write_term(&mut out, first, &c.to_string(), n);
            first = false;
        }
        if !first {
            out.push_str(" + ");
        }
        out.push_str(&format!("O(q^{})", self.prec));
        f.write_str(&out)
    }
}

impl<F: Field> fmt::Debug for QSeries<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn s(start: i64, cs: &[i64], prec: i64) -> QSeries {
        QSeries::new(
            start,
            cs.iter().map(|&c| Rational::from_integer(c)).collect(),
            prec,
        )
    }

    #[test]
    fn normalization_strips_leading_zeros() {
        let a = s(-2, &[0, 0, 3, 1], 5);
        assert_eq!(a.valuation(), Some(0));
        assert_eq!(a.coeff(-1), Rational::zero());
        assert_eq!(a.coeff(4), Rational::zero());
        assert_eq!(a.try_coeff(5), None);
        let z = s(0, &[0, 0], 4);
        assert!(z.is_zero());
        assert_eq!(z.valuation(), None);
        assert_eq!(z.prec(), 4);
    }

    #[test]
    fn geometric_series() {
        let t = 20;
        let one_minus_q = s(0, &[1, -1], t);
        let geo = QSeries::from_fn(0, t, |_| Rational::one());
        assert_eq!(one_minus_q.mul(&geo), QSeries::one(t));
        assert_eq!(one_minus_q.mul(&geo).prec(), t);
        assert_eq!(one_minus_q.inv().unwrap(), geo);
    }

    #[test]
    fn additive_identity() {
        let f = s(-1, &[1, 0, 5, -7], 10);
        assert_eq!(f.add(&QSeries::zero(10)), f);
        assert_eq!(f.sub(&f).prec(), 10);
        assert!(f.sub(&f).is_zero());
    }

    #[test]
    fn precision_of_products() {
        let a = s(1, &[1, 2], 10);
        let b = s(-2, &[3], 4);
        let p = a.mul(&b);
        // min(10 + (-2), 4 + 1)
        assert_eq!(p.prec(), 5);
        assert_eq!(p.valuation(), Some(-1));
        assert_eq!(QSeries::<Rational>::zero(6).mul(&a).prec(), 7);
    }

    #[test]
    fn inverse_valuation_bookkeeping() {
        let unit = s(0, &[2, 1, 0, 3], 8);
        let a = unit.shift(1);
        let inv = a.inv().unwrap();
        assert_eq!(inv.valuation(), Some(-1));
        assert_eq!(inv, unit.inv().unwrap().shift(-1));
        assert_eq!(a.mul(&inv), QSeries::one(inv.relative_prec()));
        assert!(matches!(
            QSeries::<Rational>::zero(5).inv(),
            Err(Error::ZeroDivisor { order: 5 })
        ));
    }

    #[test]
    fn qdq_basics() {
        assert!(QSeries::constant(rat(5, 1), 10).qdq().is_zero());
        assert_eq!(s(-1, &[1], 5).qdq(), s(-1, &[-1], 5));
        // h = 1/3 q^-1 + ...: three applications scale by (-1)^3.
        let h = QSeries::new(
            -1,
            vec![rat(1, 3), Rational::zero(), Rational::zero(), rat(5, 3)],
            4,
        );
        assert_eq!(h.qdq().qdq().qdq().coeff(-1), rat(-1, 3));
        assert_eq!(h.qdq().qdq().qdq().coeff(2), rat(40, 3));
    }

    #[test]
    fn substitution() {
        let a = s(1, &[1, 1], 3);
        let b = a.substitute_power(3);
        assert_eq!(b, s(3, &[1, 0, 0, 1], 9));
        assert_eq!(b.prec(), 9);
    }

    #[test]
    fn roots() {
        let sq = s(0, &[1, 2, 1], 12);
        assert_eq!(sq.nth_root(2).unwrap(), s(0, &[1, 1], 12));
        let cube = s(0, &[1, 3, 3, 1], 12);
        assert_eq!(cube.nth_root(3).unwrap(), s(0, &[1, 1], 12));
        let off = s(2, &[9, 6, 1], 10);
        let r = off.nth_root(2).unwrap();
        assert_eq!(r, s(1, &[3, 1], 6));
        assert_eq!(r.prec(), 9);
        assert_eq!(
            s(1, &[4], 5).nth_root(2),
            Err(Error::ValuationNotDivisible { valuation: 1, n: 2 })
        );
        assert!(matches!(
            s(0, &[2], 5).nth_root(2),
            Err(Error::LeadingCoefficientNotPower { .. })
        ));
    }

    #[test]
    fn log_and_exp() {
        assert!(QSeries::<Rational>::one(10).log_unit().unwrap().is_zero());
        assert!(matches!(
            s(0, &[2, 1], 5).log_unit(),
            Err(Error::NotUnit { .. })
        ));
        // log(1 - q) = -sum q^n / n
        let l = s(0, &[1, -1], 8).log_unit().unwrap();
        for n in 1..8 {
            assert_eq!(l.coeff(n), rat(-1, n));
        }
        assert_eq!(l.exp().unwrap(), s(0, &[1, -1], 8));
        assert!(s(0, &[1], 5).exp().is_err());
    }

    #[test]
    fn twist_by_sign() {
        let a = s(0, &[1, 1, 1, 1], 4);
        assert_eq!(
            a.scale_variable(&rat(-1, 1)).unwrap(),
            s(0, &[1, -1, 1, -1], 4)
        );
        let b = s(-1, &[1, 1], 1);
        assert_eq!(
            b.scale_variable(&rat(2, 1)).unwrap(),
            QSeries::new(-1, vec![rat(1, 2), Rational::one()], 1)
        );
    }

    #[test]
    fn karatsuba_matches_schoolbook() {
        let a: Vec<Rational> = (0..37).map(|i| rat(i * i - 5, i + 1)).collect();
        let b: Vec<Rational> = (0..23).map(|i| rat(3 - i, 2)).collect();
        let k = karatsuba(&a, &b, 4);
        let sb = schoolbook(&a, &b, a.len() + b.len() - 1, Execution::Sequential);
        assert_eq!(k, sb);
        let x = QSeries::from_coeffs(0, a);
        let y = QSeries::from_coeffs(0, b);
        let cfg = MulConfig {
            karatsuba_threshold: 3,
            exec: Execution::Sequential,
        };
        assert_eq!(x.mul_with(&y, &cfg), x.mul(&y));
    }

    #[test]
    fn display() {
        assert_eq!(
            s(1, &[1, 0, 0, 1, 0, 0, 2], 8).to_string(),
            "q + q^4 + 2q^7 + O(q^8)"
        );
        let h = QSeries::new(
            -1,
            vec![rat(1, 3), Rational::zero(), Rational::zero(), rat(5, 3)],
            3,
        );
        assert_eq!(h.to_string(), "(1/3)q^-1 + (5/3)q^2 + O(q^3)");
        assert_eq!(s(0, &[-1, -2], 2).to_string(), "-1 - 2q + O(q^2)");
        assert_eq!(QSeries::<Rational>::zero(3).to_string(), "O(q^3)");
    }

    #[test]
    fn first_difference_reports_residual() {
        let a = s(0, &[1, 2, 3], 10);
        let b = s(0, &[1, 2, 4], 5);
        assert_eq!(a.first_difference(&b), Some((2, rat(-1, 1))));
        assert_eq!(a.first_difference(&a.truncate(2)), None);
    }
}
