//! Cyclotomic fields `Q(zeta_N)`.
//!
//! An element is a dense vector of `phi(N)` rational coefficients in the power
//! basis `1, z, ..., z^(phi(N)-1)`, always reduced modulo the `N`-th
//! cyclotomic polynomial. Reduction is canonical, so equality within one
//! order is coefficientwise.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::exact::{Field, Rational};

fn phi_cache() -> &'static RwLock<HashMap<u64, Arc<Vec<i64>>>> {
    static CACHE: OnceLock<RwLock<HashMap<u64, Arc<Vec<i64>>>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Coefficients (lowest degree first) of the `n`-th cyclotomic polynomial,
/// computed as `(x^n - 1) / prod_{d | n, d < n} Phi_d` by exact division.
pub fn cyclotomic_polynomial(n: u64) -> Arc<Vec<i64>> {
    assert!(n >= 1, "cyclotomic order must be positive");
    if let Some(p) = phi_cache().read().expect("poisoned").get(&n) {
        return Arc::clone(p);
    }
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
        let div = cyclotomic_polynomial(d);
        num = exact_div_monic(&num, &div);
    }
    let arc = Arc::new(num);
    phi_cache()
        .write()
        .expect("poisoned")
        .entry(n)
        .or_insert_with(|| Arc::clone(&arc));
    arc
}

fn exact_div_monic(num: &[i64], div: &[i64]) -> Vec<i64> {
    let dn = div.len() - 1;
    let mut rem = num.to_vec();
    let mut quot = vec![0i64; num.len() - dn];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dn];
        quot[i] = c;
        if c != 0 {
            for (j, d) in div.iter().enumerate() {
                rem[i + j] -= c * d;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    quot
}

/// Euler's totient.
pub fn euler_phi(n: u64) -> u64 {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

/// An element of `Q(zeta_N)` in canonical reduced form.
#[derive(Clone)]
pub struct CyclotomicNumber {
    order: u64,
    coeffs: Vec<Rational>,
}

impl CyclotomicNumber {
    /// The rational `r` viewed in `Q(zeta_N)`.
    pub fn from_rational_in(order: u64, r: Rational) -> Self {
        assert!(order >= 1);
        let mut coeffs = vec![Rational::zero(); euler_phi(order) as usize];
        coeffs[0] = r;
        Self { order, coeffs }
    }

    /// Reduces an arbitrary polynomial in `z` modulo `Phi_N`.
    pub fn from_polynomial(order: u64, poly: &[Rational]) -> Self {
        assert!(order >= 1);
        Self {
            order,
            coeffs: reduce(order, poly.to_vec()),
        }
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Whether this order is `Q` itself (orders 1 and 2).
    fn is_rational_order(&self) -> bool {
        self.coeffs.len() == 1
    }

    /// The value as a rational, when it lies in `Q`.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(Rational::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Embeds into `Q(zeta_M)` for a multiple `M` of the current order.
    pub fn embed(&self, target: u64) -> Result<Self> {
        if !target.is_multiple_of(self.order) {
            return Err(Error::OrderMismatch {
                left: self.order,
                right: target,
            });
        }
        let step = (target / self.order) as usize;
        let mut poly = vec![Rational::zero(); (self.coeffs.len() - 1) * step + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            poly[i * step] = c.clone();
        }
        Ok(Self::from_polynomial(target, &poly))
    }

    fn aligned(&self, rhs: &Self) -> Result<(Self, Self)> {
        if self.order == rhs.order {
            Ok((self.clone(), rhs.clone()))
        } else if self.is_rational_order() {
            Ok((
                Self::from_rational_in(rhs.order, self.coeffs[0].clone()),
                rhs.clone(),
            ))
        } else if rhs.is_rational_order() {
            Ok((
                self.clone(),
                Self::from_rational_in(self.order, rhs.coeffs[0].clone()),
            ))
        } else {
            Err(Error::OrderMismatch {
                left: self.order,
                right: rhs.order,
            })
        }
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self> {
        if self.order != rhs.order {
            let (a, b) = self.aligned(rhs)?;
            return a.checked_add(&b);
        }
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Self {
            order: self.order,
            coeffs,
        })
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self> {
        self.checked_add(&rhs.negate())
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        if self.order != rhs.order {
            let (a, b) = self.aligned(rhs)?;
            return a.checked_mul(&b);
        }
        if let Some(r) = rhs.as_rational() {
            return Ok(self.scale(&r));
        }
        if let Some(r) = self.as_rational() {
            return Ok(rhs.scale(&r));
        }
        let n = self.coeffs.len();
        let mut prod = vec![Rational::zero(); 2 * n - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += &(a * b);
                }
            }
        }
        Ok(Self {
            order: self.order,
            coeffs: reduce(self.order, prod),
        })
    }

    /// Multiplicative inverse by the extended Euclidean algorithm in `Q[z]`.
    pub fn checked_inv(&self) -> Result<Self> {
        if self.coeffs.iter().all(Rational::is_zero) {
            return Err(Error::DivisionByZero);
        }
        if let Some(r) = self.as_rational() {
            return Ok(Self::from_rational_in(self.order, r.recip()?));
        }
        let modulus: Vec<Rational> = cyclotomic_polynomial(self.order)
            .iter()
            .map(|&c| Rational::from_integer(c))
            .collect();
        let (mut r0, mut r1) = (modulus, trimmed(self.coeffs.clone()));
        let (mut s0, mut s1) = (vec![], vec![Rational::one()]);
        while !r1.is_empty() {
            let (q, r) = poly_divrem(&r0, &r1);
            let next_s = poly_sub(&s0, &poly_mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, next_s);
        }
        // r0 is a nonzero constant because Phi_N is irreducible.
        debug_assert_eq!(r0.len(), 1);
        let c = r0[0].recip()?;
        let s: Vec<Rational> = s0.iter().map(|x| x * &c).collect();
        Ok(Self::from_polynomial(self.order, &s))
    }

    pub fn negate(&self) -> Self {
        Self {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Self {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    pub fn pow(&self, exp: i64) -> Result<Self> {
        let base = if exp < 0 {
            self.checked_inv()?
        } else {
            self.clone()
        };
        let mut e = exp.unsigned_abs();
        let mut acc = Self::from_rational_in(self.order, Rational::one());
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.checked_mul(&b)?;
            }
            e >>= 1;
            if e > 0 {
                b = b.checked_mul(&b)?;
            }
        }
        Ok(acc)
    }
}

/// `zeta_N^k`, canonically reduced.
pub fn cyclotomic_root(order: u64, k: i64) -> CyclotomicNumber {
    assert!(order >= 1, "cyclotomic order must be positive");
    let k = k.rem_euclid(order as i64) as usize;
    let mut poly = vec![Rational::zero(); k + 1];
    poly[k] = Rational::one();
    CyclotomicNumber::from_polynomial(order, &poly)
}

fn reduce(order: u64, mut poly: Vec<Rational>) -> Vec<Rational> {
    let phi = cyclotomic_polynomial(order);
    let deg = phi.len() - 1;
    // x^N = 1 first: cheap index folding keeps the division short.
    let n = order as usize;
    if poly.len() > n {
        for i in n..poly.len() {
            let c = std::mem::take(&mut poly[i]);
            if !c.is_zero() {
                poly[i % n] += &c;
            }
        }
        poly.truncate(n);
    }
    for i in (deg..poly.len()).rev() {
        let c = std::mem::take(&mut poly[i]);
        if c.is_zero() {
            continue;
        }
        for (j, &p) in phi[..deg].iter().enumerate() {
            if p != 0 {
                poly[i - deg + j] -= &(&c * &Rational::from_integer(p));
            }
        }
    }
    poly.resize(deg, Rational::zero());
    poly
}

fn trimmed(mut p: Vec<Rational>) -> Vec<Rational> {
    while p.last().is_some_and(Rational::is_zero) {
        p.pop();
    }
    p
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += &(x * y);
        }
    }
    trimmed(out)
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trimmed(out)
}

/// Division with remainder by a nonzero trimmed divisor.
fn poly_divrem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut rem = trimmed(a.to_vec());
    if rem.len() < b.len() {
        return (vec![], rem);
    }
    let lead_inv = b.last().expect("nonzero divisor").recip().expect("trimmed");
    let mut quot = vec![Rational::zero(); rem.len() - b.len() + 1];
    for i in (0..quot.len()).rev() {
        let c = &rem[i + b.len() - 1] * &lead_inv;
        if !c.is_zero() {
            for (j, y) in b.iter().enumerate() {
                rem[i + j] -= &(&c * y);
            }
        }
        quot[i] = c;
    }
    rem.truncate(b.len() - 1);
    (trimmed(quot), trimmed(rem))
}

impl PartialEq for CyclotomicNumber {
    fn eq(&self, other: &Self) -> bool {
        if self.order == other.order {
            return self.coeffs == other.coeffs;
        }
        let common = self.order.lcm(&other.order);
        match (self.embed(common), other.embed(common)) {
            (Ok(a), Ok(b)) => a.coeffs == b.coeffs,
            _ => false,
        }
    }
}

impl Eq for CyclotomicNumber {}

impl fmt::Display for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (_, true) => write!(f, "z{}", self.order)?,
                (_, false) => write!(f, "{mag}*z{}", self.order)?,
            }
            if i > 1 {
                write!(f, "^{i}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} in Q(z{})", self.order)
    }
}

/// Operator-style arithmetic for use inside series. Rationals (orders 1 and
/// 2) mix with any order; two genuinely different orders panic, so callers
/// embed into a common order first. The `checked_*` methods report the
/// mismatch as an error instead.
impl Field for CyclotomicNumber {
    fn zero() -> Self {
        Self::from_rational_in(1, Rational::zero())
    }

    fn one() -> Self {
        Self::from_rational_in(1, Rational::one())
    }

    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    fn is_one(&self) -> bool {
        self.as_rational().is_some_and(|r| r.is_one())
    }

    fn plus(&self, rhs: &Self) -> Self {
        self.checked_add(rhs).expect("cyclotomic order mismatch")
    }

    fn minus(&self, rhs: &Self) -> Self {
        self.checked_sub(rhs).expect("cyclotomic order mismatch")
    }

    fn times(&self, rhs: &Self) -> Self {
        self.checked_mul(rhs).expect("cyclotomic order mismatch")
    }

    fn negated(&self) -> Self {
        self.negate()
    }

    fn inverse(&self) -> Result<Self> {
        self.checked_inv()
    }

    fn from_rational(r: &Rational) -> Self {
        Self::from_rational_in(1, r.clone())
    }

    fn nth_root(&self, n: u32) -> Option<Self> {
        let r = self.as_rational()?.nth_root(n)?;
        Some(Self::from_rational_in(self.order, r))
    }

    fn scale_rational(&self, r: &Rational) -> Self {
        self.scale(r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(*cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(*cyclotomic_polynomial(3), vec![1, 1, 1]);
        assert_eq!(*cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(72).len() - 1, 24);
        assert_eq!(euler_phi(72), 24);
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(9), 6);
    }

    #[test]
    fn trivial_order_root() {
        assert!(cyclotomic_root(1, 0).is_one());
        assert!(cyclotomic_root(1, 5).is_one());
    }

    #[test]
    fn minimal_polynomial_of_omega() {
        let z = cyclotomic_root(3, 1);
        let z2 = cyclotomic_root(3, 2);
        let one = CyclotomicNumber::from_rational_in(3, Rational::one());
        assert!(one.plus(&z).plus(&z2).is_zero());
        assert_eq!(
            z.plus(&z2),
            CyclotomicNumber::from_rational_in(3, rat(-1, 1))
        );
    }

    #[test]
    fn half_turn_is_minus_one() {
        assert_eq!(cyclotomic_root(72, 36).as_rational(), Some(rat(-1, 1)));
    }

    #[test]
    fn exponents_summing_to_order() {
        let p = cyclotomic_root(72, 8).times(&cyclotomic_root(72, 64));
        assert!(p.is_one());
        assert_eq!(
            cyclotomic_root(72, -1).times(&cyclotomic_root(72, 1)),
            CyclotomicNumber::one()
        );
    }

    #[test]
    fn roots_have_order_dividing_n() {
        for n in [1u64, 3, 9, 24, 72] {
            for k in 0..n as i64 {
                assert!(
                    cyclotomic_root(n, k).pow(n as i64).unwrap().is_one(),
                    "n={n} k={k}"
                );
            }
        }
    }

    #[test]
    fn inverse_of_one_plus_omega() {
        let a = CyclotomicNumber::one().plus(&cyclotomic_root(3, 1));
        let inv = a.checked_inv().unwrap();
        assert!(a.times(&inv).is_one());
        // 1 + w = -w^2, so the inverse is -w.
        assert_eq!(inv, cyclotomic_root(3, 1).negate());
    }

    #[test]
    fn errors() {
        assert_eq!(
            CyclotomicNumber::from_rational_in(9, Rational::zero()).checked_inv(),
            Err(Error::DivisionByZero)
        );
        let e = cyclotomic_root(3, 1).checked_add(&cyclotomic_root(9, 1));
        assert_eq!(e, Err(Error::OrderMismatch { left: 3, right: 9 }));
        assert!(cyclotomic_root(9, 1).embed(12).is_err());
    }

    #[test]
    fn embedding_identifies_roots() {
        let w = cyclotomic_root(3, 1).embed(72).unwrap();
        assert_eq!(w, cyclotomic_root(72, 24));
        assert_eq!(cyclotomic_root(3, 1), cyclotomic_root(72, 24));
        assert_ne!(cyclotomic_root(3, 1), cyclotomic_root(72, 48));
    }

    #[test]
    fn display() {
        assert_eq!(cyclotomic_root(3, 2).to_string(), "-z3 - 1");
        assert_eq!(CyclotomicNumber::zero().to_string(), "0");
        let x = cyclotomic_root(72, 5).scale(&rat(1, 3));
        assert_eq!(x.to_string(), "1/3*z72^5");
    }
}
