//! Genus-zero potentials: a cubic classical part plus `q`-series blocks.
#![allow(clippy::needless_range_loop)]

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::frobenius::poly::{Exponents, SeriesPoly};
use crate::series::QSeries;

/// A potential in flat coordinates `t_0 .. t_k, t` with `q = e^t`.
///
/// The classical part is a rational polynomial in all coordinates; the
/// quantum part has `q`-series coefficients and no `t_0` or explicit `t`.
#[derive(Debug, Clone, PartialEq)]
pub struct FrobeniusPotential {
    names: Vec<String>,
    degrees: Vec<Rational>,
    unit: usize,
    special: usize,
    classical: BTreeMap<Exponents, Rational>,
    quantum: BTreeMap<Exponents, QSeries>,
    order: i64,
}

impl FrobeniusPotential {
    /// `names[unit]` is `t_0` and `names[special]` is `t = log q`.
    pub fn new(
        names: Vec<String>,
        degrees: Vec<Rational>,
        unit: usize,
        special: usize,
        order: i64,
    ) -> Self {
        assert_eq!(names.len(), degrees.len());
        assert!(unit < names.len() && special < names.len() && unit != special);
        Self {
            names,
            degrees,
            unit,
            special,
            classical: BTreeMap::new(),
            quantum: BTreeMap::new(),
            order,
        }
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn degrees(&self) -> &[Rational] {
        &self.degrees
    }

    pub fn unit_index(&self) -> usize {
        self.unit
    }

    pub fn special_index(&self) -> usize {
        self.special
    }

    pub fn order(&self) -> i64 {
        self.order
    }

    pub fn classical(&self) -> &BTreeMap<Exponents, Rational> {
        &self.classical
    }

    pub fn quantum(&self) -> &BTreeMap<Exponents, QSeries> {
        &self.quantum
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::UnknownCoordinate(name.to_string()))
    }

    /// Exponent vector from `(name, power)` pairs.
    pub fn monomial(&self, powers: &[(&str, u8)]) -> Result<Exponents> {
        let mut e = vec![0u8; self.dim()];
        for (name, p) in powers {
            e[self.index_of(name)?] += p;
        }
        Ok(e)
    }

    pub fn add_classical(&mut self, exps: Exponents, c: Rational) {
        assert_eq!(exps.len(), self.dim());
        let entry = self
            .classical
            .entry(exps.clone())
            .or_insert_with(Rational::zero);
        *entry += &c;
        if entry.is_zero() {
            self.classical.remove(&exps);
        }
    }

    /// Adds `c * f(q) * t^exps`; `exps` may not involve `t_0` or `t`.
    pub fn add_quantum(&mut self, exps: Exponents, c: &Rational, f: &QSeries) -> Result<()> {
        assert_eq!(exps.len(), self.dim());
        if exps[self.unit] > 0 || exps[self.special] > 0 {
            return Err(Error::InvalidArgument(format!(
                "quantum monomial {exps:?} involves {} or {}",
                self.names[self.unit], self.names[self.special]
            )));
        }
        let term = f.scale_rational(c).truncate(self.order);
        let sum = match self.quantum.remove(&exps) {
            Some(old) => old.add(&term),
            None => term,
        };
        if !sum.is_zero() {
            self.quantum.insert(exps, sum);
        }
        Ok(())
    }

    /// Replaces the coefficient of a quantum monomial.
    pub fn set_quantum(&mut self, exps: Exponents, f: QSeries) {
        let f = f.truncate(self.order);
        if f.is_zero() {
            self.quantum.remove(&exps);
        } else {
            self.quantum.insert(exps, f);
        }
    }

    /// Both parts as one polynomial with series coefficients.
    pub fn as_poly(&self) -> SeriesPoly {
        let mut p = SeriesPoly::zero(self.dim(), self.order);
        for (e, c) in &self.classical {
            p.add_rational_term(e.clone(), c.clone());
        }
        for (e, s) in &self.quantum {
            p.add_term(e.clone(), s.clone());
        }
        p
    }

    /// `d_a d_b d_c F` with `d_t` acting as `q d/dq` on series coefficients.
    pub fn third_derivative(&self, a: usize, b: usize, c: usize) -> Result<SeriesPoly> {
        for i in [a, b, c] {
            if i >= self.dim() {
                return Err(Error::UnknownCoordinate(format!("index {i}")));
            }
        }
        let s = Some(self.special);
        Ok(self
            .as_poly()
            .derivative(a, s)
            .derivative(b, s)
            .derivative(c, s))
    }

    pub fn third_derivative_named(&self, a: &str, b: &str, c: &str) -> Result<SeriesPoly> {
        self.third_derivative(self.index_of(a)?, self.index_of(b)?, self.index_of(c)?)
    }

    /// All `F_abc` indexed by `(a * dim + b) * dim + c`, computed once per
    /// sorted triple.
    pub fn third_derivative_table(&self) -> Vec<SeriesPoly> {
        let n = self.dim();
        let s = Some(self.special);
        let base = self.as_poly();
        let first: Vec<SeriesPoly> = (0..n).map(|a| base.derivative(a, s)).collect();
        let mut sorted = BTreeMap::new();
        for a in 0..n {
            for b in a..n {
                let ab = first[a].derivative(b, s);
                for c in b..n {
                    sorted.insert((a, b, c), ab.derivative(c, s));
                }
            }
        }
        let mut out = Vec::with_capacity(n * n * n);
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let mut k = [a, b, c];
                    k.sort_unstable();
                    out.push(sorted[&(k[0], k[1], k[2])].clone());
                }
            }
        }
        out
    }
}

/// Symmetric rational matrix.
pub type MetricMatrix = Vec<Vec<Rational>>;

/// `eta_ab = d_0 d_a d_b F`, which must be constant and nondegenerate.
pub fn metric_from_potential(f: &FrobeniusPotential) -> Result<MetricMatrix> {
    let n = f.dim();
    let s = Some(f.special_index());
    let d0 = f.as_poly().derivative(f.unit_index(), s);
    let mut g = vec![vec![Rational::zero(); n]; n];
    for a in 0..n {
        let da = d0.derivative(a, s);
        for b in a..n {
            let v = da
                .derivative(b, s)
                .as_constant()
                .ok_or(Error::NonConstantMetric { row: a, col: b })?;
            g[a][b] = v.clone();
            g[b][a] = v;
        }
    }
    if determinant(&g).is_zero() {
        return Err(Error::DegenerateMetric);
    }
    Ok(g)
}

/// Exact determinant by Gaussian elimination over Q.
pub fn determinant(m: &MetricMatrix) -> Rational {
    let n = m.len();
    let mut a = m.clone();
    let mut det = Rational::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return Rational::zero();
        };
        if p != col {
            a.swap(p, col);
            det = -det;
        }
        let pivot = a[col][col].clone();
        det *= &pivot;
        let inv = pivot.recip().expect("nonzero pivot");
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let factor = &a[r][col] * &inv;
            for c in col..n {
                let sub = &factor * &a[col][c];
                a[r][c] -= &sub;
            }
        }
    }
    det
}

/// Exact inverse by Gauss-Jordan elimination.
pub fn invert(m: &MetricMatrix) -> Result<MetricMatrix> {
    let n = m.len();
    let mut a: Vec<Vec<Rational>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| {
                if i == j {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            }));
            r
        })
        .collect();
    for col in 0..n {
        let p = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .ok_or(Error::DegenerateMetric)?;
        a.swap(p, col);
        let inv = a[col][col].recip()?;
        for x in a[col].iter_mut() {
            *x *= &inv;
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let factor = a[r][col].clone();
            for c in 0..2 * n {
                let sub = &factor * &a[col][c];
                a[r][c] -= &sub;
            }
        }
    }
    Ok(a.into_iter().map(|r| r[n..].to_vec()).collect())
}
