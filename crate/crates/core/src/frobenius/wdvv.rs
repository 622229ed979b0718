//! WDVV associativity residuals
//! `F_abe eta^ef F_fcd - F_ade eta^ef F_fbc` over all coordinate quadruples.

use std::collections::HashMap;

use crate::error::Result;
use crate::frobenius::poly::SeriesPoly;
use crate::frobenius::potential::{invert, metric_from_potential, FrobeniusPotential};
use crate::frobenius::report::{Failure, IdentityReport};
use crate::par::{self, Execution};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct WdvvOptions {
    pub exec: Execution,
    /// Only evaluate quadruples with `b < d`; the rest follow from
    /// antisymmetry in `b <-> d`.
    pub skip_symmetric: bool,
}

/// Precomputed contractions for one potential at one truncation order.
pub struct WdvvSystem {
    dim: usize,
    order: i64,
    /// `P(ab, cd) = F_abe eta^ef F_fcd`, keyed by sorted pair indices.
    products: HashMap<(usize, usize), SeriesPoly>,
}

fn pair_index(dim: usize, a: usize, b: usize) -> usize {
    let (a, b) = if a <= b { (a, b) } else { (b, a) };
    a * dim + b
}

impl WdvvSystem {
    pub fn new(f: &FrobeniusPotential, order: i64, exec: Execution) -> Result<Self> {
        let n = f.dim();
        let g = metric_from_potential(f)?;
        let gi = invert(&g)?;
        let table: Vec<SeriesPoly> = f
            .third_derivative_table()
            .into_iter()
            .map(|p| p.truncate(order))
            .collect();
        let t = |a: usize, b: usize, c: usize| &table[(a * n + b) * n + c];

        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a..n).map(move |b| (a, b))).collect();
        // G_ab^f = sum_e F_abe eta^ef
        let raised: Vec<Vec<SeriesPoly>> = par::map_slice(exec, &pairs, |&(a, b)| {
            (0..n)
                .map(|ff| {
                    let mut acc = SeriesPoly::zero(n, order);
                    for (e, row) in gi.iter().enumerate() {
                        if !row[ff].is_zero() {
                            acc = acc.add(&t(a, b, e).scale(&row[ff]));
                        }
                    }
                    acc
                })
                .collect()
        });
        let mut keys = Vec::new();
        for i in 0..pairs.len() {
            for j in i..pairs.len() {
                keys.push((i, j));
            }
        }
        let values = par::map_slice(exec, &keys, |&(i, j)| {
            let (c, d) = pairs[j];
            let mut acc = SeriesPoly::zero(n, order);
            for (ff, gab) in raised[i].iter().enumerate() {
                if !gab.is_empty() {
                    acc = acc.add(&gab.mul(t(ff, c, d)));
                }
            }
            acc
        });
        let products = keys
            .into_iter()
            .zip(values)
            .map(|((i, j), v)| {
                let (a, b) = pairs[i];
                let (c, d) = pairs[j];
                ((pair_index(n, a, b), pair_index(n, c, d)), v)
            })
            .collect();
        Ok(Self {
            dim: n,
            order,
            products,
        })
    }

    fn product(&self, a: usize, b: usize, c: usize, d: usize) -> &SeriesPoly {
        let (x, y) = (pair_index(self.dim, a, b), pair_index(self.dim, c, d));
        let key = if x <= y { (x, y) } else { (y, x) };
        &self.products[&key]
    }

    /// The residual polynomial for `(a, b, c, d)`.
    pub fn residual(&self, a: usize, b: usize, c: usize, d: usize) -> SeriesPoly {
        self.product(a, b, c, d).sub(self.product(a, d, b, c))
    }

    pub fn order(&self) -> i64 {
        self.order
    }

    /// The lexicographically first quadruple with a nonzero residual.
    pub fn first_failure(&self, opts: WdvvOptions) -> Option<Failure> {
        let n = self.dim;
        let quads: Vec<[usize; 4]> = (0..n * n * n * n)
            .map(|k| [k / (n * n * n), (k / (n * n)) % n, (k / n) % n, k % n])
            .filter(|q| !opts.skip_symmetric || q[1] < q[3])
            .collect();
        par::find_map_first(opts.exec, &quads, |q| {
            let r = self.residual(q[0], q[1], q[2], q[3]);
            r.first_nonzero().map(|(exps, exponent, c)| {
                let mut indices: Vec<i64> = q.iter().map(|&x| x as i64).collect();
                indices.extend(exps.iter().map(|&x| x as i64));
                Failure {
                    indices,
                    exponent,
                    residual: c.to_fraction_string(),
                }
            })
        })
    }
}

/// WDVV check of `f` to `O(q^order)` over all `dim^4` quadruples. The
/// failure indices are the quadruple followed by the monomial exponents.
pub fn wdvv_residual(f: &FrobeniusPotential, order: i64) -> Result<IdentityReport> {
    wdvv_residual_with(f, order, WdvvOptions::default())
}

pub fn wdvv_residual_with(
    f: &FrobeniusPotential,
    order: i64,
    opts: WdvvOptions,
) -> Result<IdentityReport> {
    let sys = WdvvSystem::new(f, order, opts.exec)?;
    Ok(IdentityReport::from_failure(
        "wdvv",
        order,
        sys.first_failure(opts),
    ))
}
