//! Theta series of the checkerboard lattice `{x in Z^4 : sum x even}` and
//! its `(1,0,0,0)` coset, by brute-force enumeration.

use crate::exact::Rational;
use crate::par::{self, Execution};
use crate::series::QSeries;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Coset {
    Zero,
    Omega1,
}

/// A coset `M + shift` of `M = {x in Z^4 : sum x_i even}` with the standard
/// inner product.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LatticeSpec {
    pub coset: Coset,
}

impl LatticeSpec {
    pub const ROOT: LatticeSpec = LatticeSpec { coset: Coset::Zero };
    pub const OMEGA1: LatticeSpec = LatticeSpec {
        coset: Coset::Omega1,
    };

    pub fn shift(&self) -> [i64; 4] {
        match self.coset {
            Coset::Zero => [0; 4],
            Coset::Omega1 => [1, 0, 0, 0],
        }
    }

    /// Parity of `sum gamma_i` for members of the coset.
    fn parity(&self) -> i64 {
        self.shift().iter().sum::<i64>().rem_euclid(2)
    }
}

/// `sum_{gamma in M + shift, (gamma,gamma) < order} q^{(gamma,gamma)}`.
pub fn lattice_theta(spec: LatticeSpec, order: i64) -> QSeries {
    lattice_theta_with(spec, order, Execution::default())
}

pub fn lattice_theta_with(spec: LatticeSpec, order: i64, exec: Execution) -> QSeries {
    let len = order.max(0) as usize;
    let mut r = 0i64;
    while (r + 1) * (r + 1) < order {
        r += 1;
    }
    let width = (2 * r + 1) as usize;
    let parity = spec.parity();
    // Members of a coset of M are exactly the integer vectors with the
    // coset's coordinate-sum parity, so the shift only enters that way.
    let partials = par::map_indexed(exec, width, |i| {
        let a = i as i64 - r;
        let mut counts = vec![0i64; len];
        let na = a * a;
        for b in -r..=r {
            let nb = na + b * b;
            if nb >= order {
                continue;
            }
            for c in -r..=r {
                let nc = nb + c * c;
                if nc >= order {
                    continue;
                }
                for d in -r..=r {
                    let n = nc + d * d;
                    if n < order && (a + b + c + d).rem_euclid(2) == parity {
                        counts[n as usize] += 1;
                    }
                }
            }
        }
        counts
    });
    let mut total = vec![0i64; len];
    for p in partials {
        for (t, x) in total.iter_mut().zip(p) {
            *t += x;
        }
    }
    QSeries::new(
        0,
        total.into_iter().map(Rational::from_integer).collect(),
        order.max(0),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn anchors() {
        let t0 = lattice_theta(LatticeSpec::ROOT, 5);
        assert_eq!(t0.coeff(0), rat(1, 1));
        assert_eq!(t0.coeff(1), rat(0, 1));
        assert_eq!(t0.coeff(2), rat(24, 1));
        let t1 = lattice_theta(LatticeSpec::OMEGA1, 5);
        assert_eq!(t1.valuation(), Some(1));
        assert_eq!(t1.coeff(1), rat(8, 1));
        assert_eq!(t1.coeff(3), rat(32, 1));
    }

    #[test]
    fn sequential_matches_parallel() {
        let a = lattice_theta_with(LatticeSpec::OMEGA1, 30, Execution::Sequential);
        let b = lattice_theta_with(LatticeSpec::OMEGA1, 30, Execution::Parallel);
        assert_eq!(a.first_difference(&b), None);
    }
}
