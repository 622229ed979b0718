//! Euler grading: every monomial must have weighted degree 2.

use crate::exact::Rational;
use crate::frobenius::potential::FrobeniusPotential;
use crate::frobenius::report::{Failure, IdentityReport};

fn weighted_degree(f: &FrobeniusPotential, exps: &[u8]) -> Rational {
    exps.iter()
        .zip(f.degrees())
        .map(|(&e, d)| d * &Rational::from_integer(e as i64))
        .sum()
}

/// Checks `E F = 2 F` for `E = sum deg(t_i) t_i d_i`. The failure indices
/// are the exponents of the first offending monomial (classical part
/// first), the exponent is its lowest `q`-power.
pub fn euler_residual(f: &FrobeniusPotential) -> IdentityReport {
    let two = Rational::from_integer(2);
    let excess = |exps: &[u8]| &weighted_degree(f, exps) - &two;
    let classical = f.classical().iter().find_map(|(e, c)| {
        let x = excess(e);
        (!x.is_zero()).then(|| Failure {
            indices: e.iter().map(|&v| v as i64).collect(),
            exponent: 0,
            residual: (&x * c).to_fraction_string(),
        })
    });
    let failure = classical.or_else(|| {
        f.quantum().iter().find_map(|(e, s)| {
            let x = excess(e);
            let v = s.valuation()?;
            (!x.is_zero()).then(|| Failure {
                indices: e.iter().map(|&v| v as i64).collect(),
                exponent: v,
                residual: (&x * &s.coeff(v)).to_fraction_string(),
            })
        })
    });
    IdentityReport::from_failure("euler", f.order(), failure)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::series::QSeries;

    #[test]
    fn degree_breaking_monomial_fails() {
        let names = ["t0", "t1", "t4", "t"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        let mut f = FrobeniusPotential::new(
            names,
            vec![rat(1, 1), rat(2, 3), rat(1, 3), rat(0, 1)],
            0,
            3,
            5,
        );
        f.add_classical(vec![2, 0, 0, 1], rat(1, 2));
        f.add_classical(vec![1, 1, 1, 0], rat(1, 3));
        f.add_quantum(vec![0, 0, 6, 0], &rat(1, 720), &QSeries::one(5))
            .unwrap();
        assert!(euler_residual(&f).passed());
        f.add_quantum(
            vec![0, 3, 1, 0],
            &rat(1, 1),
            &QSeries::monomial(rat(1, 1), 2, 5),
        )
        .unwrap();
        let r = euler_residual(&f);
        let fl = r.failure.unwrap();
        assert_eq!(fl.indices, vec![0, 3, 1, 0]);
        assert_eq!(fl.exponent, 2);
        assert_eq!(fl.residual, "1/3");
    }
}
