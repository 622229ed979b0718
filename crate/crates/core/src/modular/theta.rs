//! Jacobi theta constants by direct lattice sums.

use crate::error::Result;
use crate::exact::Rational;
use crate::modular::eta::ceil_rational;
use crate::series::{PuiseuxSeries, QSeries};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Theta {
    Two,
    Three,
    Four,
}

impl Theta {
    pub const ALL: [Theta; 3] = [Theta::Two, Theta::Three, Theta::Four];

    pub fn index(self) -> u8 {
        match self {
            Theta::Two => 2,
            Theta::Three => 3,
            Theta::Four => 4,
        }
    }
}

/// `theta_2 = sum q^{(m+1/2)^2} = 2 q^{1/4} sum_{m >= 0} q^{m(m+1)}`,
/// `theta_3 = sum q^{m^2}`, `theta_4 = sum (-1)^m q^{m^2}`, to `O(q^order)`.
pub fn theta_jacobi(which: Theta, order: i64) -> PuiseuxSeries {
    let (offset, scalar) = match which {
        Theta::Two => (Rational::new(1, 4), Rational::from_integer(2)),
        _ => (Rational::zero(), Rational::one()),
    };
    let prec = ceil_rational(&(Rational::from_integer(order) - &offset)).max(1);
    PuiseuxSeries::new(scalar, offset, theta_unit(which, prec)).expect("theta units are nonzero")
}

/// The unit part of [`theta_jacobi`] to relative precision `prec`.
pub fn theta_unit(which: Theta, prec: i64) -> QSeries {
    let len = prec.max(0) as usize;
    let mut c = vec![0i64; len];
    let mut m = 0usize;
    loop {
        let (e, w) = match which {
            Theta::Two => (m * (m + 1), 1),
            Theta::Three => (m * m, if m == 0 { 1 } else { 2 }),
            Theta::Four => (
                m * m,
                if m == 0 {
                    1
                } else if m % 2 == 1 {
                    -2
                } else {
                    2
                },
            ),
        };
        if e >= len {
            break;
        }
        c[e] += w;
        m += 1;
    }
    QSeries::new(
        0,
        c.into_iter().map(Rational::from_integer).collect(),
        prec.max(0),
    )
}

/// `X_i = q d/dq log theta_i` to `O(q^prec)`.
pub fn theta_log_derivative(which: Theta, prec: i64) -> Result<QSeries> {
    let th = theta_jacobi(which, prec);
    th.log_derivative()
}
