//! Divisor sums and the quasi-modular series `f(q) = -1/24 + sum sigma(n) q^n`.

use std::sync::{OnceLock, RwLock};

use crate::exact::Rational;
use crate::series::QSeries;

fn table() -> &'static RwLock<Vec<u64>> {
    static TABLE: OnceLock<RwLock<Vec<u64>>> = OnceLock::new();
    // index 0 is a placeholder so that table[n] = sigma(n)
    TABLE.get_or_init(|| RwLock::new(vec![0]))
}

fn sigma_trial(n: u64, k: u32) -> u64 {
    let mut total = 0u64;
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            total += d.pow(k);
            let e = n / d;
            if e != d {
                total += e.pow(k);
            }
        }
        d += 1;
    }
    total
}

/// Sum of the positive divisors of `n`, memoized up to the largest `n` seen.
pub fn sigma(n: u64) -> u64 {
    assert!(n >= 1, "sigma is defined for n >= 1");
    if let Some(&v) = table().read().expect("poisoned").get(n as usize) {
        return v;
    }
    let mut t = table().write().expect("poisoned");
    // another writer may have extended the table meanwhile
    let from = t.len() as u64;
    let upto = n.max(from * 2);
    t.extend((from..=upto).map(|m| sigma_trial(m, 1)));
    t[n as usize]
}

/// `sum_{d | n} d^k` by trial division.
pub fn sigma_k(n: u64, k: u32) -> u64 {
    assert!(n >= 1, "sigma_k is defined for n >= 1");
    sigma_trial(n, k)
}

/// `f(q) = -1/24 + sum_{n >= 1} sigma(n) q^n + O(q^order)`.
pub fn f_series(order: i64) -> QSeries {
    assert!(order >= 1);
    QSeries::from_fn(0, order, |n| {
        if n == 0 {
            Rational::new(-1, 24)
        } else {
            Rational::from_integer(sigma(n as u64) as i64)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn small_values() {
        assert_eq!(sigma(1), 1);
        assert_eq!(sigma(6), 1 + 2 + 3 + 6);
        assert_eq!(sigma(10), 18);
        assert_eq!(sigma(10), 3 * sigma(5));
        assert_eq!(sigma(997), 998);
        assert_eq!(sigma_k(2, 3), 9);
        assert_eq!(sigma_k(6, 3), 1 + 8 + 27 + 216);
    }

    #[test]
    fn leading_coefficients_of_f() {
        let f = f_series(5);
        assert_eq!(f.coeff(0), rat(-1, 24));
        assert_eq!(f.coeff(1), rat(1, 1));
        assert_eq!(f.coeff(2), rat(3, 1));
        assert_eq!(f.prec(), 5);
    }

    #[test]
    fn concurrent_readers_agree() {
        let handles: Vec<_> = (0..4)
            .map(|t| std::thread::spawn(move || (1..2000u64).map(|n| sigma(n + t)).sum::<u64>()))
            .collect();
        let sums: Vec<u64> = handles.into_iter().map(|h| h.join().unwrap()).collect();
        for (t, s) in sums.iter().enumerate() {
            let expect: u64 = (1..2000u64).map(|n| sigma_trial(n + t as u64, 1)).sum();
            assert_eq!(*s, expect);
        }
    }
}
