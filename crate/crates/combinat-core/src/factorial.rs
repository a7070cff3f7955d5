//! Memoized factorials and falling factorials.

use num_bigint::BigInt;
use num_traits::One;
use std::cell::RefCell;

thread_local! {
    // Growable factorial table. Thread-local rather than locked: every thread
    // rebuilds the same deterministic values, so results never depend on
    // which thread computed them or in what order.
    static FACTORIALS: RefCell<Vec<BigInt>> = RefCell::new(vec![BigInt::one()]);
}

/// `n!` exactly, memoized in a growable per-thread table.
pub fn factorial(n: usize) -> BigInt {
    FACTORIALS.with(|cell| {
        let mut table = cell.borrow_mut();
        while table.len() <= n {
            let next = table.last().expect("table never empty") * BigInt::from(table.len());
            table.push(next);
        }
        table[n].clone()
    })
}

/// Falling factorial `n·(n−1)···(n−r+1)` with `r` factors, for any integer
/// `n` (negative allowed). `r = 0` gives the empty product 1.
pub fn falling_factorial(n: &BigInt, r: usize) -> BigInt {
    let mut acc = BigInt::one();
    for t in 0..r {
        acc *= n - BigInt::from(t);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn test_factorial_small_values() {
        let expected: [u64; 8] = [1, 1, 2, 6, 24, 120, 720, 5040];
        for (n, &e) in expected.iter().enumerate() {
            assert_eq!(factorial(n), BigInt::from(e));
        }
    }

    #[test]
    fn test_factorial_large_is_exact() {
        // 20! fits in u64; 21! does not — check exactness past that boundary.
        assert_eq!(factorial(20), BigInt::from(2_432_902_008_176_640_000u64));
        assert_eq!(
            factorial(21),
            BigInt::from(2_432_902_008_176_640_000u64) * BigInt::from(21)
        );
    }

    #[test]
    fn test_falling_factorial_negative_base() {
        // (-1)(-2)(-3) = -6
        assert_eq!(falling_factorial(&BigInt::from(-1), 3), BigInt::from(-6));
        assert_eq!(falling_factorial(&BigInt::from(5), 0), BigInt::one());
        assert_eq!(falling_factorial(&BigInt::from(5), 3), BigInt::from(60));
    }
}
