use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

fn pascal() -> &'static Mutex<Vec<Vec<BigInt>>> {
    static ROWS: OnceLock<Mutex<Vec<Vec<BigInt>>>> = OnceLock::new();
    ROWS.get_or_init(|| Mutex::new(vec![vec![BigInt::one()]]))
}

/// `C(n, k)`, zero outside `0 <= k <= n`. Pascal rows are memoized on demand.
pub fn binomial(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let n = n as usize;
    let k = k as usize;
    let mut rows = pascal().lock().unwrap_or_else(|e| e.into_inner());
    while rows.len() <= n {
        let prev = rows.last().expect("row 0 is seeded");
        let mut next = Vec::with_capacity(prev.len() + 1);
        next.push(BigInt::one());
        for w in prev.windows(2) {
            next.push(&w[0] + &w[1]);
        }
        next.push(BigInt::one());
        rows.push(next);
    }
    rows[n][k].clone()
}

/// Checked form of [`binomial`] for signed input; a negative `n` is rejected.
pub fn try_binomial(n: i64, k: i64) -> Result<BigInt> {
    if n < 0 {
        return Err(Error::NegativeBinomial(n));
    }
    Ok(binomial(n as u64, k))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(binomial(4, 2), BigInt::from(6));
        assert_eq!(binomial(3, -1), BigInt::zero());
        assert_eq!(binomial(0, 0), BigInt::one());
        assert_eq!(binomial(2, 3), BigInt::zero());
    }

    #[test]
    fn negative_top_rejected() {
        assert_eq!(try_binomial(-1, 0), Err(Error::NegativeBinomial(-1)));
        assert_eq!(try_binomial(5, 2).unwrap(), BigInt::from(10));
    }

    #[test]
    fn large_row_matches_multiplicative_formula() {
        let n = 80u64;
        let mut expect = BigInt::one();
        for k in 0..=n {
            assert_eq!(binomial(n, k as i64), expect, "k = {k}");
            expect = expect * BigInt::from(n - k) / BigInt::from(k + 1);
        }
    }
}
