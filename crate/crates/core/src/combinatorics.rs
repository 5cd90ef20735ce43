//! Exact evaluation of the combinatorial quantities the constraints are
//! built from.
//!
//! All functions are pure. Binomials with an out-of-range lower index are
//! zero, which is the convention every summation below relies on.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Largest `n` kept in the memoized Pascal triangle.
pub const TABLE_MAX_N: usize = 64;

fn pascal() -> &'static Vec<Vec<u64>> {
    static TABLE: OnceLock<Vec<Vec<u64>>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut rows: Vec<Vec<u64>> = Vec::with_capacity(TABLE_MAX_N + 1);
        for n in 0..=TABLE_MAX_N {
            let mut row = vec![1u64; n + 1];
            for k in 1..n {
                row[k] = rows[n - 1][k - 1] + rows[n - 1][k];
            }
            rows.push(row);
        }
        rows
    })
}

/// `C(n, k)` as a machine integer when `n <= 64`.
///
/// Returns `Some(0)` for `k < 0`, `k > n` or `n < 0`, and `None` only when
/// `n` is beyond the memoized table.
pub fn binomial_u64(n: i64, k: i64) -> Option<u64> {
    if n < 0 || k < 0 || k > n {
        return Some(0);
    }
    let (n, k) = (n as usize, k as usize);
    if n > TABLE_MAX_N {
        return None;
    }
    Some(pascal()[n][k])
}

/// `C(n, k)`; zero when `k < 0` or `k > n` (and, as a subset count, when `n < 0`).
pub fn binomial(n: i64, k: i64) -> BigInt {
    if let Some(v) = binomial_u64(n, k) {
        return BigInt::from(v);
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for t in 0..k {
        acc *= BigInt::from(n - t);
        acc /= BigInt::from(t + 1);
    }
    acc
}

fn krawtchouk_parity_sum(k: i64, n: i64, x: i64, odd: bool) -> BigInt {
    let start = if odd { 1 } else { 0 };
    let mut acc = BigInt::zero();
    let mut j = start;
    while j <= k {
        acc += binomial(x, j) * binomial(n - x, k - j);
        j += 2;
    }
    acc
}

/// Odd-`j` part `P_k^-(n; x) = Σ_{j odd} C(x, j) C(n - x, k - j)`.
pub fn krawtchouk_minus(k: i64, n: i64, x: i64) -> BigInt {
    krawtchouk_parity_sum(k, n, x, true)
}

/// Even-`j` part `P_k^+(n; x) = Σ_{j even} C(x, j) C(n - x, k - j)`.
pub fn krawtchouk_plus(k: i64, n: i64, x: i64) -> BigInt {
    krawtchouk_parity_sum(k, n, x, false)
}

/// Krawtchouk polynomial `P_k(n; x) = Σ_j (-1)^j C(x, j) C(n - x, k - j)`.
pub fn krawtchouk(k: i64, n: i64, x: i64) -> BigInt {
    krawtchouk_plus(k, n, x) - krawtchouk_minus(k, n, x)
}

/// Delsarte coefficient for constant-weight codes:
///
/// `q(k,i,n,w) = Σ_j (-1)^j C(k,j) C(w-k,i-j) C(n-w-k,i-j) / (C(w,i) C(n-w,i))`.
pub fn delsarte_q(k: i64, i: i64, n: i64, w: i64) -> Result<Rational> {
    if !(1 <= k && k <= w && 0 <= i && i <= w && i <= n - w) {
        return Err(Error::params(format!(
            "q(k={k}, i={i}, n={n}, w={w}) requires 1 <= k <= w, 0 <= i <= min(w, n - w)"
        )));
    }
    let mut num = BigInt::zero();
    for j in 0..=i {
        let term = binomial(k, j) * binomial(w - k, i - j) * binomial(n - w - k, i - j);
        if j % 2 == 0 {
            num += term;
        } else {
            num -= term;
        }
    }
    let den = binomial(w, i) * binomial(n - w, i);
    Ok(Rational::new(num, den))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    fn factorial(n: i64) -> BigInt {
        (1..=n).fold(BigInt::one(), |acc, t| acc * BigInt::from(t))
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        // direct factorial evaluation
        let expect = factorial(27) / (factorial(3) * factorial(24));
        assert_eq!(expect, BigInt::from(2925));
        assert_eq!(binomial(27, 3), expect);
        assert_eq!(binomial(4, 7), BigInt::zero());
        assert_eq!(binomial(4, -1), BigInt::zero());
        assert_eq!(binomial(100, 50), factorial(100) / (factorial(50) * factorial(50)));
    }

    #[test]
    fn binomial_table_matches_factorials() {
        for n in 0..=40i64 {
            for k in 0..=n {
                assert_eq!(binomial(n, k), factorial(n) / (factorial(k) * factorial(n - k)));
            }
        }
        assert_eq!(binomial_u64(64, 32), Some(1_832_624_140_942_590_534));
        assert_eq!(binomial_u64(65, 3), None);
    }

    #[test]
    fn krawtchouk_examples() {
        for n in 1..=12 {
            for k in 0..=n {
                assert_eq!(krawtchouk(k, n, 0), binomial(n, k));
            }
            for x in 0..=n {
                assert_eq!(krawtchouk(1, n, x), BigInt::from(n - 2 * x));
            }
        }
        // 1 - 6 + 3
        assert_eq!(krawtchouk(2, 5, 2), BigInt::from(-2));
    }

    #[test]
    fn krawtchouk_minus_example_coefficients() {
        assert_eq!(krawtchouk_minus(1, 27, 12), BigInt::from(12));
        assert_eq!(krawtchouk_minus(2, 27, 12), BigInt::from(180));
        assert_eq!(krawtchouk_minus(3, 27, 12), BigInt::from(1480));
        for k in 0..6 {
            assert_eq!(krawtchouk_minus(k, 9, 0), BigInt::zero());
        }
    }

    #[test]
    fn delsarte_q_values() {
        for (n, w) in [(8, 3), (12, 5), (27, 13)] {
            for k in 1..=w {
                assert_eq!(delsarte_q(k, 0, n, w).unwrap(), int(1));
            }
        }
        assert_eq!(delsarte_q(1, 2, 4, 2).unwrap(), int(-1));
        assert!(delsarte_q(0, 1, 8, 3).is_err());
        assert!(delsarte_q(4, 1, 8, 3).is_err());
        assert!(delsarte_q(1, 4, 8, 3).is_err());
    }

    #[test]
    fn delsarte_q_small_hand_value() {
        // q(1,1,6,3): j=0 term C(2,1)C(2,1)=4, j=1 term -C(1,1)C(2,0)C(2,0)=-1; den 3*3
        assert_eq!(delsarte_q(1, 1, 6, 3).unwrap(), frac(3, 9));
    }
}
