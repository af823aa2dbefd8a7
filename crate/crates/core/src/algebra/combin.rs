//! Integer combinatorial coefficients.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Binomial coefficient with the usual extension to negative arguments:
/// zero when `k < 0`, and `(-1)^k * binom(k - n - 1, k)` when `n < 0`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    if n < 0 {
        let b = binomial(k - n - 1, k);
        return if k % 2 == 0 { b } else { -b };
    }
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

pub fn catalan(n: usize) -> BigInt {
    let n = n as i64;
    binomial(2 * n, n) / (n + 1)
}

/// Large Schröder numbers 1, 2, 6, 22, 90, ...
pub fn large_schroeder(n: usize) -> BigInt {
    (0..=n as i64)
        .map(|k| binomial(n as i64 + k, 2 * k) * catalan(k as usize))
        .sum()
}

/// Central Delannoy-style entry `D(m, n) = sum_k binom(m,k) binom(n,k) 2^k`.
pub fn delannoy(m: usize, n: usize) -> BigInt {
    (0..=m.min(n) as i64)
        .map(|k| binomial(m as i64, k) * binomial(n as i64, k) * (BigInt::one() << k as usize))
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_binomials() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(5, 7), BigInt::zero());
        assert_eq!(binomial(3, -1), BigInt::zero());
        assert_eq!(binomial(-1, 0), BigInt::one());
        assert_eq!(binomial(-1, 3), BigInt::from(-1));
        assert_eq!(binomial(-2, 2), BigInt::from(3));
    }

    #[test]
    fn catalan_and_schroeder_prefixes() {
        let c: Vec<_> = (0..8).map(catalan).collect();
        let expect: Vec<BigInt> = [1, 1, 2, 5, 14, 42, 132, 429].iter().map(|&v| v.into()).collect();
        assert_eq!(c, expect);
        let s: Vec<_> = (0..9).map(large_schroeder).collect();
        let expect: Vec<BigInt> = [1, 2, 6, 22, 90, 394, 1806, 8558, 41586]
            .iter()
            .map(|&v| v.into())
            .collect();
        assert_eq!(s, expect);
    }

    #[test]
    fn delannoy_diagonal() {
        let d: Vec<_> = (0..5).map(|n| delannoy(n, n)).collect();
        let expect: Vec<BigInt> = [1, 3, 13, 63, 321].iter().map(|&v| v.into()).collect();
        assert_eq!(d, expect);
    }
}
