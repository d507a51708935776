use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Binomial coefficient with the counting convention used throughout:
/// `binomial(n, 0) = 1` for every `n` (in particular `binomial(-1, 0) = 1`),
/// and zero whenever `k < 0` or `k > n`.
///
/// This is deliberately not the generalized binomial: a negative top with
/// positive `k` yields zero.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    if k == 0 {
        return BigInt::one();
    }
    if n < k {
        return BigInt::zero();
    }
    binomial_u(n as u64, k as u64)
}

pub fn binomial_u(n: u64, k: u64) -> BigInt {
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

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conventions() {
        assert_eq!(binomial(-1, 0), BigInt::one());
        assert_eq!(binomial(0, 1), BigInt::zero());
        assert_eq!(binomial(-1, 1), BigInt::zero());
        assert_eq!(binomial(5, -1), BigInt::zero());
        assert_eq!(binomial(6, 3), BigInt::from(20));
        assert_eq!(binomial_u(52, 5), BigInt::from(2_598_960));
        assert_eq!(factorial(5), BigInt::from(120));
    }

    #[test]
    fn pascal() {
        for n in 1..20i64 {
            for k in 1..=n {
                assert_eq!(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
            }
        }
    }
}
