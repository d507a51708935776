//! Exact arithmetic: prime fields and their extensions, polynomials over a
//! prime field, truncated integer power series and quadratic surds.

mod binom;
mod field;
mod poly;
mod series;
mod surd;

pub use binom::{binomial, binomial_u, factorial};
pub use field::{field_arith, FieldCtx, FieldElem, FieldOp};
pub use poly::{monic_irreducibles, necklace_count, Poly};
pub use series::IntSeries;
pub use surd::QuadSurd;

use thiserror::Error;

/// Largest characteristic accepted; products of two residues must fit in a `u64`.
pub const MAX_CHARACTERISTIC: u64 = 1 << 31;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("characteristic 2 is not supported")]
    EvenCharacteristic,
    #[error("characteristic {0} exceeds the supported maximum")]
    CharacteristicTooLarge(u64),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("modulus must be monic and irreducible of degree {0}")]
    BadModulus(usize),
    #[error("field of order {0}^{1} is too large to index")]
    FieldTooLarge(u64, usize),
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    ContextMismatch,
    #[error("series with constant term {0} has no inverse over the integers")]
    NotInvertible(String),
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n % 2 == 0 {
        return false;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Distinct prime divisors of `n` in increasing order.
pub(crate) fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        let primes: Vec<u64> = (0..40).filter(|&n| is_prime(n)).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]);
    }

    #[test]
    fn divisors() {
        assert_eq!(prime_divisors(1), Vec::<u64>::new());
        assert_eq!(prime_divisors(12), vec![2, 3]);
        assert_eq!(prime_divisors(49), vec![7]);
    }
}
