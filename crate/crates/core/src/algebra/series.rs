use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{binomial, AlgebraError};

/// Power series `c_0 + c_1 t + ... + c_T t^T` with exact integer coefficients,
/// truncated at order `T`.
///
/// Binary operations truncate to the smaller order of their operands.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntSeries {
    coeffs: Vec<BigInt>,
}

impl IntSeries {
    pub fn new(mut coeffs: Vec<BigInt>, order: usize) -> Self {
        coeffs.resize(order + 1, BigInt::zero());
        IntSeries { coeffs }
    }

    pub fn from_i64(coeffs: &[i64], order: usize) -> Self {
        IntSeries::new(coeffs.iter().map(|&c| BigInt::from(c)).collect(), order)
    }

    pub fn zero(order: usize) -> Self {
        IntSeries::new(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        IntSeries::new(vec![BigInt::one()], order)
    }

    /// `c * t^k`, or zero if `k` exceeds the order.
    pub fn monomial(c: BigInt, k: usize, order: usize) -> Self {
        let mut s = IntSeries::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    /// `1 + r t + r^2 t^2 + ...`, i.e. `1/(1 - r t)`.
    pub fn geometric(ratio: &BigInt, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut term = BigInt::one();
        for _ in 0..=order {
            coeffs.push(term.clone());
            term *= ratio;
        }
        IntSeries { coeffs }
    }

    /// Expansion of `(1 + λ t)^n` for any integer `n`.
    ///
    /// For `n < 0` the coefficient of `t^i` is `binom(i + |n| - 1, i) (-λ)^i`;
    /// `n = 0` gives the constant series `1`.
    pub fn binomial_pow(lambda: i64, n: i64, order: usize) -> Self {
        IntSeries::binomial_pow_dilated(lambda, n, 1, order)
    }

    /// Expansion of `(1 + λ t^step)^n`.
    pub fn binomial_pow_dilated(lambda: i64, n: i64, step: usize, order: usize) -> Self {
        assert!(step >= 1, "step must be positive");
        let mut s = IntSeries::zero(order);
        let lam = BigInt::from(lambda);
        let mut i = 0usize;
        while i * step <= order {
            let ii = i as i64;
            let c = if n >= 0 {
                binomial(n, ii) * pow_big(&lam, i)
            } else {
                binomial(ii - n - 1, ii) * pow_big(&-&lam, i)
            };
            s.coeffs[i * step] = c;
            i += 1;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `t^i`; panics past the truncation order.
    pub fn coeff(&self, i: usize) -> &BigInt {
        &self.coeffs[i]
    }

    pub fn get(&self, i: usize) -> Option<&BigInt> {
        self.coeffs.get(i)
    }

    pub fn truncate(&self, order: usize) -> IntSeries {
        assert!(order <= self.order(), "cannot extend a truncated series");
        IntSeries {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> IntSeries {
        IntSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Substitutes `t -> t^step`, keeping the order.
    pub fn dilate(&self, step: usize) -> IntSeries {
        let mut s = IntSeries::zero(self.order());
        for (i, c) in self.coeffs.iter().enumerate() {
            if i * step > self.order() {
                break;
            }
            s.coeffs[i * step] = c.clone();
        }
        s
    }

    /// Multiplicative inverse; needs constant term `±1`.
    pub fn inverse(&self) -> Result<IntSeries, AlgebraError> {
        let c0 = &self.coeffs[0];
        if c0.abs() != BigInt::one() {
            return Err(AlgebraError::NotInvertible(c0.to_string()));
        }
        let order = self.order();
        let mut inv = vec![BigInt::zero(); order + 1];
        inv[0] = c0.clone();
        for n in 1..=order {
            let mut acc = BigInt::zero();
            for k in 1..=n {
                acc += &self.coeffs[k] * &inv[n - k];
            }
            inv[n] = -acc * c0;
        }
        Ok(IntSeries { coeffs: inv })
    }

    /// `self^k` by square-and-multiply.
    pub fn pow(&self, mut k: u64) -> IntSeries {
        let mut acc = IntSeries::one(self.order());
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            k >>= 1;
        }
        acc
    }

    /// `c_0 + ... + c_upto`.
    pub fn partial_sum(&self, upto: usize) -> BigInt {
        self.coeffs[..=upto.min(self.order())].iter().sum()
    }
}

fn pow_big(base: &BigInt, e: usize) -> BigInt {
    num_traits::pow(base.clone(), e)
}

impl<'a> Mul<&'a IntSeries> for &'a IntSeries {
    type Output = IntSeries;
    fn mul(self, rhs: &'a IntSeries) -> IntSeries {
        let order = self.order().min(rhs.order());
        let mut out = vec![BigInt::zero(); order + 1];
        for (i, a) in self.coeffs.iter().take(order + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(order + 1 - i).enumerate() {
                out[i + j] += a * b;
            }
        }
        IntSeries { coeffs: out }
    }
}

impl<'a> Add<&'a IntSeries> for &'a IntSeries {
    type Output = IntSeries;
    fn add(self, rhs: &'a IntSeries) -> IntSeries {
        let order = self.order().min(rhs.order());
        IntSeries {
            coeffs: (0..=order).map(|i| &self.coeffs[i] + &rhs.coeffs[i]).collect(),
        }
    }
}

impl<'a> Sub<&'a IntSeries> for &'a IntSeries {
    type Output = IntSeries;
    fn sub(self, rhs: &'a IntSeries) -> IntSeries {
        let order = self.order().min(rhs.order());
        IntSeries {
            coeffs: (0..=order).map(|i| &self.coeffs[i] - &rhs.coeffs[i]).collect(),
        }
    }
}

impl Neg for &IntSeries {
    type Output = IntSeries;
    fn neg(self) -> IntSeries {
        IntSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Debug for IntSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} + O(t^{})", self.order() + 1)
    }
}

impl fmt::Display for IntSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = if c.is_negative() { ("-", -c) } else { ("+", c.clone()) };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{mag}")?,
                _ if mag.is_one() => {}
                _ => write!(f, "{mag}")?,
            }
            match i {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn s(c: &[i64], order: usize) -> IntSeries {
        IntSeries::from_i64(c, order)
    }

    #[test]
    fn cauchy_products() {
        assert_eq!(&s(&[1, 1], 2) * &s(&[1, -1], 2), s(&[1, 0, -1], 2));
        let g = IntSeries::geometric(&BigInt::from(3), 3);
        assert_eq!(&g * &s(&[1, -3], 3), IntSeries::one(3));
        // truncation follows the narrower operand
        assert_eq!((&s(&[1, 1], 5) * &s(&[1, 1], 2)).order(), 2);
    }

    #[test]
    fn binomial_expansions() {
        assert_eq!(IntSeries::binomial_pow(1, -2, 3), s(&[1, -2, 3, -4], 3));
        assert_eq!(IntSeries::binomial_pow(1, 0, 3), s(&[1, 0, 0, 0], 3));
        assert_eq!(IntSeries::binomial_pow(-1, -1, 3), s(&[1, 1, 1, 1], 3));
        assert_eq!(IntSeries::binomial_pow(2, 3, 4), s(&[1, 6, 12, 8, 0], 4));
        assert_eq!(IntSeries::binomial_pow_dilated(-1, 2, 2, 5), s(&[1, 0, -2, 0, 1, 0], 5));
    }

    #[test]
    fn inverse_and_power() {
        let one_plus_t = s(&[1, 1], 6);
        let inv = one_plus_t.inverse().unwrap();
        assert_eq!(inv, IntSeries::binomial_pow(1, -1, 6));
        assert_eq!(inv.pow(3), IntSeries::binomial_pow(1, -3, 6));
        assert!(s(&[2, 1], 3).inverse().is_err());
        assert_eq!(s(&[-1, 1], 3).inverse().unwrap(), s(&[-1, -1, -1, -1], 3));
    }

    #[test]
    fn display() {
        assert_eq!(s(&[1, 0, -1, 3], 3).to_string(), "1 - t^2 + 3t^3");
        assert_eq!(IntSeries::zero(2).to_string(), "0");
    }

    proptest! {
        #[test]
        fn binomial_pow_inverse_pair(lambda in -5i64..=5, n in 0i64..=10) {
            let order = 12;
            let prod = &IntSeries::binomial_pow(lambda, n, order)
                * &IntSeries::binomial_pow(lambda, -n, order);
            prop_assert_eq!(prod, IntSeries::one(order));
        }

        #[test]
        fn square_and_multiply_matches_repeated_product(c in proptest::collection::vec(-4i64..=4, 1..5),
                                                        k in 0u64..7) {
            let base = s(&c, 8);
            let mut naive = IntSeries::one(8);
            for _ in 0..k {
                naive = &naive * &base;
            }
            prop_assert_eq!(base.pow(k), naive);
        }
    }
}
