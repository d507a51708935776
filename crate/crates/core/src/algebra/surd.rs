use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exact number `a + b·√r` with rational `a`, `b` and a fixed positive integer `r`.
///
/// Used to compare bounds that carry half-integer powers of `q` without
/// floating point: the sign of `a + b√r` is decided by comparing `a²` with `b²r`.
#[derive(Clone, PartialEq, Eq)]
pub struct QuadSurd {
    rational: BigRational,
    irrational: BigRational,
    radicand: BigInt,
}

impl QuadSurd {
    pub fn new(rational: BigRational, irrational: BigRational, radicand: BigInt) -> Self {
        assert!(radicand.is_positive(), "radicand must be positive");
        QuadSurd {
            rational,
            irrational,
            radicand,
        }
    }

    pub fn rational(value: BigRational, radicand: &BigInt) -> Self {
        QuadSurd::new(value, BigRational::zero(), radicand.clone())
    }

    pub fn integer(value: BigInt, radicand: &BigInt) -> Self {
        QuadSurd::rational(BigRational::from_integer(value), radicand)
    }

    /// `r^(half_exponent / 2)` for any integer `half_exponent`.
    pub fn half_power(radicand: &BigInt, half_exponent: i64) -> Self {
        let whole = half_exponent.div_euclid(2);
        let odd = half_exponent.rem_euclid(2) == 1;
        let base = BigRational::from_integer(radicand.clone());
        let power = if whole >= 0 {
            num_traits::pow(base, whole as usize)
        } else {
            num_traits::pow(base.recip(), (-whole) as usize)
        };
        if odd {
            QuadSurd::new(BigRational::zero(), power, radicand.clone())
        } else {
            QuadSurd::new(power, BigRational::zero(), radicand.clone())
        }
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.rational
    }

    pub fn irrational_part(&self) -> &BigRational {
        &self.irrational
    }

    pub fn radicand(&self) -> &BigInt {
        &self.radicand
    }

    pub fn signum(&self) -> Ordering {
        let a = &self.rational;
        let b = &self.irrational;
        let zero = BigRational::zero();
        match (a.cmp(&zero), b.cmp(&zero)) {
            (Ordering::Equal, s) | (s, Ordering::Equal) => s,
            (Ordering::Greater, Ordering::Greater) => Ordering::Greater,
            (Ordering::Less, Ordering::Less) => Ordering::Less,
            (Ordering::Greater, Ordering::Less) => {
                let b2r = b * b * BigRational::from_integer(self.radicand.clone());
                (a * a).cmp(&b2r)
            }
            (Ordering::Less, Ordering::Greater) => {
                let b2r = b * b * BigRational::from_integer(self.radicand.clone());
                b2r.cmp(&(a * a))
            }
        }
    }

    pub fn abs(&self) -> QuadSurd {
        if self.signum() == Ordering::Less {
            -self
        } else {
            self.clone()
        }
    }

    pub fn scale(&self, c: &BigRational) -> QuadSurd {
        QuadSurd::new(&self.rational * c, &self.irrational * c, self.radicand.clone())
    }

    pub fn to_f64(&self) -> f64 {
        let a = self.rational.to_f64().unwrap_or(f64::NAN);
        let b = self.irrational.to_f64().unwrap_or(f64::NAN);
        let r = self.radicand.to_f64().unwrap_or(f64::NAN);
        a + b * r.sqrt()
    }

    fn check(&self, other: &QuadSurd) {
        assert_eq!(self.radicand, other.radicand, "surds over different radicands");
    }
}

impl PartialOrd for QuadSurd {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QuadSurd {
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).signum()
    }
}

impl<'a> Add<&'a QuadSurd> for &'a QuadSurd {
    type Output = QuadSurd;
    fn add(self, rhs: &'a QuadSurd) -> QuadSurd {
        self.check(rhs);
        QuadSurd::new(
            &self.rational + &rhs.rational,
            &self.irrational + &rhs.irrational,
            self.radicand.clone(),
        )
    }
}

impl<'a> Sub<&'a QuadSurd> for &'a QuadSurd {
    type Output = QuadSurd;
    fn sub(self, rhs: &'a QuadSurd) -> QuadSurd {
        self + &-rhs
    }
}

impl<'a> Mul<&'a QuadSurd> for &'a QuadSurd {
    type Output = QuadSurd;
    fn mul(self, rhs: &'a QuadSurd) -> QuadSurd {
        self.check(rhs);
        let r = BigRational::from_integer(self.radicand.clone());
        QuadSurd::new(
            &self.rational * &rhs.rational + &self.irrational * &rhs.irrational * r,
            &self.rational * &rhs.irrational + &self.irrational * &rhs.rational,
            self.radicand.clone(),
        )
    }
}

impl Neg for &QuadSurd {
    type Output = QuadSurd;
    fn neg(self) -> QuadSurd {
        QuadSurd::new(-&self.rational, -&self.irrational, self.radicand.clone())
    }
}

impl fmt::Debug for QuadSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for QuadSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.irrational.is_zero() {
            return write!(f, "{}", self.rational);
        }
        if self.rational.is_zero() {
            return write!(f, "{}*sqrt({})", self.irrational, self.radicand);
        }
        write!(f, "{} + {}*sqrt({})", self.rational, self.irrational, self.radicand)
    }
}

impl QuadSurd {
    pub fn one(radicand: &BigInt) -> Self {
        QuadSurd::rational(BigRational::one(), radicand)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigInt {
        BigInt::from(n)
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(q(n), q(d))
    }

    #[test]
    fn half_powers() {
        let r = q(9);
        assert_eq!(QuadSurd::half_power(&r, 2).to_f64(), 9.0);
        assert!((QuadSurd::half_power(&r, 3).to_f64() - 27.0).abs() < 1e-9);
        assert!((QuadSurd::half_power(&r, -3).to_f64() - 1.0 / 27.0).abs() < 1e-12);
        assert_eq!(QuadSurd::half_power(&r, 0), QuadSurd::one(&r));
    }

    #[test]
    fn sign_decisions_are_exact() {
        let r = q(2);
        // 1.4142 - sqrt(2) < 0 < 1.4143 - sqrt(2)
        let lo = QuadSurd::new(rat(14142, 10000), rat(-1, 1), r.clone());
        let hi = QuadSurd::new(rat(14143, 10000), rat(-1, 1), r.clone());
        assert_eq!(lo.signum(), Ordering::Less);
        assert_eq!(hi.signum(), Ordering::Greater);
        // 3 - sqrt(9) == 0
        let zero = QuadSurd::new(rat(3, 1), rat(-1, 1), q(9));
        assert_eq!(zero.signum(), Ordering::Equal);
    }

    #[test]
    fn product_expands_binomially() {
        let r = q(5);
        let s = QuadSurd::new(rat(1, 1), rat(1, 1), r.clone()); // 1 + sqrt5
        let sq = &s * &s; // 6 + 2 sqrt5
        assert_eq!(sq, QuadSurd::new(rat(6, 1), rat(2, 1), r));
    }
}
