use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use super::{prime_divisors, FieldCtx, FieldElem};

/// Univariate polynomial over the prime field `F_p`, ascending coefficients,
/// no trailing zeros. The zero polynomial has no coefficients and degree `None`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    p: u64,
    coeffs: Vec<u64>,
}

impl Poly {
    pub fn new(p: u64, mut coeffs: Vec<u64>) -> Self {
        for c in coeffs.iter_mut() {
            *c %= p;
        }
        let mut poly = Poly { p, coeffs };
        poly.trim();
        poly
    }

    /// Builds a polynomial from signed integers, reducing each into `[0, p)`.
    pub fn from_i64(p: u64, coeffs: &[i64]) -> Self {
        let reduced = coeffs
            .iter()
            .map(|&c| c.rem_euclid(p as i64) as u64)
            .collect();
        Poly::new(p, reduced)
    }

    pub fn zero(p: u64) -> Self {
        Poly { p, coeffs: Vec::new() }
    }

    pub fn constant(p: u64, c: u64) -> Self {
        Poly::new(p, vec![c])
    }

    pub fn one(p: u64) -> Self {
        Poly::constant(p, 1)
    }

    pub fn x(p: u64) -> Self {
        Poly::new(p, vec![0, 1])
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> u64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == 1
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| (self.coeff(i) + other.coeff(i)) % self.p)
            .collect();
        Poly::new(self.p, coeffs)
    }

    pub fn neg(&self) -> Poly {
        let coeffs = self
            .coeffs
            .iter()
            .map(|&c| (self.p - c) % self.p)
            .collect();
        Poly::new(self.p, coeffs)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: u64) -> Poly {
        let coeffs = self.coeffs.iter().map(|&a| a * (c % self.p) % self.p).collect();
        Poly::new(self.p, coeffs)
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero(self.p);
        }
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + a * b) % self.p;
            }
        }
        Poly::new(self.p, out)
    }

    /// Euclidean division; panics when `divisor` is zero.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let inv_lead = inv_mod(divisor.leading(), self.p);
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Poly::zero(self.p), self.clone());
        }
        let mut quot = vec![0u64; rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let c = rem[i] * inv_lead % self.p;
            if c == 0 {
                continue;
            }
            quot[i - dd] = c;
            for (j, &d) in divisor.coeffs.iter().enumerate() {
                let k = i - dd + j;
                rem[k] = (rem[k] + self.p - c * d % self.p) % self.p;
            }
        }
        (Poly::new(self.p, quot), Poly::new(self.p, rem))
    }

    pub fn rem(&self, divisor: &Poly) -> Poly {
        self.div_rem(divisor).1
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(inv_mod(self.leading(), self.p))
    }

    /// Monic greatest common divisor (zero if both inputs are zero).
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> Poly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| (i as u64 % self.p) * c % self.p)
            .collect();
        Poly::new(self.p, coeffs)
    }

    /// `gcd(f, f')` is constant.
    pub fn is_squarefree(&self) -> bool {
        if self.is_zero() {
            return false;
        }
        self.gcd(&self.derivative()).degree() == Some(0)
    }

    pub fn pow_mod(&self, mut e: u128, modulus: &Poly) -> Poly {
        let mut base = self.rem(modulus);
        let mut acc = Poly::one(self.p).rem(modulus);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(modulus);
            }
            base = base.mul(&base).rem(modulus);
            e >>= 1;
        }
        acc
    }

    /// Rabin's irreducibility test.
    pub fn is_irreducible(&self) -> bool {
        let d = match self.degree() {
            Some(0) | None => return false,
            Some(d) => d,
        };
        let x = Poly::x(self.p).rem(self);
        // frob[k] = x^(p^k) mod self
        let mut frob = Vec::with_capacity(d + 1);
        frob.push(x.clone());
        for k in 1..=d {
            let next = frob[k - 1].pow_mod(self.p as u128, self);
            frob.push(next);
        }
        if frob[d] != x {
            return false;
        }
        prime_divisors(d as u64).into_iter().all(|r| {
            let h = frob[d / r as usize].sub(&x);
            self.gcd(&h).degree() == Some(0)
        })
    }

    pub fn eval(&self, x: u64) -> u64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0u64, |acc, &c| (acc * (x % self.p) + c) % self.p)
    }

    /// Evaluates at an element of an extension of `F_p`.
    pub fn eval_at(&self, x: &FieldElem) -> FieldElem {
        let ctx = x.ctx();
        let mut acc = ctx.zero();
        for &c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + &ctx.from_u64(c);
        }
        acc
    }

    /// Reduction into the residue field `F_p[x]/(modulus)` described by `ctx`.
    pub fn reduce_into(&self, ctx: &Arc<FieldCtx>) -> FieldElem {
        ctx.from_poly(self)
    }

    /// Parses ascending comma-separated integer coefficients, e.g. `0,1,0,1`.
    pub fn parse(p: u64, text: &str) -> Result<Poly, String> {
        let mut coeffs = Vec::new();
        for part in text.split(',') {
            let part = part.trim();
            if part.is_empty() {
                return Err(format!("empty coefficient in '{text}'"));
            }
            let v: i64 = part
                .parse()
                .map_err(|_| format!("bad coefficient '{part}' in '{text}'"))?;
            coeffs.push(v);
        }
        Ok(Poly::from_i64(p, &coeffs))
    }

    /// Ascending comma-separated coefficients; the zero polynomial prints as `0`.
    pub fn to_coeff_string(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.coeffs
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// Polynomials order by degree, then coefficient by coefficient from the top.
impl Ord for Poly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

impl PartialOrd for Poly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[{}](", self.p)?;
        fmt::Display::fmt(self, f)?;
        write!(f, ")")
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (i, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => write!(f, "x")?,
                (1, c) => write!(f, "{c}x")?,
                (i, 1) => write!(f, "x^{i}")?,
                (i, c) => write!(f, "{c}x^{i}")?,
            }
        }
        Ok(())
    }
}

pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod_u64(a % p, p - 2, p)
}

pub(crate) fn pow_mod_u64(mut base: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    acc
}

/// All monic irreducible polynomials of degree exactly `d` over the prime
/// field of `ctx`, in increasing [`Poly`] order.
pub fn monic_irreducibles(ctx: &FieldCtx, d: usize) -> Vec<Poly> {
    assert_eq!(ctx.degree(), 1, "base field must be prime");
    assert!(d >= 1, "degree must be positive");
    let p = ctx.characteristic();
    let count = (p as u128).pow(d as u32);
    let mut out = Vec::new();
    let mut coeffs = vec![0u64; d + 1];
    coeffs[d] = 1;
    for idx in 0..count {
        let mut rest = idx;
        for c in coeffs.iter_mut().take(d) {
            *c = (rest % p as u128) as u64;
            rest /= p as u128;
        }
        let u = Poly::new(p, coeffs.clone());
        if u.is_irreducible() {
            out.push(u);
        }
    }
    out
}

/// Number of monic irreducibles of degree `d` over `F_q`, by Möbius inversion.
pub fn necklace_count(q: u64, d: u64) -> u128 {
    let mut total: i128 = 0;
    for e in 1..=d {
        if d % e != 0 {
            continue;
        }
        let mu = mobius(e);
        if mu != 0 {
            total += mu as i128 * (q as i128).pow((d / e) as u32);
        }
    }
    (total / d as i128) as u128
}

fn mobius(n: u64) -> i32 {
    let mut n = n;
    let mut sign = 1;
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            n /= d;
            if n % d == 0 {
                return 0;
            }
            sign = -sign;
        }
        d += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_irreducible(u: &Poly) -> bool {
        // no monic factor of degree 1..=deg/2
        let d = u.degree().unwrap();
        let p = u.characteristic();
        for k in 1..=d / 2 {
            let total = (p as u128).pow(k as u32);
            for idx in 0..total {
                let mut coeffs = vec![0u64; k + 1];
                coeffs[k] = 1;
                let mut rest = idx;
                for c in coeffs.iter_mut().take(k) {
                    *c = (rest % p as u128) as u64;
                    rest /= p as u128;
                }
                if u.rem(&Poly::new(p, coeffs)).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn irreducibles_over_f3() {
        let f3 = FieldCtx::prime(3).unwrap();
        let deg1 = monic_irreducibles(&f3, 1);
        assert_eq!(
            deg1,
            vec![Poly::new(3, vec![0, 1]), Poly::new(3, vec![1, 1]), Poly::new(3, vec![2, 1])]
        );
        let deg2 = monic_irreducibles(&f3, 2);
        assert_eq!(deg2.len(), 3);
        assert!(deg2.iter().all(brute_irreducible));
    }

    #[test]
    fn irreducible_counts_match_necklaces() {
        for &q in &[3u64, 5, 7] {
            let ctx = FieldCtx::prime(q).unwrap();
            for d in 1..=3usize {
                let list = monic_irreducibles(&ctx, d);
                assert_eq!(list.len() as u128, necklace_count(q, d as u64), "q={q} d={d}");
            }
        }
        assert_eq!(necklace_count(5, 2), 10);
        assert_eq!(necklace_count(3, 2), 3);
    }

    #[test]
    fn rabin_agrees_with_trial_division() {
        let p = 5;
        for idx in 0..(5u64.pow(4)) {
            let mut coeffs = vec![0u64; 5];
            coeffs[4] = 1;
            let mut rest = idx;
            for c in coeffs.iter_mut().take(4) {
                *c = rest % p;
                rest /= p;
            }
            let u = Poly::new(p, coeffs);
            assert_eq!(u.is_irreducible(), brute_irreducible(&u), "{u}");
        }
    }

    #[test]
    fn squarefree_detection() {
        assert!(Poly::new(3, vec![0, 1, 0, 1]).is_squarefree());
        assert!(!Poly::new(3, vec![0, 0, 1]).is_squarefree());
        // (x+1)^2 (x+2) over F_5
        let a = Poly::new(5, vec![1, 1]);
        let b = Poly::new(5, vec![2, 1]);
        assert!(!a.mul(&a).mul(&b).is_squarefree());
        assert!(a.mul(&b).is_squarefree());
    }

    #[test]
    fn division_identity() {
        let a = Poly::from_i64(7, &[3, -1, 4, 1, 5]);
        let b = Poly::from_i64(7, &[2, 6, 1]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(q.mul(&b).add(&r), a);
        assert!(r.degree().unwrap_or(0) < 2);
    }

    #[test]
    fn parse_and_print() {
        let f = Poly::parse(3, "0,1,0,1").unwrap();
        assert_eq!(f.to_string(), "x^3 + x");
        assert_eq!(f.to_coeff_string(), "0,1,0,1");
        assert_eq!(Poly::parse(3, "-1").unwrap(), Poly::constant(3, 2));
        assert!(Poly::parse(3, "1,,2").is_err());
        assert_eq!(Poly::zero(3).degree(), None);
    }

    #[test]
    fn ordering_is_degree_then_top_down() {
        let a = Poly::new(3, vec![2, 1]);
        let b = Poly::new(3, vec![0, 2]);
        let c = Poly::new(3, vec![0, 0, 1]);
        assert!(a < b && b < c);
    }
}
