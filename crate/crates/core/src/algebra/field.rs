use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use super::poly::inv_mod;
use super::{is_prime, AlgebraError, Poly, MAX_CHARACTERISTIC};

/// The finite field `F_p[x]/(modulus)` of order `p^n`, `p` an odd prime.
///
/// For `n = 1` the modulus is `x`, so elements are plain residues mod `p`.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldCtx {
    p: u64,
    modulus: Poly,
    order: u128,
}

impl FieldCtx {
    pub fn prime(p: u64) -> Result<Arc<FieldCtx>, AlgebraError> {
        check_characteristic(p)?;
        Ok(Arc::new(FieldCtx {
            p,
            modulus: Poly::x(p),
            order: p as u128,
        }))
    }

    /// `F_{p^n}` with the smallest monic irreducible modulus of degree `n`.
    pub fn extension(p: u64, n: usize) -> Result<Arc<FieldCtx>, AlgebraError> {
        check_characteristic(p)?;
        if n == 0 {
            return Err(AlgebraError::ZeroDegree);
        }
        if n == 1 {
            return FieldCtx::prime(p);
        }
        let order = checked_order(p, n)?;
        let mut coeffs = vec![0u64; n + 1];
        coeffs[n] = 1;
        for idx in 0..(p as u128).pow(n as u32) {
            let mut rest = idx;
            for c in coeffs.iter_mut().take(n) {
                *c = (rest % p as u128) as u64;
                rest /= p as u128;
            }
            let u = Poly::new(p, coeffs.clone());
            if u.is_irreducible() {
                return Ok(Arc::new(FieldCtx { p, modulus: u, order }));
            }
        }
        unreachable!("irreducible polynomials exist in every degree")
    }

    /// Residue field `F_p[x]/(modulus)`; the modulus must be monic irreducible.
    pub fn with_modulus(modulus: &Poly) -> Result<Arc<FieldCtx>, AlgebraError> {
        let p = modulus.characteristic();
        check_characteristic(p)?;
        let n = modulus.degree().unwrap_or(0);
        if n == 0 || !modulus.is_monic() || !modulus.is_irreducible() {
            return Err(AlgebraError::BadModulus(n));
        }
        let order = checked_order(p, n)?;
        Ok(Arc::new(FieldCtx {
            p,
            modulus: modulus.clone(),
            order,
        }))
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.modulus.degree().unwrap_or(1)
    }

    pub fn order(&self) -> u128 {
        self.order
    }

    pub fn modulus(&self) -> &Poly {
        &self.modulus
    }

    pub fn zero(self: &Arc<Self>) -> FieldElem {
        FieldElem {
            ctx: Arc::clone(self),
            coeffs: vec![0; self.degree()],
        }
    }

    pub fn one(self: &Arc<Self>) -> FieldElem {
        self.from_u64(1)
    }

    pub fn from_u64(self: &Arc<Self>, c: u64) -> FieldElem {
        let mut e = self.zero();
        e.coeffs[0] = c % self.p;
        e
    }

    pub fn from_i64(self: &Arc<Self>, c: i64) -> FieldElem {
        self.from_u64(c.rem_euclid(self.p as i64) as u64)
    }

    /// Image of a polynomial under `F_p[x] -> F_p[x]/(modulus)`.
    pub fn from_poly(self: &Arc<Self>, poly: &Poly) -> FieldElem {
        assert_eq!(poly.characteristic(), self.p, "characteristic mismatch");
        let r = poly.rem(&self.modulus);
        let mut e = self.zero();
        for (i, &c) in r.coeffs().iter().enumerate() {
            e.coeffs[i] = c;
        }
        e
    }

    /// Coefficient vector (ascending) for an element; values are reduced mod `p`.
    pub fn from_coeffs(self: &Arc<Self>, coeffs: &[u64]) -> FieldElem {
        self.from_poly(&Poly::new(self.p, coeffs.to_vec()))
    }

    /// Element with base-`p` digits of `index` as coefficients (constant term least significant).
    pub fn element(self: &Arc<Self>, index: u128) -> FieldElem {
        let mut e = self.zero();
        let mut rest = index;
        for c in e.coeffs.iter_mut() {
            *c = (rest % self.p as u128) as u64;
            rest /= self.p as u128;
        }
        e
    }

    pub fn elements(self: &Arc<Self>) -> impl Iterator<Item = FieldElem> + '_ {
        (0..self.order).map(move |i| self.element(i))
    }

    pub(crate) fn mul_raw(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let n = a.len();
        let p = self.p;
        if n == 1 {
            return vec![a[0] * b[0] % p];
        }
        let mut prod = vec![0u64; 2 * n - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % p;
            }
        }
        let m = self.modulus.coeffs();
        for i in (n..prod.len()).rev() {
            let c = prod[i];
            if c == 0 {
                continue;
            }
            prod[i] = 0;
            for j in 0..n {
                let k = i - n + j;
                prod[k] = (prod[k] + p - c * m[j] % p) % p;
            }
        }
        prod.truncate(n);
        prod
    }
}

impl fmt::Debug for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree() == 1 {
            write!(f, "F_{}", self.p)
        } else {
            write!(f, "F_{}^{} mod ({})", self.p, self.degree(), self.modulus)
        }
    }
}

fn check_characteristic(p: u64) -> Result<(), AlgebraError> {
    if !is_prime(p) {
        return Err(AlgebraError::NotPrime(p));
    }
    if p == 2 {
        return Err(AlgebraError::EvenCharacteristic);
    }
    if p >= MAX_CHARACTERISTIC {
        return Err(AlgebraError::CharacteristicTooLarge(p));
    }
    Ok(())
}

fn checked_order(p: u64, n: usize) -> Result<u128, AlgebraError> {
    (p as u128)
        .checked_pow(n as u32)
        .filter(|&o| o < (1u128 << 100))
        .ok_or(AlgebraError::FieldTooLarge(p, n))
}

#[derive(Clone, PartialEq, Eq)]
pub struct FieldElem {
    ctx: Arc<FieldCtx>,
    coeffs: Vec<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
    Div,
    Pow(u128),
}

/// Checked binary field operation. `Pow` ignores `b` beyond the context check.
pub fn field_arith(a: &FieldElem, b: &FieldElem, op: FieldOp) -> Result<FieldElem, AlgebraError> {
    match op {
        FieldOp::Add => a.try_add(b),
        FieldOp::Sub => a.try_sub(b),
        FieldOp::Mul => a.try_mul(b),
        FieldOp::Div => a.try_div(b),
        FieldOp::Pow(e) => {
            a.same_field(b)?;
            Ok(a.pow(e))
        }
    }
}

impl FieldElem {
    pub fn ctx(&self) -> &Arc<FieldCtx> {
        &self.ctx
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// Inverse of [`FieldCtx::element`]; also the canonical ordering key.
    pub fn index(&self) -> u128 {
        self.coeffs
            .iter()
            .rev()
            .fold(0u128, |acc, &c| acc * self.ctx.p as u128 + c as u128)
    }

    pub fn to_poly(&self) -> Poly {
        Poly::new(self.ctx.p, self.coeffs.clone())
    }

    fn same_field(&self, other: &FieldElem) -> Result<(), AlgebraError> {
        if Arc::ptr_eq(&self.ctx, &other.ctx) || self.ctx == other.ctx {
            Ok(())
        } else {
            Err(AlgebraError::ContextMismatch)
        }
    }

    pub fn try_add(&self, other: &FieldElem) -> Result<FieldElem, AlgebraError> {
        self.same_field(other)?;
        let p = self.ctx.p;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| (a + b) % p)
            .collect();
        Ok(FieldElem { ctx: Arc::clone(&self.ctx), coeffs })
    }

    pub fn try_sub(&self, other: &FieldElem) -> Result<FieldElem, AlgebraError> {
        self.try_add(&-other)
    }

    pub fn try_mul(&self, other: &FieldElem) -> Result<FieldElem, AlgebraError> {
        self.same_field(other)?;
        Ok(FieldElem {
            ctx: Arc::clone(&self.ctx),
            coeffs: self.ctx.mul_raw(&self.coeffs, &other.coeffs),
        })
    }

    pub fn try_div(&self, other: &FieldElem) -> Result<FieldElem, AlgebraError> {
        self.same_field(other)?;
        let inv = other.inverse().ok_or(AlgebraError::DivisionByZero)?;
        self.try_mul(&inv)
    }

    pub fn pow(&self, mut e: u128) -> FieldElem {
        let mut acc = self.ctx.one().coeffs;
        let mut base = self.coeffs.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.ctx.mul_raw(&acc, &base);
            }
            base = self.ctx.mul_raw(&base, &base);
            e >>= 1;
        }
        FieldElem { ctx: Arc::clone(&self.ctx), coeffs: acc }
    }

    pub fn inverse(&self) -> Option<FieldElem> {
        if self.is_zero() {
            return None;
        }
        if self.ctx.degree() == 1 {
            return Some(self.ctx.from_u64(inv_mod(self.coeffs[0], self.ctx.p)));
        }
        Some(self.pow(self.ctx.order - 2))
    }

    /// Euler's criterion: `0`, `1` for nonzero squares, `-1` otherwise.
    pub fn quadratic_character(&self) -> i8 {
        if self.is_zero() {
            return 0;
        }
        let r = self.pow((self.ctx.order - 1) / 2);
        if r == self.ctx.one() {
            1
        } else {
            -1
        }
    }

    /// Square root by Tonelli–Shanks; of `±r` the one with smaller [`index`](Self::index).
    pub fn sqrt(&self) -> Option<FieldElem> {
        match self.quadratic_character() {
            0 => return Some(self.clone()),
            -1 => return None,
            _ => {}
        }
        let ctx = &self.ctx;
        let one = ctx.one();
        let mut s = 0u32;
        let mut t = ctx.order - 1;
        while t % 2 == 0 {
            t /= 2;
            s += 1;
        }
        let z = (2..ctx.order)
            .map(|i| ctx.element(i))
            .find(|e| e.quadratic_character() == -1)
            .expect("odd-order fields contain non-squares");
        let mut m = s;
        let mut c = z.pow(t);
        let mut tt = self.pow(t);
        let mut r = self.pow(t.div_ceil(2));
        while tt != one {
            let mut i = 0;
            let mut probe = tt.clone();
            while probe != one {
                probe = &probe * &probe;
                i += 1;
            }
            let b = c.pow(1u128 << (m - i - 1));
            m = i;
            c = &b * &b;
            tt = &tt * &c;
            r = &r * &b;
        }
        let other = -&r;
        Some(if other.index() < r.index() { other } else { r })
    }
}

impl fmt::Debug for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.len() == 1 {
            write!(f, "{}", self.coeffs[0])
        } else {
            write!(f, "[{}]", self.to_poly())
        }
    }
}

impl<'a> Add<&'a FieldElem> for &'a FieldElem {
    type Output = FieldElem;
    fn add(self, rhs: &'a FieldElem) -> FieldElem {
        self.try_add(rhs).expect("field mismatch")
    }
}

impl<'a> Sub<&'a FieldElem> for &'a FieldElem {
    type Output = FieldElem;
    fn sub(self, rhs: &'a FieldElem) -> FieldElem {
        self.try_sub(rhs).expect("field mismatch")
    }
}

impl<'a> Mul<&'a FieldElem> for &'a FieldElem {
    type Output = FieldElem;
    fn mul(self, rhs: &'a FieldElem) -> FieldElem {
        self.try_mul(rhs).expect("field mismatch")
    }
}

impl Neg for &FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        let p = self.ctx.p;
        FieldElem {
            ctx: Arc::clone(&self.ctx),
            coeffs: self.coeffs.iter().map(|&c| (p - c) % p).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn small_prime_arithmetic() {
        let f3 = FieldCtx::prime(3).unwrap();
        let two = f3.from_u64(2);
        assert_eq!(field_arith(&two, &two, FieldOp::Add).unwrap(), f3.from_u64(1));
        assert_eq!(field_arith(&two, &two, FieldOp::Pow(2)).unwrap(), f3.one());
        assert_eq!(
            field_arith(&two, &f3.zero(), FieldOp::Div),
            Err(AlgebraError::DivisionByZero)
        );
    }

    #[test]
    fn gaussian_extension() {
        let f9 = FieldCtx::with_modulus(&Poly::new(3, vec![1, 0, 1])).unwrap();
        let x = f9.from_coeffs(&[0, 1]);
        assert_eq!(&x * &x, f9.from_u64(2));
        // smallest monic irreducible quadratic over F_3 is x^2 + 1
        let auto = FieldCtx::extension(3, 2).unwrap();
        assert_eq!(auto.modulus(), &Poly::new(3, vec![1, 0, 1]));
    }

    #[test]
    fn context_mismatch_is_reported() {
        let f3 = FieldCtx::prime(3).unwrap();
        let f5 = FieldCtx::prime(5).unwrap();
        assert_eq!(f3.one().try_add(&f5.one()), Err(AlgebraError::ContextMismatch));
    }

    #[test]
    fn construction_errors() {
        assert_eq!(FieldCtx::prime(2).unwrap_err(), AlgebraError::EvenCharacteristic);
        assert_eq!(FieldCtx::prime(9).unwrap_err(), AlgebraError::NotPrime(9));
        assert_eq!(FieldCtx::extension(3, 0).unwrap_err(), AlgebraError::ZeroDegree);
        assert!(FieldCtx::with_modulus(&Poly::new(3, vec![2, 0, 1])).is_err());
    }

    #[test]
    fn characters_and_roots() {
        let f3 = FieldCtx::prime(3).unwrap();
        assert_eq!(f3.zero().quadratic_character(), 0);
        assert_eq!(f3.one().quadratic_character(), 1);
        assert_eq!(f3.from_u64(2).quadratic_character(), -1);
        let f7 = FieldCtx::prime(7).unwrap();
        assert_eq!(f7.zero().sqrt(), Some(f7.zero()));
        assert_eq!(f7.one().sqrt(), Some(f7.one()));
        assert_eq!(f7.from_u64(2).sqrt(), Some(f7.from_u64(3)));
        assert_eq!(f7.from_u64(3).sqrt(), None);
    }

    #[test]
    fn character_matches_exhaustive_squares() {
        for (p, n) in [(3u64, 1usize), (5, 2), (3, 3), (7, 2)] {
            let ctx = FieldCtx::extension(p, n).unwrap();
            let mut is_square = vec![false; ctx.order() as usize];
            for e in ctx.elements() {
                is_square[(&e * &e).index() as usize] = true;
            }
            for e in ctx.elements() {
                let expect = if e.is_zero() {
                    0
                } else if is_square[e.index() as usize] {
                    1
                } else {
                    -1
                };
                assert_eq!(e.quadratic_character(), expect, "{ctx:?} {e:?}");
                match e.sqrt() {
                    Some(r) => {
                        assert_eq!(&r * &r, e);
                        assert!(r.index() <= (-&r).index());
                    }
                    None => assert_eq!(expect, -1),
                }
            }
        }
    }

    fn arb_elem(ctx: Arc<FieldCtx>) -> impl Strategy<Value = FieldElem> {
        (0..ctx.order()).prop_map(move |i| ctx.element(i))
    }

    proptest! {
        #[test]
        fn inverse_and_frobenius(a in arb_elem(FieldCtx::extension(5, 3).unwrap()),
                                 b in arb_elem(FieldCtx::extension(5, 3).unwrap())) {
            if !a.is_zero() {
                prop_assert_eq!(&a * &a.inverse().unwrap(), a.ctx().one());
            }
            let p = a.ctx().characteristic() as u128;
            prop_assert_eq!((&a + &b).pow(p), &a.pow(p) + &b.pow(p));
        }

        #[test]
        fn character_is_multiplicative(a in arb_elem(FieldCtx::extension(7, 2).unwrap()),
                                       b in arb_elem(FieldCtx::extension(7, 2).unwrap())) {
            prop_assume!(!a.is_zero() && !b.is_zero());
            prop_assert_eq!((&a * &b).quadratic_character(),
                            a.quadratic_character() * b.quadratic_character());
        }

        #[test]
        fn sqrt_squares_back(a in arb_elem(FieldCtx::extension(3, 4).unwrap())) {
            match a.sqrt() {
                Some(r) => prop_assert_eq!(&r * &r, a),
                None => prop_assert_eq!(a.quadratic_character(), -1),
            }
        }
    }
}
