//! The model `y^2 = f(x)` over `F_q`, point counts over constant-field
//! extensions, the L-polynomial and zeta-function coefficients.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::algebra::{binomial_u, AlgebraError, FieldCtx, IntSeries, Poly, QuadSurd};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CurveError {
    #[error(transparent)]
    Field(#[from] AlgebraError),
    #[error("genus must be at least 1, got {0}")]
    GenusTooSmall(i64),
    #[error("deg f = {degree} is neither 2g+1 nor 2g+2 for g = {genus}")]
    DegreeMismatch { degree: i64, genus: u32 },
    #[error("f is not squarefree")]
    NotSquarefree,
    #[error("need point counts for n = 1..{needed}, got {got}")]
    MissingCounts { needed: u32, got: usize },
    #[error("point counts are inconsistent: {0}")]
    InconsistentCounts(String),
    #[error("invalid L-polynomial: {0}")]
    InvalidLPolynomial(String),
}

/// Hyperelliptic curve `y^2 = f(x)` over a prime field of odd characteristic.
#[derive(Clone, PartialEq, Eq)]
pub struct Curve {
    field: Arc<FieldCtx>,
    f: Poly,
    genus: u32,
}

impl std::fmt::Debug for Curve {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "y^2 = {} over F_{} (g = {})", self.f, self.q(), self.genus)
    }
}

/// Checks the standing hypotheses and builds the curve.
pub fn validate_curve(q: u64, f_coeffs: &[i64], g: i64) -> Result<Curve, CurveError> {
    let field = FieldCtx::prime(q)?;
    if g < 1 {
        return Err(CurveError::GenusTooSmall(g));
    }
    let genus = g as u32;
    let f = Poly::from_i64(q, f_coeffs);
    let degree = f.degree().map_or(-1, |d| d as i64);
    if degree != 2 * g + 1 && degree != 2 * g + 2 {
        return Err(CurveError::DegreeMismatch { degree, genus });
    }
    if !f.is_squarefree() {
        return Err(CurveError::NotSquarefree);
    }
    Ok(Curve { field, f, genus })
}

impl Curve {
    pub fn q(&self) -> u64 {
        self.field.characteristic()
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn f(&self) -> &Poly {
        &self.f
    }

    pub fn field(&self) -> &Arc<FieldCtx> {
        &self.field
    }

    pub fn has_odd_degree(&self) -> bool {
        self.f.degree().unwrap_or(0) % 2 == 1
    }

    pub fn leading_coefficient(&self) -> u64 {
        self.f.leading()
    }

    /// Quadratic character of the leading coefficient in `F_q`.
    pub fn leading_is_square(&self) -> bool {
        self.field.from_u64(self.leading_coefficient()).quadratic_character() == 1
    }
}

/// Above this field order point counting falls back to Euler's criterion per point.
const SQUARE_TABLE_LIMIT: u128 = 1 << 26;

/// Number of degree-one places of `K·F_{q^n}`.
pub fn count_points(curve: &Curve, n: u32) -> u128 {
    assert!(n >= 1, "extension degree must be positive");
    let q = curve.q();
    let ext = FieldCtx::extension(q, n as usize).expect("extension of a valid base field");
    let order = ext.order();
    let f = curve.f.coeffs();

    let affine: u128 = if order <= SQUARE_TABLE_LIMIT {
        let squares = square_table(&ext);
        (0..order)
            .into_par_iter()
            .map(|i| {
                let x = digits(i, q, n as usize);
                let y = eval_raw(&ext, f, &x);
                let idx = undigits(&y, q);
                if idx == 0 {
                    1u128
                } else if squares[idx as usize] {
                    2
                } else {
                    0
                }
            })
            .sum()
    } else {
        (0..order)
            .into_par_iter()
            .map(|i| {
                let x = ext.element(i);
                (1 + curve.f.eval_at(&x).quadratic_character() as i64) as u128
            })
            .sum()
    };

    let infinity = if curve.has_odd_degree() {
        1
    } else if n % 2 == 0 || curve.leading_is_square() {
        2
    } else {
        0
    };
    affine + infinity
}

fn digits(mut index: u128, p: u64, n: usize) -> Vec<u64> {
    let mut out = vec![0u64; n];
    for c in out.iter_mut() {
        *c = (index % p as u128) as u64;
        index /= p as u128;
    }
    out
}

fn undigits(coeffs: &[u64], p: u64) -> u128 {
    coeffs
        .iter()
        .rev()
        .fold(0u128, |acc, &c| acc * p as u128 + c as u128)
}

fn eval_raw(ctx: &FieldCtx, f: &[u64], x: &[u64]) -> Vec<u64> {
    let p = ctx.characteristic();
    let mut acc = vec![0u64; x.len()];
    for &c in f.iter().rev() {
        acc = ctx.mul_raw(&acc, x);
        acc[0] = (acc[0] + c) % p;
    }
    acc
}

fn square_table(ctx: &FieldCtx) -> Vec<bool> {
    let q = ctx.characteristic();
    let n = ctx.degree();
    let mut table = vec![false; ctx.order() as usize];
    for i in 1..ctx.order() {
        let x = digits(i, q, n);
        table[undigits(&ctx.mul_raw(&x, &x), q) as usize] = true;
    }
    table
}

/// Point counts `N_1, ..., N_k` of the constant-field extensions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointCounts {
    counts: Vec<u128>,
}

impl PointCounts {
    pub fn new(counts: Vec<u128>) -> Self {
        PointCounts { counts }
    }

    /// Counts for `n = 1..=upto`, computed directly.
    pub fn compute(curve: &Curve, upto: u32) -> Self {
        PointCounts {
            counts: (1..=upto).map(|n| count_points(curve, n)).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// `N_n` for `n >= 1`.
    pub fn get(&self, n: usize) -> u128 {
        self.counts[n - 1]
    }

    pub fn as_slice(&self) -> &[u128] {
        &self.counts
    }
}

/// `L(t) = a_0 + a_1 t + ... + a_{2g} t^{2g}`, the numerator of the zeta function.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LPolynomial {
    q: u64,
    genus: u32,
    coeffs: Vec<BigInt>,
}

impl LPolynomial {
    /// Validates every structural invariant of an L-polynomial.
    pub fn new(q: u64, genus: u32, coeffs: Vec<BigInt>) -> Result<Self, CurveError> {
        let l = LPolynomial { q, genus, coeffs };
        l.validate()?;
        Ok(l)
    }

    /// Completes `a_0..a_g` to the full polynomial via `a_{2g-i} = q^{g-i} a_i`.
    pub fn from_lower_half(q: u64, genus: u32, lower: &[BigInt]) -> Result<Self, CurveError> {
        let g = genus as usize;
        if lower.len() != g + 1 {
            return Err(CurveError::InvalidLPolynomial(format!(
                "expected {} lower coefficients, got {}",
                g + 1,
                lower.len()
            )));
        }
        let mut coeffs = vec![BigInt::zero(); 2 * g + 1];
        coeffs[..=g].clone_from_slice(lower);
        for i in 0..g {
            coeffs[2 * g - i] = num_traits::pow(BigInt::from(q), g - i) * &lower[i];
        }
        LPolynomial::new(q, genus, coeffs)
    }

    fn validate(&self) -> Result<(), CurveError> {
        let g = self.genus as usize;
        let q = BigInt::from(self.q);
        let bad = |msg: String| Err(CurveError::InvalidLPolynomial(msg));
        if self.coeffs.len() != 2 * g + 1 {
            return bad(format!("expected degree {}, got {} coefficients", 2 * g, self.coeffs.len()));
        }
        if !self.coeffs[0].is_one() {
            return bad(format!("a_0 = {} != 1", self.coeffs[0]));
        }
        for i in 0..=g {
            let expect = num_traits::pow(q.clone(), g - i) * &self.coeffs[i];
            if self.coeffs[2 * g - i] != expect {
                return bad(format!("functional equation fails at i = {i}"));
            }
        }
        for (i, a) in self.coeffs.iter().enumerate() {
            let bound = binomial_u(2 * g as u64, i as u64);
            if a * a > &bound * &bound * num_traits::pow(q.clone(), i) {
                return bad(format!("|a_{i}| = {} breaks the Hasse-Weil bound", a.abs()));
            }
        }
        if !self.class_number().is_positive() {
            return bad("L(1) is not positive".to_string());
        }
        Ok(())
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// `a_i`, zero outside `0..=2g`.
    pub fn coeff(&self, i: i64) -> BigInt {
        if i < 0 {
            return BigInt::zero();
        }
        self.coeffs.get(i as usize).cloned().unwrap_or_default()
    }

    /// `L(1) = |Pic^0(K)|`.
    pub fn class_number(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn to_series(&self, order: usize) -> IntSeries {
        IntSeries::new(self.coeffs.clone(), order)
    }

    /// Power sums `S_1..S_k` of the inverse roots, by Newton's identities.
    pub fn power_sums(&self, k: usize) -> Vec<BigInt> {
        let mut sums: Vec<BigInt> = Vec::with_capacity(k);
        for n in 1..=k {
            // S_n = -n a_n - sum_{i=1}^{n-1} S_i a_{n-i}
            let mut s = -BigInt::from(n) * self.coeff(n as i64);
            for i in 1..n {
                s -= &sums[i - 1] * self.coeff((n - i) as i64);
            }
            sums.push(s);
        }
        sums
    }

    /// `N_n = q^n + 1 - S_n` for `n = 1..=k`, predicted from the polynomial.
    pub fn predicted_counts(&self, k: usize) -> Vec<BigInt> {
        let q = BigInt::from(self.q);
        self.power_sums(k)
            .into_iter()
            .enumerate()
            .map(|(i, s)| num_traits::pow(q.clone(), i + 1) + 1 - s)
            .collect()
    }

    /// `[(√q - 1)^{2g}, (√q + 1)^{2g}]` as exact surds.
    pub fn class_number_interval(&self) -> (QuadSurd, QuadSurd) {
        let q = BigInt::from(self.q);
        let sqrt_q = QuadSurd::half_power(&q, 1);
        let one = QuadSurd::one(&q);
        let lower_base = &sqrt_q - &one;
        let upper_base = &sqrt_q + &one;
        let mut lower = one.clone();
        let mut upper = one;
        for _ in 0..2 * self.genus {
            lower = &lower * &lower_base;
            upper = &upper * &upper_base;
        }
        (lower, upper)
    }
}

impl std::fmt::Display for LPolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", IntSeries::new(self.coeffs.clone(), self.coeffs.len() - 1))
    }
}

/// Recovers the L-polynomial from `N_1..N_g`.
///
/// `S_n = q^n + 1 - N_n` are the power sums of the inverse roots; Newton's
/// identities give `a_1..a_g`, the functional equation gives the rest.
pub fn l_polynomial(curve: &Curve, counts: &PointCounts) -> Result<LPolynomial, CurveError> {
    let g = curve.genus() as usize;
    if counts.len() < g {
        return Err(CurveError::MissingCounts {
            needed: curve.genus(),
            got: counts.len(),
        });
    }
    let q = BigInt::from(curve.q());
    let sums: Vec<BigInt> = (1..=g)
        .map(|n| num_traits::pow(q.clone(), n) + 1 - BigInt::from(counts.get(n)))
        .collect();
    let mut lower = vec![BigInt::one()];
    for k in 1..=g {
        // k a_k = -sum_{i=1}^{k} S_i a_{k-i}
        let mut acc = BigInt::zero();
        for i in 1..=k {
            acc -= &sums[i - 1] * &lower[k - i];
        }
        let kk = BigInt::from(k);
        if !(&acc % &kk).is_zero() {
            return Err(CurveError::InconsistentCounts(format!(
                "Newton step {k} does not divide exactly"
            )));
        }
        lower.push(acc / kk);
    }
    LPolynomial::from_lower_half(curve.q(), curve.genus(), &lower).map_err(|e| match e {
        CurveError::InvalidLPolynomial(msg) => CurveError::InconsistentCounts(msg),
        other => other,
    })
}

/// Convenience: count points up to `g` and recover `L`.
pub fn l_polynomial_of(curve: &Curve) -> Result<LPolynomial, CurveError> {
    l_polynomial(curve, &PointCounts::compute(curve, curve.genus()))
}

/// `|Pic^0(K)| = L(1)`.
pub fn class_number(l: &LPolynomial) -> BigInt {
    l.class_number()
}

/// Truncated zeta functions `Z_K(t) = L(t)/((1-t)(1-qt))` and `Z_R(t) = 1/((1-t)(1-qt))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZetaData {
    pub z_k: IntSeries,
    pub z_r: IntSeries,
}

impl ZetaData {
    /// `A_d(K)`, the number of effective divisors of degree `d`.
    pub fn a_k(&self, d: usize) -> &BigInt {
        self.z_k.coeff(d)
    }

    /// `A_d(R) = 1 + q + ... + q^d`.
    pub fn a_r(&self, d: usize) -> &BigInt {
        self.z_r.coeff(d)
    }
}

pub fn zeta_series(l: &LPolynomial, order: usize) -> ZetaData {
    assert!(order >= 1, "truncation order must be positive");
    let q = BigInt::from(l.q());
    let z_r = &IntSeries::geometric(&BigInt::one(), order) * &IntSeries::geometric(&q, order);
    let z_k = &l.to_series(order) * &z_r;
    ZetaData { z_k, z_r }
}
