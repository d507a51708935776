//! Sizes of individual holes `h(D)` when every place of `S` has degree one.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use thiserror::Error;

use crate::algebra::{binomial, factorial, IntSeries};
use crate::oracle::{enumerate_hole, is_reduced, Divisor, OracleError};
use crate::places::{sigma, PlaceSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HoleError {
    #[error("place {0} has degree > 1; hole sizes need S of degree-one places")]
    Unsupported(String),
    #[error("divisor {0} is not reduced with respect to S")]
    NotReduced(String),
    #[error("invalid context: {0}")]
    InvalidContext(String),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

/// Counts of `S ∖ {𝔭}` that determine `|h(D)|`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct HoleContext {
    /// σ-fixed members.
    pub n: u32,
    /// Conjugate pairs inside `S ∖ {𝔭}`.
    pub pairs: u32,
    /// Members conjugate to the base place (0 or 1).
    pub r: u32,
    /// Members whose conjugate is outside `S`.
    pub m: u32,
    /// Those of the `m` whose conjugate does not occur in `D`.
    pub m_free: u32,
    /// `g - deg D`.
    pub slack: u32,
}

impl HoleContext {
    /// Formula-only construction, checking the structural constraints.
    pub fn new(n: u32, pairs: u32, r: u32, m: u32, m_free: u32, slack: u32) -> Result<Self, HoleError> {
        if m_free > m {
            return Err(HoleError::InvalidContext(format!("m' = {m_free} exceeds m = {m}")));
        }
        if r > 1 {
            return Err(HoleError::InvalidContext(format!("r = {r} exceeds 1")));
        }
        Ok(HoleContext {
            n,
            pairs,
            r,
            m,
            m_free,
            slack,
        })
    }

    /// `|S| = n + m + r + 2ℓ + 1`.
    pub fn set_size(&self) -> u32 {
        self.n + self.m + self.r + 2 * self.pairs + 1
    }

    /// `|S| - (m - m'_D)`: members usable for building hole elements, plus the base.
    pub fn effective_size(&self) -> u32 {
        self.set_size() - (self.m - self.m_free)
    }
}

/// Context of `D ∈ Red_S(K)` for `S` made of degree-one places.
pub fn hole_context(s: &PlaceSet, d: &Divisor, genus: u32) -> Result<HoleContext, HoleError> {
    if let Some(p) = s.members().iter().find(|p| p.degree() != 1) {
        return Err(HoleError::Unsupported(p.to_string()));
    }
    if !is_reduced(d, s.members(), genus) {
        return Err(HoleError::NotReduced(d.to_string()));
    }
    let base = s.base();
    let (mut n, mut paired, mut r, mut m, mut m_free) = (0, 0, 0, 0, 0);
    for p in s.members().iter().filter(|p| *p != base) {
        let conj = sigma(p);
        if &conj == p {
            n += 1;
        } else if &conj == base {
            r += 1;
        } else if s.contains(&conj) {
            paired += 1;
        } else {
            m += 1;
            if d.valuation(&conj) == 0 {
                m_free += 1;
            }
        }
    }
    HoleContext::new(n, paired / 2, r, m, m_free, genus - d.degree())
}

/// `â_s = Σ_{i=0}^{s} binom(n+ℓ, s-i) binom(i + m'_D + r + ℓ - 1, i)`.
pub fn hole_level(ctx: &HoleContext, s: u32) -> BigInt {
    let top = (ctx.n + ctx.pairs) as i64;
    let free = (ctx.m_free + ctx.r + ctx.pairs) as i64;
    (0..=s as i64)
        .map(|i| binomial(top, s as i64 - i) * binomial(i + free - 1, i))
        .sum()
}

/// `|h(D)| = Σ_{s=1}^{g - deg D} â_s`.
pub fn hole_size(ctx: &HoleContext) -> BigInt {
    (1..=ctx.slack).map(|s| hole_level(ctx, s)).sum()
}

/// `(1 + t)^{n+ℓ} (1 - t)^{-m'_D - r - ℓ}`, whose coefficients are the `â_s`.
pub fn hole_series(ctx: &HoleContext, order: usize) -> IntSeries {
    let plus = IntSeries::binomial_pow(1, (ctx.n + ctx.pairs) as i64, order);
    let minus = IntSeries::binomial_pow(-1, -((ctx.m_free + ctx.r + ctx.pairs) as i64), order);
    &plus * &minus
}

/// `(lower, upper)` around `|h(D)|`; `None` when `|S| = 1`.
pub fn hole_size_bounds(ctx: &HoleContext) -> Option<(BigInt, BigInt)> {
    if ctx.set_size() < 2 {
        return None;
    }
    let eff = ctx.effective_size() as i64;
    let s = ctx.slack as i64;
    let lower: BigInt = (0..=s).map(|i| binomial(eff - 2, i)).sum::<BigInt>() - 1;
    let upper = binomial(eff - 1 + s, s) - 1;
    Some((lower, upper))
}

/// `|h(D)| (g - deg D)! / (|S| - (m - m'_D))^{g - deg D}`.
pub fn asymptotic_ratio(ctx: &HoleContext) -> BigRational {
    let num = hole_size(ctx) * factorial(ctx.slack as u64);
    let den = BigInt::from(ctx.effective_size()).pow(ctx.slack);
    BigRational::new(num, den)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MaxHoleVerdict {
    /// `h(0)` is strictly larger than every other hole and matches the formula.
    Confirmed { size: BigInt, runner_up: BigInt },
    Violated(String),
    Skipped(String),
}

/// Checks that `D = 0` carries the unique largest hole among `reduced`
/// (an enumeration of `Red_S(K)`), and that its size is the formula with
/// `m` in place of `m'_D`.
pub fn max_hole_check(s: &PlaceSet, reduced: &[Divisor], genus: u32) -> Result<MaxHoleVerdict, HoleError> {
    if s.len() < 2 {
        return Ok(MaxHoleVerdict::Skipped("|S| = 1".to_string()));
    }
    if !s.members().iter().any(|p| p != s.base() && !p.is_fixed()) {
        return Ok(MaxHoleVerdict::Skipped("every member besides the base is ramified".to_string()));
    }
    let zero_ctx = hole_context(s, &Divisor::zero(), genus)?;
    let formula = hole_size(&HoleContext {
        m_free: zero_ctx.m,
        ..zero_ctx
    });
    let mut zero_size = None;
    let mut runner_up = BigInt::zero();
    for d in reduced {
        let size = BigInt::from(enumerate_hole(d, s, genus)?.len());
        if d.is_zero() {
            zero_size = Some(size);
        } else if size > runner_up {
            runner_up = size;
        }
    }
    let Some(size) = zero_size else {
        return Ok(MaxHoleVerdict::Violated("0 missing from the enumeration".to_string()));
    };
    if size != formula {
        return Ok(MaxHoleVerdict::Violated(format!("|h(0)| = {size}, formula gives {formula}")));
    }
    if reduced.len() > 1 && runner_up >= size {
        return Ok(MaxHoleVerdict::Violated(format!(
            "a nonzero divisor has a hole of size {runner_up} >= |h(0)| = {size}"
        )));
    }
    Ok(MaxHoleVerdict::Confirmed { size, runner_up })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::{validate_curve, Curve};
    use crate::oracle::enumerate_red;
    use crate::places::{enumerate_places, Place, Splitting};
    use proptest::prelude::*;

    fn running() -> Curve {
        validate_curve(3, &[0, 1, 0, 1], 1).unwrap()
    }

    #[test]
    fn running_example_context() {
        let c = running();
        let inf = Place::parse(&c, "inf").unwrap();
        let zero = Place::parse(&c, "u=0,1").unwrap();
        let s = PlaceSet::new(vec![inf.clone(), zero], inf).unwrap();
        let ctx = hole_context(&s, &Divisor::zero(), 1).unwrap();
        assert_eq!(ctx, HoleContext::new(1, 0, 0, 0, 0, 1).unwrap());
        assert_eq!(hole_size(&ctx), BigInt::from(1));
    }

    #[test]
    fn conjugate_pair_gives_slack() {
        for g in 1..6u32 {
            for deg in 0..=g {
                let ctx = HoleContext::new(0, 0, 1, 0, 0, g - deg).unwrap();
                assert_eq!(hole_size(&ctx), BigInt::from(g - deg));
                let (lo, hi) = hole_size_bounds(&ctx).unwrap();
                assert!(lo <= hole_size(&ctx) && hole_size(&ctx) <= hi);
            }
        }
        let zero = HoleContext::new(3, 1, 1, 2, 1, 0).unwrap();
        assert!(hole_size(&zero).is_zero());
        assert!(hole_size_bounds(&HoleContext::new(0, 0, 0, 0, 0, 2).unwrap()).is_none());
    }

    #[test]
    fn invalid_contexts() {
        assert!(HoleContext::new(0, 0, 2, 0, 0, 1).is_err());
        assert!(HoleContext::new(0, 0, 0, 1, 2, 1).is_err());
    }

    #[test]
    fn sweep_family_ratios() {
        // base plus m lone split members, D = 0
        for m in [3u32, 7, 15, 31] {
            let one = HoleContext::new(0, 0, 0, m, m, 1).unwrap();
            assert_eq!(asymptotic_ratio(&one), BigRational::new(m.into(), (m + 1).into()));
            let two = HoleContext::new(0, 0, 0, m, m, 2).unwrap();
            let expect = BigRational::from_integer(1.into()) + BigRational::new((m - 1).into(), ((m + 1) * (m + 1)).into());
            assert_eq!(asymptotic_ratio(&two), expect);
        }
    }

    #[test]
    fn oracle_agreement_on_small_curves() {
        let c = validate_curve(5, &[1, 1, 0, 0, 0, 0, 4], 2).unwrap();
        let ones: Vec<Place> = enumerate_places(&c, 1);
        let base = ones[0].clone();
        for k in 1..=ones.len() {
            let members = ones[..k].to_vec();
            let s = PlaceSet::new(members.clone(), base.clone()).unwrap();
            let red = enumerate_red(&c, &members, 2, true).unwrap().divisors.unwrap();
            for d in &red {
                let ctx = hole_context(&s, d, 2).unwrap();
                let holes = enumerate_hole(d, &s, 2).unwrap();
                assert_eq!(hole_size(&ctx), BigInt::from(holes.len()), "k={k} D={d}");
                if let Some((lo, hi)) = hole_size_bounds(&ctx) {
                    assert!(lo <= hole_size(&ctx) && hole_size(&ctx) <= hi);
                }
            }
            let has_unramified = members.iter().any(|p| p != &base && p.splitting() == Splitting::Split);
            match max_hole_check(&s, &red, 2).unwrap() {
                MaxHoleVerdict::Confirmed { .. } => assert!(has_unramified),
                MaxHoleVerdict::Skipped(_) => assert!(!has_unramified),
                MaxHoleVerdict::Violated(msg) => panic!("{msg}"),
            }
        }
    }

    proptest! {
        #[test]
        fn level_matches_generating_function(n in 0u32..5, pairs in 0u32..4, r in 0u32..2,
                                             m in 0u32..4, free in 0u32..4, slack in 0u32..7) {
            let ctx = HoleContext::new(n, pairs, r, m.max(free), free, slack).unwrap();
            let series = hole_series(&ctx, 8);
            for s in 1..=8u32 {
                prop_assert_eq!(&hole_level(&ctx, s), series.coeff(s as usize));
            }
            if let Some((lo, hi)) = hole_size_bounds(&ctx) {
                let h = hole_size(&ctx);
                prop_assert!(lo <= h && h <= hi);
            }
        }
    }
}
