//! Brute-force ground truth: reduced divisors and holes enumerated straight
//! from the local valuation criterion, and effective divisors counted from
//! the places themselves.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

use crate::algebra::IntSeries;
use crate::curve::Curve;
use crate::places::{enumerate_places, sigma, Place, PlaceSet, Splitting};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("enumeration is limited to degree <= g = {genus}, asked for {asked}")]
    DegreeTooLarge { asked: u32, genus: u32 },
    #[error("divisor {0} is not reduced with respect to S")]
    NotReduced(String),
}

/// Effective divisor: finitely many places with positive multiplicities.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Divisor {
    mults: BTreeMap<Place, u32>,
}

impl Divisor {
    pub fn zero() -> Self {
        Divisor::default()
    }

    pub fn from_terms<I: IntoIterator<Item = (Place, u32)>>(terms: I) -> Self {
        let mut d = Divisor::zero();
        for (p, k) in terms {
            d.add(&p, k);
        }
        d
    }

    pub fn add(&mut self, p: &Place, k: u32) {
        if k > 0 {
            *self.mults.entry(p.clone()).or_insert(0) += k;
        }
    }

    pub fn plus(&self, p: &Place, k: u32) -> Divisor {
        let mut d = self.clone();
        d.add(p, k);
        d
    }

    pub fn valuation(&self, p: &Place) -> u32 {
        self.mults.get(p).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> u32 {
        self.mults.iter().map(|(p, k)| p.degree() * k).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.mults.is_empty()
    }

    pub fn support(&self) -> impl Iterator<Item = (&Place, &u32)> {
        self.mults.iter()
    }
}

impl fmt::Display for Divisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let terms: Vec<String> = self
            .mults
            .iter()
            .map(|(p, k)| if *k == 1 { format!("[{p}]") } else { format!("{k}*[{p}]") })
            .collect();
        f.write_str(&terms.join(" + "))
    }
}

/// Reducedness of an effective divisor: degree at most `cap`, zero at every
/// place in `excluded`, and locally no conorm of a place of `R` below it.
pub fn is_reduced(d: &Divisor, excluded: &[Place], cap: u32) -> bool {
    if d.degree() > cap {
        return false;
    }
    if excluded.iter().any(|p| d.valuation(p) > 0) {
        return false;
    }
    d.support().all(|(p, &k)| match p.splitting() {
        Splitting::Inert => false,
        Splitting::Ramified => k <= 1,
        Splitting::Split => d.valuation(&sigma(p)) == 0,
    })
}

/// Places over one place of `R`, as the enumeration sees them.
#[derive(Debug, Clone)]
struct Fibre {
    places: Vec<Place>,
    splitting: Splitting,
    degree: u32,
}

fn fibres(places: &[Place]) -> Vec<Fibre> {
    let mut sorted = places.to_vec();
    sorted.sort();
    sorted
        .chunk_by(|a, b| a.locus() == b.locus())
        .map(|group| Fibre {
            places: group.to_vec(),
            splitting: group[0].splitting(),
            degree: group[0].degree(),
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationResult {
    /// `|Red^d|` for `d = 0..=max_degree`.
    pub counts: Vec<u64>,
    pub divisors: Option<Vec<Divisor>>,
    pub excluded: Vec<Place>,
    pub max_degree: u32,
}

/// Enumerates every reduced divisor of degree at most `max_degree <= g`
/// vanishing on `excluded`.
pub fn enumerate_red(
    curve: &Curve,
    excluded: &[Place],
    max_degree: u32,
    materialize: bool,
) -> Result<EnumerationResult, OracleError> {
    if max_degree > curve.genus() {
        return Err(OracleError::DegreeTooLarge {
            asked: max_degree,
            genus: curve.genus(),
        });
    }
    let places = if max_degree == 0 {
        Vec::new()
    } else {
        enumerate_places(curve, max_degree)
    };
    Ok(enumerate_red_among(&places, excluded, max_degree, materialize))
}

/// [`enumerate_red`] over an already enumerated list of places; places of
/// degree above `max_degree` are ignored.
pub fn enumerate_red_among(places: &[Place], excluded: &[Place], max_degree: u32, materialize: bool) -> EnumerationResult {
    let places: Vec<Place> = places.iter().filter(|p| p.degree() <= max_degree).cloned().collect();
    let fibres: Vec<Fibre> = fibres(&places)
        .into_iter()
        .filter(|f| f.splitting != Splitting::Inert)
        .collect();
    let mut counts = vec![0u64; max_degree as usize + 1];
    let mut found = materialize.then(Vec::new);
    let mut current = Divisor::zero();
    walk(&fibres, 0, max_degree, excluded, &mut current, &mut counts, &mut found);
    if let Some(list) = found.as_mut() {
        list.sort();
    }
    EnumerationResult {
        counts,
        divisors: found,
        excluded: excluded.to_vec(),
        max_degree,
    }
}

fn walk(
    fibres: &[Fibre],
    idx: usize,
    budget: u32,
    excluded: &[Place],
    current: &mut Divisor,
    counts: &mut [u64],
    found: &mut Option<Vec<Divisor>>,
) {
    if idx == fibres.len() || budget == 0 {
        counts[current.degree() as usize] += 1;
        if let Some(list) = found.as_mut() {
            list.push(current.clone());
        }
        return;
    }
    walk(fibres, idx + 1, budget, excluded, current, counts, found);
    let fibre = &fibres[idx];
    let d = fibre.degree;
    let max_k = match fibre.splitting {
        Splitting::Ramified => 1,
        _ => budget / d,
    };
    for p in &fibre.places {
        if excluded.contains(p) {
            continue;
        }
        for k in 1..=max_k.min(budget / d) {
            let saved = current.clone();
            current.add(p, k);
            walk(fibres, idx + 1, budget - k * d, excluded, current, counts, found);
            *current = saved;
        }
    }
}

/// `|Red_S^d|` for `d = 0..=g`.
pub fn red_counts(curve: &Curve, s: &PlaceSet) -> Result<Vec<u64>, OracleError> {
    Ok(enumerate_red(curve, s.members(), curve.genus(), false)?.counts)
}

/// The hole of `d`: all `d + e` with `0 < e` supported on `S ∖ {𝔭}` that are
/// reduced with respect to `𝔭` and have degree at most `g`.
pub fn enumerate_hole(d: &Divisor, s: &PlaceSet, genus: u32) -> Result<Vec<Divisor>, OracleError> {
    if !is_reduced(d, s.members(), genus) {
        return Err(OracleError::NotReduced(d.to_string()));
    }
    let others: Vec<&Place> = s.members().iter().filter(|p| *p != s.base()).collect();
    let base = std::slice::from_ref(s.base());
    let mut out = Vec::new();
    let mut stack = vec![(0usize, d.clone())];
    while let Some((idx, cur)) = stack.pop() {
        if idx == others.len() {
            if &cur != d && is_reduced(&cur, base, genus) {
                out.push(cur);
            }
            continue;
        }
        let p = others[idx];
        let room = genus.saturating_sub(cur.degree()) / p.degree();
        for k in 0..=room {
            stack.push((idx + 1, cur.plus(p, k)));
        }
    }
    out.sort();
    Ok(out)
}

/// `A_0, ..., A_d` from the Euler product `Π (1 - t^{deg P})^{-1}` over places of degree `<= d`.
pub fn effective_divisor_counts(curve: &Curve, d: u32) -> IntSeries {
    let order = d as usize;
    let mut acc = IntSeries::one(order);
    if d == 0 {
        return acc;
    }
    for p in enumerate_places(curve, d) {
        acc = &acc * &IntSeries::binomial_pow_dilated(-1, -1, p.degree() as usize, order);
    }
    acc
}

/// `A_d(K)`, the number of effective divisors of degree `d`.
pub fn a_d_from_places(curve: &Curve, d: u32) -> BigInt {
    effective_divisor_counts(curve, d).coeff(d as usize).clone()
}

/// For `S' = S ∪ {𝔭_1, σ(𝔭_1)}` with `𝔭_1` split, checks that `Red_S^d` is the
/// disjoint union of the shifts `D + i𝔭_1`, `D + iσ(𝔭_1)` of `D ∈ Red_{S'}^{d - i deg 𝔭_1}`.
pub fn pair_decomposition_holds(curve: &Curve, excluded: &[Place], split: &Place, d: u32) -> Result<bool, OracleError> {
    assert_eq!(split.splitting(), Splitting::Split, "needs a split place");
    let conj = sigma(split);
    let mut bigger = excluded.to_vec();
    bigger.push(split.clone());
    bigger.push(conj.clone());
    let small = enumerate_red(curve, excluded, d, true)?.divisors.expect("materialized");
    let large = enumerate_red(curve, &bigger, d, true)?.divisors.expect("materialized");
    let mut rebuilt: Vec<Divisor> = Vec::new();
    let step = split.degree();
    for base in &large {
        let mut i = 0;
        while base.degree() + i * step <= d {
            if i == 0 {
                rebuilt.push(base.clone());
            } else {
                rebuilt.push(base.plus(split, i));
                rebuilt.push(base.plus(&conj, i));
            }
            i += 1;
        }
    }
    let target: Vec<Divisor> = small.into_iter().filter(|x| x.degree() <= d).collect();
    let n = rebuilt.len();
    rebuilt.sort();
    rebuilt.dedup();
    Ok(rebuilt.len() == n && rebuilt == target)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::{count_points, l_polynomial_of, validate_curve, zeta_series};
    use crate::places::classify_r_place;
    use crate::algebra::Poly;

    fn running() -> Curve {
        validate_curve(3, &[0, 1, 0, 1], 1).unwrap()
    }

    #[test]
    fn criterion_examples() {
        let c = running();
        let zero = Place::parse(&c, "u=0,1").unwrap();
        let split = classify_r_place(&c, &Poly::from_i64(3, &[1, 1])).places;
        assert!(is_reduced(&Divisor::zero(), &[zero.clone()], 1));
        assert!(!is_reduced(&Divisor::from_terms([(zero.clone(), 2)]), &[], 5));
        assert!(is_reduced(&Divisor::from_terms([(split[0].clone(), 1)]), &[], 1));
        let both = Divisor::from_terms([(split[0].clone(), 1), (split[1].clone(), 1)]);
        assert!(!is_reduced(&both, &[], 5));
        assert!(!is_reduced(&Divisor::from_terms([(split[0].clone(), 1)]), &[split[0].clone()], 1));
        let inert = Place::parse(&c, "u=2,1").unwrap();
        assert!(!is_reduced(&Divisor::from_terms([(inert, 1)]), &[], 5));
    }

    #[test]
    fn running_example_enumeration() {
        let c = running();
        let inf = Place::parse(&c, "inf").unwrap();
        let r = enumerate_red(&c, &[inf.clone()], 1, true).unwrap();
        assert_eq!(r.counts, vec![1, 3]);
        assert_eq!(r.divisors.unwrap().len(), 4);
        assert!(enumerate_red(&c, &[inf], 2, false).is_err());
    }

    #[test]
    fn running_example_hole() {
        let c = running();
        let inf = Place::parse(&c, "inf").unwrap();
        let zero = Place::parse(&c, "u=0,1").unwrap();
        let s = PlaceSet::new(vec![inf.clone(), zero.clone()], inf).unwrap();
        let h = enumerate_hole(&Divisor::zero(), &s, 1).unwrap();
        assert_eq!(h, vec![Divisor::from_terms([(zero.clone(), 1)])]);
        let not_reduced = Divisor::from_terms([(zero, 1)]);
        assert!(enumerate_hole(&not_reduced, &s, 1).is_err());
    }

    #[test]
    fn effective_divisors_match_zeta() {
        for c in [
            running(),
            validate_curve(5, &[1, 2, 0, 3, 0, 1], 2).unwrap(),
            validate_curve(5, &[1, 0, 0, 1, 0, 0, 2], 2).unwrap(),
        ] {
            let l = l_polynomial_of(&c).unwrap();
            let z = zeta_series(&l, 4);
            let from_places = effective_divisor_counts(&c, 4);
            assert_eq!(&from_places, &z.z_k.truncate(4));
            assert_eq!(a_d_from_places(&c, 1), BigInt::from(count_points(&c, 1)));
        }
        assert_eq!(a_d_from_places(&running(), 2), BigInt::from(16));
    }

    #[test]
    fn mass_identity_by_enumeration() {
        let c = validate_curve(5, &[1, 2, 0, 3, 0, 1], 2).unwrap();
        let l = l_polynomial_of(&c).unwrap();
        for p in enumerate_places(&c, 1) {
            let r = enumerate_red(&c, &[p], 2, false).unwrap();
            assert_eq!(BigInt::from(r.counts.iter().sum::<u64>()), l.class_number());
        }
    }

    #[test]
    fn split_pair_decomposition() {
        let c = validate_curve(5, &[1, 1, 0, 0, 0, 0, 4], 2).unwrap();
        let split: Vec<Place> = enumerate_places(&c, 1)
            .into_iter()
            .filter(|p| p.splitting() == Splitting::Split && !p.is_infinite())
            .collect();
        assert!(!split.is_empty());
        for d in 0..=2 {
            assert!(pair_decomposition_holds(&c, &[], &split[0], d).unwrap());
        }
    }
}
