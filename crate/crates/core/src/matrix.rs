//! Seeded families of curves and place sets, and the identity checks run over them.
//!
//! Shared by `verify`, `sweep` and the acceptance suite.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::curve::{count_points, l_polynomial_of, validate_curve, zeta_series, Curve, CurveError, LPolynomial};
use crate::holesize::{asymptotic_ratio, hole_context, hole_size, max_hole_check, HoleContext, MaxHoleVerdict};
use crate::oracle::{effective_divisor_counts, enumerate_hole, enumerate_red_among, Divisor};
use crate::places::{enumerate_places, sigma, Place, PlaceSet, Splitting};
use crate::redcount::{
    c_d_base_closed, c_d_empty_closed, c_i_explicit_for, curve_bounds, h_base, h_empty, h_stepwise, hole_count,
    polynomial_identity_holds, red_difference_decomposition, transform_hs, verify_bounds, zeta_convolution_holds,
};

/// Degree parity and leading-coefficient class of `f`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Shape {
    OddSquare,
    OddNonSquare,
    EvenSquare,
    EvenNonSquare,
}

impl Shape {
    pub const ALL: [Shape; 4] = [Shape::OddSquare, Shape::OddNonSquare, Shape::EvenSquare, Shape::EvenNonSquare];

    pub fn is_odd(self) -> bool {
        matches!(self, Shape::OddSquare | Shape::OddNonSquare)
    }

    pub fn is_square(self) -> bool {
        matches!(self, Shape::OddSquare | Shape::EvenSquare)
    }

    pub fn degree(self, genus: u32) -> usize {
        2 * genus as usize + if self.is_odd() { 1 } else { 2 }
    }

    pub fn label(self) -> &'static str {
        match self {
            Shape::OddSquare => "odd-sq",
            Shape::OddNonSquare => "odd-nsq",
            Shape::EvenSquare => "even-sq",
            Shape::EvenNonSquare => "even-nsq",
        }
    }
}

/// Smallest quadratic non-residue modulo an odd prime.
pub fn least_non_residue(q: u64) -> u64 {
    (2..q).find(|&a| mod_pow(a, (q - 1) / 2, q) == q - 1).expect("odd prime has a non-residue")
}

fn mod_pow(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}

/// Random coefficients of the requested shape; not yet checked for squarefreeness.
pub fn sample_coefficients<R: Rng>(q: u64, genus: u32, shape: Shape, rng: &mut R) -> Vec<i64> {
    let deg = shape.degree(genus);
    let mut c: Vec<i64> = (0..deg).map(|_| rng.random_range(0..q) as i64).collect();
    c.push(if shape.is_square() { 1 } else { least_non_residue(q) as i64 });
    c
}

fn stream_seed(seed: u64, q: u64, genus: u32, tag: u64) -> u64 {
    seed ^ q.wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ (genus as u64).wrapping_mul(0xC2B2_AE3D_27D4_EB4F) ^ tag.rotate_left(48)
}

/// A curve of the matrix with its L-polynomial.
#[derive(Debug, Clone)]
pub struct MatrixCurve {
    pub id: String,
    pub shape: Shape,
    pub coeffs: Vec<i64>,
    pub curve: Curve,
    pub l: LPolynomial,
}

/// Places up to degree 2 include a split degree-one place and an inert place.
fn usable(curve: &Curve) -> bool {
    let places = enumerate_places(curve, 2);
    places.iter().any(|p| p.degree() == 1 && p.splitting() == Splitting::Split)
        && places.iter().any(|p| p.splitting() == Splitting::Inert)
}

/// `per_shape` distinct usable curves of each shape, reproducible from `seed`.
pub fn matrix_curves(q: u64, genus: u32, per_shape: usize, seed: u64) -> Result<Vec<MatrixCurve>, CurveError> {
    let mut out = Vec::new();
    for (si, shape) in Shape::ALL.into_iter().enumerate() {
        let mut rng = ChaCha8Rng::seed_from_u64(stream_seed(seed, q, genus, si as u64));
        let mut found: Vec<Vec<i64>> = Vec::new();
        for _ in 0..4000 {
            if found.len() == per_shape {
                break;
            }
            let coeffs = sample_coefficients(q, genus, shape, &mut rng);
            if found.contains(&coeffs) {
                continue;
            }
            let Ok(curve) = validate_curve(q, &coeffs, genus as i64) else {
                continue;
            };
            if usable(&curve) {
                found.push(coeffs);
            }
        }
        for (k, coeffs) in found.into_iter().enumerate() {
            let curve = validate_curve(q, &coeffs, genus as i64)?;
            let l = l_polynomial_of(&curve)?;
            out.push(MatrixCurve {
                id: format!("q{q}-g{genus}-{}-{k}", shape.label()),
                shape,
                coeffs,
                curve,
                l,
            });
        }
    }
    Ok(out)
}

/// The matrix over every `(q, g)` pair, curves of each pair built in parallel.
pub fn build_matrix(qs: &[u64], genera: &[u32], per_shape: usize, seed: u64) -> Result<Vec<MatrixCurve>, CurveError> {
    let pairs: Vec<(u64, u32)> = qs.iter().flat_map(|&q| genera.iter().map(move |&g| (q, g))).collect();
    let parts: Result<Vec<Vec<MatrixCurve>>, CurveError> =
        pairs.par_iter().map(|&(q, g)| matrix_curves(q, g, per_shape, seed)).collect();
    Ok(parts?.into_iter().flatten().collect())
}

#[derive(Debug, Clone)]
pub struct NamedSet {
    pub name: &'static str,
    pub set: PlaceSet,
}

/// Place-set configurations drawn from the places of degree at most two.
pub fn set_configurations(curve: &Curve) -> Vec<NamedSet> {
    let places = enumerate_places(curve, 2);
    let ones: Vec<&Place> = places.iter().filter(|p| p.degree() == 1).collect();
    let ramified: Vec<&Place> = ones.iter().copied().filter(|p| p.splitting() == Splitting::Ramified).collect();
    let split: Vec<&Place> = ones.iter().copied().filter(|p| p.splitting() == Splitting::Split).collect();
    let mut out = Vec::new();
    let mut push = |name: &'static str, members: Vec<Place>, base: &Place| {
        if let Ok(set) = PlaceSet::new(members, base.clone()) {
            out.push(NamedSet { name, set });
        }
    };
    if let Some(r) = ramified.first() {
        push("base_ramified", vec![(*r).clone()], r);
    }
    let Some(p) = split.first().copied() else {
        return out;
    };
    let conj = sigma(p);
    push("base_split", vec![p.clone()], p);
    push("conjugate_pair", vec![p.clone(), conj.clone()], p);

    // one representative of each further conjugate pair of degree one
    let others: Vec<&Place> = split
        .iter()
        .copied()
        .filter(|x| *x != p && **x != conj && **x < sigma(x))
        .collect();
    if let Some(lone) = others.first() {
        push("lone_split", vec![p.clone(), (*lone).clone()], p);
    }
    if let Some(r) = ramified.first() {
        let mut members = vec![(*r).clone(), p.clone(), conj.clone()];
        members.extend(ramified.iter().skip(1).take(1).map(|x| (*x).clone()));
        members.extend(others.iter().take(1).map(|x| (*x).clone()));
        push("mixed", members, r);
    }
    if let Some(inert) = places.iter().find(|x| x.splitting() == Splitting::Inert) {
        push("with_inert", vec![p.clone(), conj.clone(), inert.clone()], p);
    }
    if let Some(two) = places.iter().find(|x| x.degree() == 2 && x.splitting() != Splitting::Inert) {
        let mut members = vec![p.clone(), two.clone()];
        members.push(sigma(two));
        members.dedup();
        push("degree_two", members, p);
    }
    let all: Vec<Place> = ones.iter().map(|x| (*x).clone()).collect();
    push("all_degree_one", all, ones[0]);
    out
}

/// Outcome of one identity on one curve or configuration.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub identity: String,
    pub tag: String,
    pub subject: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(identity: impl Into<String>, tag: &str, subject: &str, passed: bool, detail: impl Into<String>) -> Self {
        Check {
            identity: identity.into(),
            tag: tag.to_string(),
            subject: subject.to_string(),
            passed,
            detail: detail.into(),
        }
    }
}

/// Largest `q^d` for which places of degree `d` are enumerated in [`check_curve`].
pub const PLACE_ENUMERATION_LIMIT: u128 = 1 << 20;

/// Hole enumeration is skipped above this many members of `S`.
pub const HOLE_ENUMERATION_LIMIT: usize = 16;

/// Runs every identity on `mc`, using `l` in place of the computed
/// L-polynomial when given (the test hook for a corrupted input).
pub fn check_curve(mc: &MatrixCurve, l: Option<&LPolynomial>, oracle: bool) -> Vec<Check> {
    let curve = &mc.curve;
    let l = l.unwrap_or(&mc.l);
    let g = curve.genus() as usize;
    let id = mc.id.as_str();
    let mut out = Vec::new();

    let predicted = l.predicted_counts(g + 1);
    let counted: Vec<BigInt> = (1..=g as u32 + 1).map(|n| BigInt::from(count_points(curve, n))).collect();
    out.push(Check::new("point_counts", "curve", id, predicted == counted, format!("predicted {predicted:?}, counted {counted:?}")));

    let hw = curve_bounds(l);
    out.push(Check::new("hasse_weil", "bound", id, hw.all_hold(), failure_names(&hw)));

    let order = 2 * g + 3;
    let empty = h_empty(l, order);
    out.push(Check::new("polynomial_identity", "structure", id, polynomial_identity_holds(l, &empty), ""));
    out.push(Check::new("zeta_convolution", "structure", id, zeta_convolution_holds(&empty, &zeta_series(l, order)), ""));

    // A_d(K) from the Euler product over enumerated places, d <= g + 2
    // as long as the places of degree d are cheap to list
    let top = (1..=g as u32 + 2)
        .take_while(|&d| (curve.q() as u128).pow(d) <= PLACE_ENUMERATION_LIMIT)
        .last()
        .unwrap_or(1);
    let a_places = effective_divisor_counts(curve, top);
    let zeta = zeta_series(l, top as usize);
    let bad: Vec<usize> = (0..=top as usize)
        .filter(|&d| {
            let sum: BigInt = (0..=d / 2).map(|r| zeta.a_r(r) * empty.coeff(d - 2 * r)).sum();
            &sum != a_places.coeff(d)
        })
        .collect();
    out.push(Check::new(
        "effective_divisors",
        "structure",
        id,
        bad.is_empty(),
        format!("checked d <= {top}; mismatch at d = {bad:?}"),
    ));

    let bad: Vec<usize> = (0..=g).filter(|&d| c_d_empty_closed(l, d).ok().as_ref() != Some(empty.coeff(d))).collect();
    out.push(Check::new("closed_form_empty", "closed-form", id, bad.is_empty(), format!("mismatch at d = {bad:?}")));

    let ones = enumerate_places(curve, 1);
    for (fixed, name) in [(true, "closed_form_base_ramified"), (false, "closed_form_base_split")] {
        let Some(p) = ones.iter().find(|p| p.is_fixed() == fixed) else {
            continue;
        };
        let series = h_base(&empty, p);
        let bad: Vec<String> = (0..=g)
            .filter_map(|d| {
                let closed = c_d_base_closed(l, d, fixed).ok()?;
                (&closed != series.coeff(d)).then(|| format!("d={d}: stated {closed}, series {}", series.coeff(d)))
            })
            .collect();
        out.push(Check::new(name, "closed-form", id, bad.is_empty(), bad.join("; ")));
    }

    let h = l.class_number();
    let low = if oracle { enumerate_places(curve, g as u32) } else { Vec::new() };
    for p in &ones {
        let series = h_base(&empty, p);
        let sum = series.partial_sum(g);
        let mut ok = sum == h;
        let mut detail = format!("sum {sum}, L(1) = {h}");
        if oracle {
            let res = enumerate_red_among(&low, std::slice::from_ref(p), g as u32, false);
            let total: u64 = res.counts.iter().sum();
            ok &= BigInt::from(total) == h;
            detail.push_str(&format!(", enumerated {total}"));
        }
        out.push(Check::new("mass_identity", "oracle", &format!("{id} [{p}]"), ok, detail));
    }

    for cfg in set_configurations(curve) {
        out.extend(check_configuration(curve, l, &empty, &low, &cfg, oracle, id));
    }
    out
}

fn failure_names(ledger: &crate::redcount::BoundLedger) -> String {
    ledger.failures().map(|c| format!("{}: {} > {}", c.name, c.lhs, c.rhs)).collect::<Vec<_>>().join("; ")
}

fn check_configuration(
    curve: &Curve,
    l: &LPolynomial,
    empty: &crate::redcount::RedSeries,
    low: &[Place],
    cfg: &NamedSet,
    oracle: bool,
    id: &str,
) -> Vec<Check> {
    let g = curve.genus() as usize;
    let s = &cfg.set;
    let subject = format!("{id} {}", cfg.name);
    let mut out = Vec::new();
    let full = transform_hs(empty, &s.stats());

    let forward = h_stepwise(empty, s.members());
    let reversed: Vec<Place> = s.members().iter().rev().cloned().collect();
    let backward = h_stepwise(empty, &reversed);
    out.push(Check::new(
        "stepwise_path_independence",
        "structure",
        &subject,
        forward.series == full.series && backward.series == full.series,
        "",
    ));

    if oracle {
        let res = enumerate_red_among(low, s.members(), g as u32, false);
        let series: Vec<BigInt> = (0..=g).map(|d| full.coeff(d).clone()).collect();
        let counted: Vec<BigInt> = res.counts.iter().map(|&c| BigInt::from(c)).collect();
        out.push(Check::new(
            "oracle_counts",
            "oracle",
            &subject,
            series == counted,
            format!("series {series:?}, enumerated {counted:?}"),
        ));
    }

    let all_one = s.members().iter().all(|p| p.degree() == 1);
    if all_one && !s.has_inert() {
        let bad: Vec<usize> = (0..=g)
            .filter(|&i| c_i_explicit_for(i, s.members(), l).ok().as_ref() != Some(full.coeff(i)))
            .collect();
        out.push(Check::new("closed_form_degree_one_set", "closed-form", &subject, bad.is_empty(), format!("mismatch at i = {bad:?}")));
    }

    let report = match hole_count(l, s) {
        Ok(r) => r,
        Err(e) => {
            out.push(Check::new("hole_count", "count", &subject, false, e.to_string()));
            return out;
        }
    };
    if g == 1 {
        let want = BigInt::from(report.degree_one as i64 - 1);
        out.push(Check::new(
            "genus_one_hole_count",
            "count",
            &subject,
            report.hole_count == want,
            format!("H = {}, |S_1| - 1 = {want}", report.hole_count),
        ));
    }
    match red_difference_decomposition(l, s) {
        Ok(dec) => out.push(Check::new(
            "hole_count_decomposition",
            "count",
            &subject,
            dec.reconstructed == report.hole_count && dec.deviation <= dec.deviation_bound,
            format!("rebuilt {}, deviation {} <= {}", dec.reconstructed, dec.deviation, dec.deviation_bound),
        )),
        Err(e) => out.push(Check::new("hole_count_decomposition", "count", &subject, false, e.to_string())),
    }
    let ledger = verify_bounds(&report, l);
    let applicable: Vec<_> = ledger.applicable().collect();
    out.push(Check::new(
        "bounds",
        "bound",
        &subject,
        applicable.iter().all(|c| c.holds),
        format!("{} applicable; {}", applicable.len(), failure_names(&ledger)),
    ));

    if oracle && all_one && s.len() <= HOLE_ENUMERATION_LIMIT {
        out.extend(check_holes(curve, low, cfg, &report.hole_count, &subject));
    }
    out
}

fn check_holes(curve: &Curve, low: &[Place], cfg: &NamedSet, hole_total: &BigInt, subject: &str) -> Vec<Check> {
    let g = curve.genus();
    let s = &cfg.set;
    let mut out = Vec::new();
    let reduced = enumerate_red_among(low, s.members(), g, true).divisors.unwrap_or_default();
    let mut bad = Vec::new();
    let mut total = BigInt::zero();
    let pair = cfg.name == "conjugate_pair";
    for d in &reduced {
        let (Ok(ctx), Ok(hole)) = (hole_context(s, d, g), enumerate_hole(d, s, g)) else {
            bad.push(format!("{d}: context or enumeration failed"));
            continue;
        };
        let size = hole_size(&ctx);
        let counted = BigInt::from(hole.len());
        if size != counted || (pair && size != BigInt::from(g - d.degree())) {
            bad.push(format!("{d}: formula {size}, enumerated {counted}"));
        }
        total += counted;
    }
    out.push(Check::new("hole_sizes", "oracle", subject, bad.is_empty(), bad.join("; ")));
    out.push(Check::new(
        "hole_partition",
        "oracle",
        subject,
        &total == hole_total,
        format!("sum of hole sizes {total}, H = {hole_total}"),
    ));
    match max_hole_check(s, &reduced, g) {
        Ok(MaxHoleVerdict::Violated(msg)) => out.push(Check::new("largest_hole", "oracle", subject, false, msg)),
        Ok(MaxHoleVerdict::Confirmed { size, runner_up }) => out.push(Check::new(
            "largest_hole",
            "oracle",
            subject,
            true,
            format!("|h(0)| = {size}, next {runner_up}"),
        )),
        Ok(MaxHoleVerdict::Skipped(_)) => {}
        Err(e) => out.push(Check::new("largest_hole", "oracle", subject, false, e.to_string())),
    }
    out
}

/// `L` with `a_1` moved by one, kept only if it still passes validation.
pub fn corrupt_l_polynomial(l: &LPolynomial) -> Option<LPolynomial> {
    let g = l.genus() as usize;
    for shift in [1i64, -1, 2, -2] {
        let mut lower: Vec<BigInt> = l.coeffs()[..=g].to_vec();
        lower[1] += shift;
        if let Ok(bad) = LPolynomial::from_lower_half(l.q(), l.genus(), &lower) {
            return Some(bad);
        }
    }
    None
}

/// One row of the hole-size sweep: the ramified point at infinity as base,
/// `|S| - 1` lone split degree-one members and `D = 0`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub q: u64,
    pub genus: u32,
    pub f_id: String,
    pub set_size: u32,
    pub degree_one: u32,
    pub hole_count: String,
    pub main_term: f64,
    pub ratio: f64,
    pub target_ratio: f64,
    /// `main_bound - |H - main term|`; negative means the deviation bound fails.
    pub bound_slack: f64,
    pub slack: u32,
    pub hole_size: String,
    pub asymptotic_ratio: f64,
}

pub const SWEEP_HEADER: [&str; 13] = [
    "q",
    "g",
    "f_id",
    "set_size",
    "degree_one",
    "hole_count",
    "main_term",
    "ratio",
    "target_ratio",
    "bound_slack",
    "slack",
    "hole_size",
    "asymptotic_ratio",
];

fn rat_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Odd-degree curve with monic `f` and the most split degree-one pairs among a
/// seeded sample; stops early once `wanted` pairs are available.
pub fn sweep_curve(q: u64, genus: u32, wanted: usize, seed: u64) -> Option<(Vec<i64>, Curve, Vec<Place>)> {
    let mut rng = ChaCha8Rng::seed_from_u64(stream_seed(seed, q, genus, 0x5157));
    let mut best: Option<(Vec<i64>, Curve, Vec<Place>)> = None;
    for _ in 0..64 {
        let coeffs = sample_coefficients(q, genus, Shape::OddSquare, &mut rng);
        let Ok(curve) = validate_curve(q, &coeffs, genus as i64) else {
            continue;
        };
        let reps: Vec<Place> = enumerate_places(&curve, 1)
            .into_iter()
            .filter(|p| p.splitting() == Splitting::Split && !p.is_infinite() && *p < sigma(p))
            .collect();
        if best.as_ref().is_none_or(|b| reps.len() > b.2.len()) {
            let enough = reps.len() >= wanted;
            best = Some((coeffs, curve, reps));
            if enough {
                break;
            }
        }
    }
    best
}

/// Sweep rows for every `(q, g, |S|)` that fits, computed in parallel and
/// ordered by `(q, g, |S|)`.
pub fn sweep(qs: &[u64], genera: &[u32], sizes: &[u32], seed: u64) -> Result<Vec<SweepRow>, CurveError> {
    let max_size = sizes.iter().copied().max().unwrap_or(1) as usize;
    let keys: Vec<(u64, u32)> = qs.iter().flat_map(|&q| genera.iter().map(move |&g| (q, g))).collect();
    let parts: Result<Vec<Vec<SweepRow>>, CurveError> = keys
        .par_iter()
        .map(|&(q, g)| {
            let Some((coeffs, curve, reps)) = sweep_curve(q, g, max_size.saturating_sub(1), seed) else {
                return Ok(Vec::new());
            };
            let l = l_polynomial_of(&curve)?;
            let inf = enumerate_places(&curve, 1).into_iter().find(|p| p.is_infinite()).expect("odd degree");
            let f_id = coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",");
            let mut rows = Vec::new();
            for &size in sizes {
                let m = size.saturating_sub(1) as usize;
                if size == 0 || m > reps.len() {
                    continue;
                }
                let mut members = vec![inf.clone()];
                members.extend(reps[..m].iter().cloned());
                let s = PlaceSet::new(members, inf.clone()).expect("distinct places");
                let report = hole_count(&l, &s).map_err(|e| CurveError::InconsistentCounts(e.to_string()))?;
                let ctx: HoleContext = hole_context(&s, &Divisor::zero(), g).expect("zero is reduced");
                rows.push(SweepRow {
                    q,
                    genus: g,
                    f_id: f_id.clone(),
                    set_size: report.set_size,
                    degree_one: report.degree_one,
                    hole_count: report.hole_count.to_string(),
                    main_term: rat_f64(&report.main_term),
                    ratio: rat_f64(&report.ratio),
                    target_ratio: rat_f64(&report.target_ratio),
                    bound_slack: report.main_bound.to_f64() - rat_f64(&report.deviation),
                    slack: ctx.slack,
                    hole_size: hole_size(&ctx).to_string(),
                    asymptotic_ratio: rat_f64(&asymptotic_ratio(&ctx)),
                });
            }
            Ok(rows)
        })
        .collect();
    let mut rows: Vec<SweepRow> = parts?.into_iter().flatten().collect();
    rows.sort_by_key(|r| (r.q, r.genus, r.set_size));
    Ok(rows)
}

/// Writes rows as CSV with [`SWEEP_HEADER`]; the header is written even for no rows.
pub fn write_sweep_csv<W: std::io::Write>(rows: &[SweepRow], out: W) -> Result<(), csv::Error> {
    let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(out);
    w.write_record(SWEEP_HEADER)?;
    for r in rows {
        w.write_record([
            r.q.to_string(),
            r.genus.to_string(),
            r.f_id.clone(),
            r.set_size.to_string(),
            r.degree_one.to_string(),
            r.hole_count.clone(),
            format!("{:.6}", r.main_term),
            format!("{:.6}", r.ratio),
            format!("{:.6}", r.target_ratio),
            format!("{:.6}", r.bound_slack),
            r.slack.to_string(),
            r.hole_size.clone(),
            format!("{:.6}", r.asymptotic_ratio),
        ])?;
    }
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn non_residues() {
        assert_eq!(least_non_residue(3), 2);
        assert_eq!(least_non_residue(7), 3);
        assert_eq!(least_non_residue(17), 3);
    }

    #[test]
    fn matrix_is_reproducible_and_covers_shapes() {
        let a = matrix_curves(5, 2, 1, 7).unwrap();
        let b = matrix_curves(5, 2, 1, 7).unwrap();
        assert_eq!(a.len(), 4);
        assert_eq!(a.iter().map(|m| &m.coeffs).collect::<Vec<_>>(), b.iter().map(|m| &m.coeffs).collect::<Vec<_>>());
        for mc in &a {
            assert_eq!(mc.curve.has_odd_degree(), mc.shape.is_odd());
            assert_eq!(mc.curve.leading_is_square(), mc.shape.is_square());
        }
    }

    #[test]
    fn configurations_and_checks_on_one_curve() {
        let mc = &matrix_curves(3, 1, 1, 1).unwrap()[0];
        let cfgs = set_configurations(&mc.curve);
        assert!(cfgs.len() >= 5, "{:?}", cfgs.iter().map(|c| c.name).collect::<Vec<_>>());
        let checks = check_curve(mc, None, true);
        let failed: Vec<_> = checks.iter().filter(|c| !c.passed).collect();
        assert!(failed.is_empty(), "{failed:?}");
    }

    #[test]
    fn corrupted_l_polynomial_is_caught() {
        let mc = &matrix_curves(5, 1, 1, 3).unwrap()[0];
        let bad = corrupt_l_polynomial(&mc.l).unwrap();
        let checks = check_curve(mc, Some(&bad), true);
        assert!(checks.iter().any(|c| c.identity == "point_counts" && !c.passed));
    }

    #[test]
    fn empty_sweep_has_header_only() {
        let rows = sweep(&[], &[1], &[4], 1).unwrap();
        let mut buf = Vec::new();
        write_sweep_csv(&rows, &mut buf).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap().trim_end(), SWEEP_HEADER.join(","));
    }

    #[test]
    fn sweep_rows_follow_the_family() {
        let rows = sweep(&[13], &[1, 2], &[2, 4], 5).unwrap();
        assert!(!rows.is_empty());
        for r in &rows {
            let m = (r.set_size - 1) as f64;
            let expect = if r.genus == 1 { m / (m + 1.0) } else { 1.0 + (m - 1.0) / ((m + 1.0) * (m + 1.0)) };
            assert!((r.asymptotic_ratio - expect).abs() < 1e-12);
        }
    }
}
