//! The `analyze` pipeline and its serializable report.

use std::time::Instant;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::curve::{l_polynomial, validate_curve, PointCounts};
use crate::holesize::{hole_context, hole_size};
use crate::matrix::HOLE_ENUMERATION_LIMIT;
use crate::oracle::{enumerate_hole, enumerate_red};
use crate::places::{enumerate_places, parse_place_list, Locus, Place, PlaceSet};
use crate::redcount::{default_truncation, h_base, h_empty, hole_count_with, transform_hs, verify_bounds};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnalyzeConfig {
    pub q: u64,
    pub f: Vec<i64>,
    pub genus: i64,
    /// Descriptor lists; each entry may hold several comma-separated descriptors.
    pub set: Vec<String>,
    pub base: String,
    pub oracle: bool,
    pub truncation: Option<usize>,
    pub place_bound: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveEcho {
    pub q: u64,
    pub f: Vec<i64>,
    pub genus: u32,
    pub degree: usize,
    pub leading_is_square: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlaceRow {
    pub descriptor: String,
    pub degree: u32,
    pub splitting: String,
    pub below: String,
}

impl PlaceRow {
    pub fn of(p: &Place) -> Self {
        PlaceRow {
            descriptor: p.to_string(),
            degree: p.degree(),
            splitting: p.splitting().to_string(),
            below: match p.locus() {
                Locus::Infinite => "inf".to_string(),
                Locus::Finite(u) => u.to_string(),
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeRow {
    pub degree: u32,
    pub fixed: u32,
    pub pairs: u32,
    pub lone: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SetEcho {
    pub members: Vec<String>,
    pub base: String,
    pub size: u32,
    pub degree_one: u32,
    pub inert: u32,
    pub by_degree: Vec<DegreeRow>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HoleCountSection {
    pub hole_count: String,
    pub class_number: String,
    pub main_term: String,
    pub deviation: String,
    pub main_bound: f64,
    pub ratio: String,
    pub target_ratio: String,
    pub ratio_bound: f64,
    pub large_field: bool,
    pub has_inert: bool,
    pub hypotheses_hold: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HoleRow {
    pub divisor: String,
    pub formula: String,
    pub enumerated: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleSection {
    pub enumerated_counts: Vec<u64>,
    pub enumerated_base_total: u64,
    /// Missing when hole sizes were not enumerated (some member has degree > 1,
    /// or `S` is larger than the enumeration limit).
    pub hole_sizes: Option<Vec<HoleRow>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundRow {
    pub name: String,
    pub applicable: bool,
    pub holds: bool,
    pub lhs: f64,
    pub rhs: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Timings {
    pub point_counts_ms: f64,
    pub places_ms: f64,
    pub series_ms: f64,
    pub oracle_ms: f64,
    pub total_ms: f64,
}

/// Everything `analyze` computes. Integers that may exceed 64 bits are decimal strings.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub schema: u32,
    pub curve: CurveEcho,
    pub point_counts: Vec<String>,
    pub l_polynomial: Vec<String>,
    pub class_number: String,
    pub place_bound: u32,
    pub places: Vec<PlaceRow>,
    pub set: SetEcho,
    pub truncation: usize,
    /// `C_0(∅), ..., C_trunc(∅)`.
    pub empty_counts: Vec<String>,
    /// `C_0({𝔭}), ..., C_g({𝔭})`.
    pub base_counts: Vec<String>,
    /// `C_0(S), ..., C_trunc(S)`.
    pub set_counts: Vec<String>,
    pub holes: HoleCountSection,
    pub oracle: Option<OracleSection>,
    pub oracle_match: Option<bool>,
    pub bounds: Vec<BoundRow>,
    /// Internal-consistency failures; nonempty means exit status 2.
    pub problems: Vec<String>,
    pub timings: Timings,
}

impl AnalysisReport {
    pub fn is_consistent(&self) -> bool {
        self.problems.is_empty()
    }

    /// Copy with the timing fields zeroed, for comparing runs.
    pub fn without_timings(&self) -> AnalysisReport {
        AnalysisReport {
            timings: Timings {
                point_counts_ms: 0.0,
                places_ms: 0.0,
                series_ms: 0.0,
                oracle_ms: 0.0,
                total_ms: 0.0,
            },
            ..self.clone()
        }
    }
}

fn strings<T: ToString>(v: impl IntoIterator<Item = T>) -> Vec<String> {
    v.into_iter().map(|x| x.to_string()).collect()
}

fn ms(t: Instant) -> f64 {
    t.elapsed().as_secs_f64() * 1e3
}

/// Validate, count, build `L`, classify places, compute `h_S` and the hole
/// count, and optionally cross-check against enumeration.
///
/// `Err` carries an input error (exit status 1).
pub fn analyze(cfg: &AnalyzeConfig) -> Result<AnalysisReport, String> {
    let start = Instant::now();
    let curve = validate_curve(cfg.q, &cfg.f, cfg.genus).map_err(|e| e.to_string())?;
    let g = curve.genus();

    let t = Instant::now();
    let counts = PointCounts::compute(&curve, g);
    let l = l_polynomial(&curve, &counts).map_err(|e| e.to_string())?;
    let point_counts_ms = ms(t);

    let t = Instant::now();
    if cfg.place_bound == 0 {
        return Err("place bound must be at least 1".to_string());
    }
    let places = enumerate_places(&curve, cfg.place_bound);
    let mut members = Vec::new();
    for entry in &cfg.set {
        members.extend(parse_place_list(&curve, entry).map_err(|e| e.to_string())?);
    }
    let base = Place::parse(&curve, &cfg.base).map_err(|e| e.to_string())?;
    let s = PlaceSet::new(members, base).map_err(|e| e.to_string())?;
    let places_ms = ms(t);

    let t = Instant::now();
    let order = cfg.truncation.unwrap_or_else(|| default_truncation(g)).max(g as usize);
    let empty = h_empty(&l, order);
    let base_series = h_base(&empty, s.base());
    let full = transform_hs(&empty, &s.stats());
    let report = hole_count_with(&l, &s, order).map_err(|e| e.to_string())?;
    let ledger = verify_bounds(&report, &l);
    let series_ms = ms(t);

    let mut problems: Vec<String> = ledger
        .failures()
        .map(|c| format!("bound {} fails: {} > {}", c.name, c.lhs, c.rhs))
        .collect();

    let t = Instant::now();
    let (oracle, oracle_match) = if cfg.oracle {
        let res = enumerate_red(&curve, s.members(), g, false).map_err(|e| e.to_string())?;
        let base_res = enumerate_red(&curve, std::slice::from_ref(s.base()), g, false).map_err(|e| e.to_string())?;
        let base_total: u64 = base_res.counts.iter().sum();
        let mut ok = true;
        for (d, &c) in res.counts.iter().enumerate() {
            if BigInt::from(c) != *full.coeff(d) {
                ok = false;
                problems.push(format!("C_{d}(S): series {}, enumerated {c}", full.coeff(d)));
            }
        }
        if BigInt::from(base_total) != report.class_number {
            ok = false;
            problems.push(format!("reduced divisors for the base: {base_total}, class number {}", report.class_number));
        }
        let hole_sizes = if s.members().iter().all(|p| p.degree() == 1) && s.len() <= HOLE_ENUMERATION_LIMIT {
            let reduced = enumerate_red(&curve, s.members(), g, true)
                .map_err(|e| e.to_string())?
                .divisors
                .unwrap_or_default();
            let mut rows = Vec::new();
            let mut total = BigInt::from(0);
            for d in &reduced {
                let ctx = hole_context(&s, d, g).map_err(|e| e.to_string())?;
                let formula = hole_size(&ctx);
                let enumerated = enumerate_hole(d, &s, g).map_err(|e| e.to_string())?.len() as u64;
                if formula != BigInt::from(enumerated) {
                    ok = false;
                    problems.push(format!("hole of {d}: formula {formula}, enumerated {enumerated}"));
                }
                total += enumerated;
                rows.push(HoleRow {
                    divisor: d.to_string(),
                    formula: formula.to_string(),
                    enumerated,
                });
            }
            if total != report.hole_count {
                ok = false;
                problems.push(format!("hole sizes sum to {total}, hole count {}", report.hole_count));
            }
            Some(rows)
        } else {
            None
        };
        (
            Some(OracleSection {
                enumerated_counts: res.counts,
                enumerated_base_total: base_total,
                hole_sizes,
            }),
            Some(ok),
        )
    } else {
        (None, None)
    };
    let oracle_ms = ms(t);

    let st = s.stats();
    Ok(AnalysisReport {
        schema: SCHEMA_VERSION,
        curve: CurveEcho {
            q: curve.q(),
            f: cfg.f.clone(),
            genus: g,
            degree: curve.f().degree().unwrap_or(0),
            leading_is_square: curve.leading_is_square(),
        },
        point_counts: strings(counts.as_slice().iter()),
        l_polynomial: strings(l.coeffs().iter()),
        class_number: l.class_number().to_string(),
        place_bound: cfg.place_bound,
        places: places.iter().map(PlaceRow::of).collect(),
        set: SetEcho {
            members: strings(s.members().iter()),
            base: s.base().to_string(),
            size: st.size,
            degree_one: st.degree_one,
            inert: st.inert,
            by_degree: st
                .by_degree
                .iter()
                .map(|(&degree, d)| DegreeRow {
                    degree,
                    fixed: d.fixed,
                    pairs: d.pairs,
                    lone: d.lone,
                })
                .collect(),
        },
        truncation: order,
        empty_counts: strings(empty.series.coeffs().iter()),
        base_counts: strings((0..=g as usize).map(|d| base_series.coeff(d))),
        set_counts: strings(full.series.coeffs().iter()),
        holes: HoleCountSection {
            hole_count: report.hole_count.to_string(),
            class_number: report.class_number.to_string(),
            main_term: report.main_term.to_string(),
            deviation: report.deviation.to_string(),
            main_bound: report.main_bound.to_f64(),
            ratio: report.ratio.to_string(),
            target_ratio: report.target_ratio.to_string(),
            ratio_bound: report.ratio_bound.to_f64(),
            large_field: report.large_field,
            has_inert: report.has_inert,
            hypotheses_hold: report.hypotheses_hold(),
        },
        oracle,
        oracle_match,
        bounds: ledger
            .checks
            .iter()
            .map(|c| BoundRow {
                name: c.name.clone(),
                applicable: c.applicable,
                holds: c.holds,
                lhs: c.lhs,
                rhs: c.rhs,
            })
            .collect(),
        problems,
        timings: Timings {
            point_counts_ms,
            places_ms,
            series_ms,
            oracle_ms,
            total_ms: ms(start),
        },
    })
}

/// Plain-text rendering of a report.
pub fn render_text(r: &AnalysisReport) -> String {
    let mut out = String::new();
    let c = &r.curve;
    out.push_str(&format!("curve       y^2 = f(x), f = {:?} over F_{} (g = {})\n", c.f, c.q, c.genus));
    out.push_str(&format!("L(t)        {}\n", r.l_polynomial.join(" ")));
    out.push_str(&format!("class no.   {}\n", r.class_number));
    out.push_str(&format!("places      {} of degree <= {}\n", r.places.len(), r.place_bound));
    for p in &r.places {
        out.push_str(&format!("  {:<28} deg {}  {}\n", p.descriptor, p.degree, p.splitting));
    }
    out.push_str(&format!("S           {} (base {})\n", r.set.members.join(" "), r.set.base));
    out.push_str(&format!("|S| = {}, |S_1| = {}, inert = {}\n", r.set.size, r.set.degree_one, r.set.inert));
    let g = c.genus as usize;
    out.push_str(&format!("C(S)        {}\n", r.set_counts[..=g].join(" ")));
    out.push_str(&format!("C(base)     {}\n", r.base_counts.join(" ")));
    let h = &r.holes;
    out.push_str(&format!("H           {}  (main term {}, ratio H/h = {}, target {})\n", h.hole_count, h.main_term, h.ratio, h.target_ratio));
    out.push_str(&format!("hypotheses  {}\n", if h.hypotheses_hold { "hold" } else { "not met" }));
    let applicable = r.bounds.iter().filter(|b| b.applicable).count();
    let failing = r.bounds.iter().filter(|b| !b.holds).count();
    out.push_str(&format!("bounds      {applicable} applicable, {failing} failing\n"));
    if let Some(m) = r.oracle_match {
        out.push_str(&format!("oracle      {}\n", if m { "match" } else { "MISMATCH" }));
    }
    if let Some(rows) = r.oracle.as_ref().and_then(|o| o.hole_sizes.as_ref()) {
        for row in rows {
            out.push_str(&format!("  |h({})| = {}\n", row.divisor, row.enumerated));
        }
    }
    for p in &r.problems {
        out.push_str(&format!("problem     {p}\n"));
    }
    out
}
