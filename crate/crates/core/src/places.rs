//! Places of `K = F_q(x, y)` lying over the places of `R = F_q(x)`, the
//! hyperelliptic involution on them, and statistics of finite place sets.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use thiserror::Error;

use crate::algebra::{monic_irreducibles, FieldCtx, Poly};
use crate::curve::Curve;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PlaceError {
    #[error("cannot parse place descriptor '{0}'")]
    Syntax(String),
    #[error("'{0}' is not a monic irreducible polynomial")]
    NotIrreducible(String),
    #[error("place over {locus} is {actual}, descriptor asked for {wanted}")]
    SplittingMismatch {
        locus: String,
        actual: Splitting,
        wanted: String,
    },
    #[error("branch {branch} does not satisfy branch^2 = f mod {locus}")]
    BadBranch { locus: String, branch: String },
    #[error("place over {0} is split; name one branch")]
    Ambiguous(String),
    #[error("base place {0} is not a member of S")]
    BaseNotMember(String),
    #[error("base place {0} does not have degree one")]
    BaseNotDegreeOne(String),
    #[error("place {0} listed twice")]
    Duplicate(String),
    #[error("empty place list")]
    Empty,
}

/// How a place of `R` behaves in `K`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Splitting {
    Split,
    Ramified,
    Inert,
}

impl fmt::Display for Splitting {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Splitting::Split => "split",
            Splitting::Ramified => "ramified",
            Splitting::Inert => "inert",
        })
    }
}

/// Place of `R` underneath a place of `K`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Locus {
    Infinite,
    Finite(Poly),
}

/// Which place above the locus: the unique one, or a branch `y = ±s`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Branch {
    Ramified,
    Inert,
    Plus,
    Minus,
    /// `y ≡ s mod u` with `s^2 ≡ f mod u`, `deg s < deg u`.
    Root(Poly),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Place {
    locus: Locus,
    branch: Branch,
    degree: u32,
    splitting: Splitting,
}

impl Place {
    pub fn locus(&self) -> &Locus {
        &self.locus
    }

    pub fn branch(&self) -> &Branch {
        &self.branch
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn splitting(&self) -> Splitting {
        self.splitting
    }

    pub fn is_infinite(&self) -> bool {
        self.locus == Locus::Infinite
    }

    /// The irreducible `u` under a finite place.
    pub fn u(&self) -> Option<&Poly> {
        match &self.locus {
            Locus::Finite(u) => Some(u),
            Locus::Infinite => None,
        }
    }

    pub fn is_fixed(&self) -> bool {
        self.splitting != Splitting::Split
    }

    /// Parses a descriptor and resolves it against the curve.
    ///
    /// Accepted forms: `inf`, `inf+`, `inf-`, `u=<coeffs>;branch=<coeffs>`,
    /// `u=<coeffs>;branch=ram`, `u=<coeffs>;branch=inert`, and `u=<coeffs>`
    /// when only one place lies above `u`.
    pub fn parse(curve: &Curve, text: &str) -> Result<Place, PlaceError> {
        let text = text.trim();
        let syntax = || PlaceError::Syntax(text.to_string());
        if let Some(rest) = text.strip_prefix("inf") {
            let above = infinite_places(curve);
            let wanted = match rest {
                "" => None,
                "+" => Some(Branch::Plus),
                "-" => Some(Branch::Minus),
                _ => return Err(syntax()),
            };
            return pick(above, wanted, "inf", rest);
        }
        let rest = text.strip_prefix("u=").ok_or_else(syntax)?;
        let (u_text, branch_text) = match rest.split_once(';') {
            Some((u, b)) => (u, Some(b.strip_prefix("branch=").ok_or_else(syntax)?)),
            None => (rest, None),
        };
        let q = curve.q();
        let u = Poly::parse(q, u_text).map_err(|_| syntax())?;
        if u.degree().unwrap_or(0) == 0 || !u.is_monic() || !u.is_irreducible() {
            return Err(PlaceError::NotIrreducible(u_text.to_string()));
        }
        let above = classify_r_place(curve, &u);
        let locus = format!("u={}", u.to_coeff_string());
        match branch_text {
            None => pick(above, None, &locus, ""),
            Some("ram") => pick(above, Some(Branch::Ramified), &locus, "ram"),
            Some("inert") => pick(above, Some(Branch::Inert), &locus, "inert"),
            Some(b) => {
                let s = Poly::parse(q, b).map_err(|_| syntax())?.rem(&u);
                if above.splitting != Splitting::Split {
                    return Err(PlaceError::SplittingMismatch {
                        locus,
                        actual: above.splitting,
                        wanted: "split".to_string(),
                    });
                }
                above
                    .places
                    .into_iter()
                    .find(|p| p.branch == Branch::Root(s.clone()))
                    .ok_or(PlaceError::BadBranch {
                        locus,
                        branch: b.to_string(),
                    })
            }
        }
    }

    fn sort_key(&self) -> (bool, u32, Option<&Poly>, &Branch) {
        (!self.is_infinite(), self.degree, self.u(), &self.branch)
    }
}

fn pick(above: PlacesAbove, wanted: Option<Branch>, locus: &str, tag: &str) -> Result<Place, PlaceError> {
    let splitting = above.splitting;
    match wanted {
        None if splitting == Splitting::Split => Err(PlaceError::Ambiguous(locus.to_string())),
        None => Ok(above.places.into_iter().next().expect("one place above")),
        Some(b) => above
            .places
            .into_iter()
            .find(|p| p.branch == b)
            .ok_or_else(|| PlaceError::SplittingMismatch {
                locus: locus.to_string(),
                actual: splitting,
                wanted: tag.to_string(),
            }),
    }
}

impl Ord for Place {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl PartialOrd for Place {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Descriptor form, parseable by [`Place::parse`].
impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.locus, &self.branch) {
            (Locus::Infinite, Branch::Plus) => f.write_str("inf+"),
            (Locus::Infinite, Branch::Minus) => f.write_str("inf-"),
            (Locus::Infinite, _) => f.write_str("inf"),
            (Locus::Finite(u), b) => {
                write!(f, "u={};branch=", u.to_coeff_string())?;
                match b {
                    Branch::Ramified => f.write_str("ram"),
                    Branch::Inert => f.write_str("inert"),
                    Branch::Root(s) => f.write_str(&s.to_coeff_string()),
                    Branch::Plus | Branch::Minus => unreachable!("sign tags are infinite only"),
                }
            }
        }
    }
}

/// The places of `K` above one place of `R`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlacesAbove {
    pub splitting: Splitting,
    pub places: Vec<Place>,
}

/// Decomposition of the finite place `u` of `R` in `K`.
pub fn classify_r_place(curve: &Curve, u: &Poly) -> PlacesAbove {
    let du = u.degree().expect("nonconstant u") as u32;
    let locus = Locus::Finite(u.clone());
    let residue = FieldCtx::with_modulus(u).expect("u monic irreducible");
    let fu = curve.f().reduce_into(&residue);
    if fu.is_zero() {
        return PlacesAbove {
            splitting: Splitting::Ramified,
            places: vec![Place {
                locus,
                branch: Branch::Ramified,
                degree: du,
                splitting: Splitting::Ramified,
            }],
        };
    }
    match fu.sqrt() {
        Some(s) => {
            let mut places: Vec<Place> = [s.clone(), -&s]
                .iter()
                .map(|r| Place {
                    locus: locus.clone(),
                    branch: Branch::Root(r.to_poly()),
                    degree: du,
                    splitting: Splitting::Split,
                })
                .collect();
            places.sort();
            PlacesAbove {
                splitting: Splitting::Split,
                places,
            }
        }
        None => PlacesAbove {
            splitting: Splitting::Inert,
            places: vec![Place {
                locus,
                branch: Branch::Inert,
                degree: 2 * du,
                splitting: Splitting::Inert,
            }],
        },
    }
}

/// Places of `K` above `x = ∞`.
pub fn infinite_places(curve: &Curve) -> PlacesAbove {
    let one = |branch, degree, splitting| Place {
        locus: Locus::Infinite,
        branch,
        degree,
        splitting,
    };
    if curve.has_odd_degree() {
        PlacesAbove {
            splitting: Splitting::Ramified,
            places: vec![one(Branch::Ramified, 1, Splitting::Ramified)],
        }
    } else if curve.leading_is_square() {
        PlacesAbove {
            splitting: Splitting::Split,
            places: vec![
                one(Branch::Plus, 1, Splitting::Split),
                one(Branch::Minus, 1, Splitting::Split),
            ],
        }
    } else {
        PlacesAbove {
            splitting: Splitting::Inert,
            places: vec![one(Branch::Inert, 2, Splitting::Inert)],
        }
    }
}

/// Every place of `K` of degree at most `max_degree`, in canonical order.
pub fn enumerate_places(curve: &Curve, max_degree: u32) -> Vec<Place> {
    assert!(max_degree >= 1, "degree bound must be positive");
    let mut out: Vec<Place> = infinite_places(curve)
        .places
        .into_iter()
        .filter(|p| p.degree <= max_degree)
        .collect();
    for d in 1..=max_degree as usize {
        let us = monic_irreducibles(curve.field(), d);
        let found: Vec<Place> = us
            .par_iter()
            .flat_map_iter(|u| classify_r_place(curve, u).places)
            .filter(|p| p.degree <= max_degree)
            .collect();
        out.extend(found);
    }
    out.sort();
    out
}

/// The hyperelliptic involution `y -> -y`.
pub fn sigma(place: &Place) -> Place {
    let branch = match (&place.branch, &place.locus) {
        (Branch::Plus, _) => Branch::Minus,
        (Branch::Minus, _) => Branch::Plus,
        (Branch::Root(s), Locus::Finite(u)) => Branch::Root(s.neg().rem(u)),
        (b, _) => b.clone(),
    };
    Place {
        branch,
        ..place.clone()
    }
}

/// A finite set `S` of places with a distinguished degree-one member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaceSet {
    members: Vec<Place>,
    base: Place,
}

impl PlaceSet {
    pub fn new(mut members: Vec<Place>, base: Place) -> Result<Self, PlaceError> {
        if members.is_empty() {
            return Err(PlaceError::Empty);
        }
        members.sort();
        if let Some(w) = members.windows(2).find(|w| w[0] == w[1]) {
            return Err(PlaceError::Duplicate(w[0].to_string()));
        }
        if !members.contains(&base) {
            return Err(PlaceError::BaseNotMember(base.to_string()));
        }
        if base.degree != 1 {
            return Err(PlaceError::BaseNotDegreeOne(base.to_string()));
        }
        Ok(PlaceSet { members, base })
    }

    pub fn members(&self) -> &[Place] {
        &self.members
    }

    pub fn base(&self) -> &Place {
        &self.base
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, p: &Place) -> bool {
        self.members.binary_search(p).is_ok()
    }

    pub fn has_inert(&self) -> bool {
        self.members.iter().any(|p| p.splitting == Splitting::Inert)
    }

    pub fn max_degree(&self) -> u32 {
        self.members.iter().map(|p| p.degree).max().unwrap_or(0)
    }

    pub fn stats(&self) -> PlaceSetStats {
        stats(&self.members)
    }
}

/// Counts of one degree: fixed members, conjugate pairs, and lone split members.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct DegreeStats {
    pub fixed: u32,
    pub pairs: u32,
    pub lone: u32,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PlaceSetStats {
    pub by_degree: BTreeMap<u32, DegreeStats>,
    pub inert: u32,
    pub size: u32,
    pub degree_one: u32,
}

impl PlaceSetStats {
    pub fn at(&self, degree: u32) -> DegreeStats {
        self.by_degree.get(&degree).copied().unwrap_or_default()
    }
}

/// `n_i`, `ℓ_i`, `m_i` of a set of places; inert members are only counted in `inert`.
pub fn stats(members: &[Place]) -> PlaceSetStats {
    let mut out = PlaceSetStats {
        size: members.len() as u32,
        degree_one: members.iter().filter(|p| p.degree == 1).count() as u32,
        ..Default::default()
    };
    let mut paired = 0u32;
    for p in members {
        let slot = out.by_degree.entry(p.degree).or_default();
        match p.splitting {
            Splitting::Inert => out.inert += 1,
            Splitting::Ramified => slot.fixed += 1,
            Splitting::Split => {
                if members.contains(&sigma(p)) {
                    slot.pairs += 1;
                    paired += 1;
                } else {
                    slot.lone += 1;
                }
            }
        }
    }
    debug_assert!(paired % 2 == 0);
    for s in out.by_degree.values_mut() {
        s.pairs /= 2;
    }
    out.by_degree.retain(|_, s| *s != DegreeStats::default());
    out
}

/// Splits a list of descriptors. Commas also separate polynomial
/// coefficients, so a new descriptor starts only at `inf` or `u=`.
pub fn split_descriptors(text: &str) -> Vec<String> {
    let mut out: Vec<String> = Vec::new();
    for piece in text.split(',') {
        let trimmed = piece.trim();
        if trimmed.starts_with("inf") || trimmed.starts_with("u=") || out.is_empty() {
            out.push(trimmed.to_string());
        } else {
            let last = out.last_mut().expect("nonempty");
            last.push(',');
            last.push_str(trimmed);
        }
    }
    out.retain(|s| !s.is_empty());
    out
}

pub fn parse_place_list(curve: &Curve, text: &str) -> Result<Vec<Place>, PlaceError> {
    split_descriptors(text)
        .iter()
        .map(|d| Place::parse(curve, d))
        .collect()
}
