//! Open gap sets: finite unions of open intervals, optionally extended by a
//! self-similar geometric family of gaps.
//!
//! A family with ratio `λ > 1` and seed `a₀ > 0` produces the gap intervals
//! `(λʲ aⱼ, λʲ aⱼ₊₁)` where `aₙ = λa₀ − (½)ⁿ(λ−1)a₀`; a negative seed `b₀ < 0`
//! produces the mirrored gaps `(λʲ bⱼ₊₁, λʲ bⱼ)`.  Endpoints always come from
//! the closed form, never from the recurrence, so deep indices carry no drift.
//! The `part` field keeps only the inner or outer half of every gap, which is
//! how a family can be split across two zero sets.

use crate::error::{Error, Result};
use crate::interval::Interval;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyPart {
    Full,
    FirstHalf,
    SecondHalf,
}

#[derive(Debug, Clone, PartialEq)]
pub struct GeometricGapFamily {
    pub lambda: f64,
    pub seed: f64,
    pub depth: u32,
    pub part: FamilyPart,
}

impl GeometricGapFamily {
    pub fn new(lambda: f64, seed: f64, depth: u32, part: FamilyPart) -> Result<Self> {
        if !(lambda.is_finite() && lambda > 1.0) {
            return Err(Error::InvalidGapSet(format!("family ratio must exceed 1, got {lambda}")));
        }
        if !(seed.is_finite() && seed != 0.0) {
            return Err(Error::InvalidGapSet(format!("family seed must be finite nonzero, got {seed}")));
        }
        if depth == 0 {
            return Err(Error::InvalidGapSet("family depth must be at least 1".into()));
        }
        Ok(Self { lambda, seed, depth, part })
    }

    /// `n`-th inner endpoint, `λ·seed − (½)ⁿ(λ−1)·seed`, in closed form.
    pub fn endpoint(&self, n: u32) -> f64 {
        self.lambda * self.seed - 0.5f64.powi(n as i32) * (self.lambda - 1.0) * self.seed
    }

    /// The full `j`-th gap interval, ignoring `part`.
    pub fn base_interval(&self, j: u32) -> Interval {
        let scale = self.lambda.powi(j as i32);
        let (e0, e1) = (scale * self.endpoint(j), scale * self.endpoint(j + 1));
        if self.seed > 0.0 {
            Interval { lo: e0, hi: e1 }
        } else {
            Interval { lo: e1, hi: e0 }
        }
    }

    /// The `j`-th gap interval with the `part` restriction applied.
    ///
    /// Halves split at the gap midpoint; `FirstHalf` is the half adjacent to
    /// the inner endpoint `λʲ·(endpoint j)` on the positive side and its
    /// mirror on the negative side.
    pub fn interval(&self, j: u32) -> Interval {
        let full = self.base_interval(j);
        let mid = 0.5 * (full.lo + full.hi);
        match (self.part, self.seed > 0.0) {
            (FamilyPart::Full, _) => full,
            (FamilyPart::FirstHalf, true) => Interval { lo: full.lo, hi: mid },
            (FamilyPart::SecondHalf, true) => Interval { lo: mid, hi: full.hi },
            // negative seed: the inner endpoint is the low end of the gap
            (FamilyPart::FirstHalf, false) => Interval { lo: full.lo, hi: mid },
            (FamilyPart::SecondHalf, false) => Interval { lo: mid, hi: full.hi },
        }
    }

    /// Width of the full `j`-th gap: `((λ−1)/2)·(λ/2)ʲ·|seed|`.
    pub fn gap_width(&self, j: u32) -> f64 {
        self.base_interval(j).width()
    }

    /// Same ratio and seed (up to rounding): the two families index the same
    /// self-similar gap structure.
    pub fn same_base(&self, other: &Self) -> bool {
        let close = |a: f64, b: f64| (a - b).abs() <= 1e-12 * (1.0 + a.abs().max(b.abs()));
        close(self.lambda, other.lambda) && close(self.seed, other.seed)
    }
}

/// An open subset of the line: disjoint finite intervals plus optional
/// geometric gap families, truncated at their stated depth.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct GapSet {
    pub intervals: Vec<Interval>,
    pub families: Vec<GeometricGapFamily>,
}

/// One materialized component together with where it came from.
#[derive(Debug, Clone, Copy)]
pub struct GapComponent {
    pub iv: Interval,
    /// `Some((family index, j))` when the component is a family gap.
    pub family: Option<(usize, u32)>,
}

/// Result of intersecting two gap sets as open sets.
#[derive(Debug, Clone, PartialEq)]
pub enum GapIntersection {
    Empty,
    Nonempty(Interval),
    /// Family tails could interleave beyond every checked index.
    Undecided(String),
}

impl GapSet {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn from_intervals(intervals: Vec<Interval>) -> Result<Self> {
        let g = Self { intervals, families: Vec::new() };
        g.validate()?;
        Ok(g)
    }

    pub fn new(intervals: Vec<Interval>, families: Vec<GeometricGapFamily>) -> Result<Self> {
        let g = Self { intervals, families };
        g.validate()?;
        Ok(g)
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty() && self.families.is_empty()
    }

    pub fn validate(&self) -> Result<()> {
        for iv in &self.intervals {
            if iv.lo >= iv.hi || iv.lo.is_nan() || iv.hi.is_nan() {
                return Err(Error::InvalidGapSet(format!("bad interval ({}, {})", iv.lo, iv.hi)));
            }
            if !iv.is_bounded() {
                return Err(Error::InvalidGapSet("gap intervals must be bounded".into()));
            }
        }
        let mut all: Vec<Interval> = self.components().map(|c| c.iv).collect();
        all.sort_by(|a, b| a.lo.partial_cmp(&b.lo).unwrap());
        for w in all.windows(2) {
            if w[0].overlap_width(&w[1]) > 0.0 {
                return Err(Error::InvalidGapSet(format!(
                    "components {} and {} overlap",
                    w[0], w[1]
                )));
            }
        }
        Ok(())
    }

    /// All components up to each family's truncation depth.
    pub fn components(&self) -> impl Iterator<Item = GapComponent> + '_ {
        let finite = self
            .intervals
            .iter()
            .map(|iv| GapComponent { iv: *iv, family: None });
        let fam = self.families.iter().enumerate().flat_map(|(fi, f)| {
            (0..f.depth).map(move |j| GapComponent { iv: f.interval(j), family: Some((fi, j)) })
        });
        finite.chain(fam)
    }

    pub fn materialize(&self) -> Vec<Interval> {
        self.components().map(|c| c.iv).collect()
    }

    /// Does the open set contain the point?
    pub fn contains(&self, x: f64) -> bool {
        if self.intervals.iter().any(|iv| iv.contains(x)) {
            return true;
        }
        self.families.iter().any(|f| {
            // family gaps beyond the truncation depth still belong to the set
            let mut j = 0;
            loop {
                let iv = f.interval(j);
                if iv.contains(x) {
                    return true;
                }
                let past = if f.seed > 0.0 { iv.lo > x } else { iv.hi < x };
                if past || j > f.depth + 64 {
                    return false;
                }
                j += 1;
            }
        })
    }

    /// Hull of the materialized components, `None` when empty.
    pub fn materialized_hull(&self) -> Option<Interval> {
        let mut it = self.components();
        let first = it.next()?.iv;
        Some(it.fold(first, |h, c| h.hull(&c.iv)))
    }
}

/// Open intersection of two gap sets, with family tails resolved by index
/// arithmetic where the bases match and by bounded search against the closed
/// form otherwise.
pub fn gap_intersection(g1: &GapSet, g2: &GapSet) -> GapIntersection {
    // finite x finite
    for a in &g1.intervals {
        for b in &g2.intervals {
            if let Some(i) = a.intersect(b) {
                return GapIntersection::Nonempty(i);
            }
        }
    }
    // finite x family (either side): family interval positions are monotone
    // in j, so the search below the finite interval's far end is exhaustive.
    for (fs, ivs) in [(&g1.families, &g2.intervals), (&g2.families, &g1.intervals)] {
        for f in fs {
            for iv in ivs {
                if let Some(i) = family_vs_interval(f, iv) {
                    return GapIntersection::Nonempty(i);
                }
            }
        }
    }
    // family x family
    for a in &g1.families {
        for b in &g2.families {
            match family_vs_family(a, b) {
                GapIntersection::Empty => {}
                other => return other,
            }
        }
    }
    GapIntersection::Empty
}

fn family_vs_interval(f: &GeometricGapFamily, iv: &Interval) -> Option<Interval> {
    let mut j = 0u32;
    loop {
        let g = f.interval(j);
        if let Some(i) = g.intersect(iv) {
            return Some(i);
        }
        let past = if f.seed > 0.0 { g.lo > iv.hi } else { g.hi < iv.lo };
        if past || j > f.depth + 64 {
            return None;
        }
        j += 1;
    }
}

fn family_vs_family(a: &GeometricGapFamily, b: &GeometricGapFamily) -> GapIntersection {
    if a.seed.signum() != b.seed.signum() {
        // opposite sides of the origin never meet
        return GapIntersection::Empty;
    }
    if a.same_base(b) {
        use FamilyPart::*;
        return match (a.part, b.part) {
            (FirstHalf, SecondHalf) | (SecondHalf, FirstHalf) => GapIntersection::Empty,
            // identical index structure: gap 0 (or its shared half) overlaps
            _ => GapIntersection::Nonempty(a.interval(0).intersect(&b.interval(0)).expect(
                "same-base families with compatible parts share their first gap",
            )),
        };
    }
    // different bases on the same side: check a bounded window of indices,
    // then admit the tails are unresolved
    let jmax = a.depth.max(b.depth) + 16;
    for j in 0..jmax {
        for k in 0..jmax {
            if let Some(i) = a.interval(j).intersect(&b.interval(k)) {
                return GapIntersection::Nonempty(i);
            }
        }
    }
    GapIntersection::Undecided(format!(
        "families (lambda={}, seed={}) and (lambda={}, seed={}) have disjoint prefixes but unresolved tails",
        a.lambda, a.seed, b.lambda, b.seed
    ))
}

// --- JSON encoding -------------------------------------------------------
//
// {"intervals":[[lo,hi],...],
//  "families":[{"lambda":4.0,"seed":1.0,"depth":50,"halving":false}]}
//
// A halved family carries "halving":true plus "half":"first"|"second".

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FamilyRepr {
    lambda: f64,
    seed: f64,
    depth: u32,
    #[serde(default)]
    halving: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    half: Option<String>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GapSetRepr {
    #[serde(default)]
    intervals: Vec<Interval>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    families: Vec<FamilyRepr>,
}

impl Serialize for GapSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let repr = GapSetRepr {
            intervals: self.intervals.clone(),
            families: self
                .families
                .iter()
                .map(|f| FamilyRepr {
                    lambda: f.lambda,
                    seed: f.seed,
                    depth: f.depth,
                    halving: f.part != FamilyPart::Full,
                    half: match f.part {
                        FamilyPart::Full => None,
                        FamilyPart::FirstHalf => Some("first".into()),
                        FamilyPart::SecondHalf => Some("second".into()),
                    },
                })
                .collect(),
        };
        repr.serialize(s)
    }
}

impl<'de> Deserialize<'de> for GapSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as DeError;
        let repr = GapSetRepr::deserialize(d)?;
        let intervals = repr.intervals;
        let families = repr
            .families
            .into_iter()
            .map(|f| {
                let part = match (f.halving, f.half.as_deref()) {
                    (false, None) => FamilyPart::Full,
                    (true, None) | (true, Some("first")) => FamilyPart::FirstHalf,
                    (true, Some("second")) => FamilyPart::SecondHalf,
                    (_, Some(other)) => {
                        return Err(DeError::custom(format!("unknown family half {other:?}")))
                    }
                };
                GeometricGapFamily::new(f.lambda, f.seed, f.depth, part).map_err(DeError::custom)
            })
            .collect::<std::result::Result<Vec<_>, D::Error>>()?;
        let g = GapSet { intervals, families };
        g.validate().map_err(DeError::custom)?;
        Ok(g)
    }
}
