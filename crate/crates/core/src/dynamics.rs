//! Orbit analysis of the return map `Φ = T₂⁻¹∘T₁`: iteration, fixed points of
//! `Φ²`, identity-interval detection, and the wandering / non-wandering
//! classification of open gap sets.
//!
//! An open set `S` wanders under `Φ` when `Φᵐ(S) ∩ S = ∅` for every integer
//! `m ≠ 0`; negative exponents are redundant because `S ∩ Φ⁻ᵐ(S) = ∅` iff
//! `Φᵐ(S) ∩ S = ∅`.  The classifier checks overlaps directly up to a depth
//! and then certifies the infinite tail: every component's even and odd orbit
//! chains are strictly ordered (the squared map is increasing), so once a
//! chain is past the hull of `S`, or confined between its latest image and a
//! fixed point of `Φ²` with no component in between, it can never return.
//! Self-similar gap families are certified by index arithmetic on their
//! closed-form endpoints instead of float comparisons.

use crate::curve::MonotoneBijection;
use crate::error::{Error, Result};
use crate::gapset::{FamilyPart, GapSet, GeometricGapFamily};
use crate::interval::{interval_order, Interval, IntervalOrder};
use serde::{Deserialize, Serialize};

use MonotoneBijection as MB;

/// `Φᵏ(I)`; negative `k` iterates the inverse.  Affine maps fold the orbit in
/// closed slope/intercept form before touching the interval.
pub fn iterate(phi: &MonotoneBijection, iv: &Interval, k: i32) -> Result<Interval> {
    if k == 0 {
        return Ok(*iv);
    }
    let (map, steps) = if k > 0 {
        (phi.clone(), k as u32)
    } else {
        (phi.invert(), (-(k as i64)) as u32)
    };
    if let MB::Affine { slope, intercept } = map {
        let (mut s, mut c) = (1.0f64, 0.0f64);
        for _ in 0..steps {
            s *= slope;
            c = slope * c + intercept;
        }
        return MonotoneBijection::affine(s, c)?.map_interval(iv);
    }
    let mut cur = *iv;
    for _ in 0..steps {
        cur = map.map_interval(&cur)?;
    }
    Ok(cur)
}

/// Fixed points of `Φ²` in a window: isolated roots plus maximal intervals on
/// which `Φ²` is the identity.
#[derive(Debug, Clone, Default, Serialize)]
pub struct FixedPointSet {
    pub points: Vec<f64>,
    pub identity_intervals: Vec<Interval>,
}

fn squared(phi: &MonotoneBijection) -> Result<MonotoneBijection> {
    MonotoneBijection::compose(phi, phi)
}

/// All fixed points of `Φ²` inside `window`.  Piecewise-linear squares are
/// solved exactly per piece; identity pieces need slope 1 and matching values
/// within `1e-12`.
pub fn fixed_points_of_square(
    phi: &MonotoneBijection,
    window: &Interval,
    tol: f64,
) -> Result<FixedPointSet> {
    let phi2 = squared(phi)?;
    let window = match phi.domain().intersect(window) {
        Some(w) => w,
        None => return Ok(FixedPointSet::default()),
    };
    if !window.is_bounded() {
        return Err(Error::InvalidInstance("fixed-point window must be bounded".into()));
    }
    let mut out = FixedPointSet::default();
    let close = |a: f64, b: f64| (a - b).abs() <= 1e-12 * (1.0 + a.abs().max(b.abs()));

    // linear pieces of phi2 clipped to the window, as (u, v, value_u, value_v)
    let mut pieces: Vec<(f64, f64, f64, f64)> = Vec::new();
    match &phi2 {
        MB::Affine { .. } => {
            let (u, v) = (window.lo, window.hi);
            pieces.push((u, v, phi2.eval(u)?, phi2.eval(v)?));
        }
        MB::Pwl(p) => {
            let (xs, _) = p.breakpoints();
            let mut grid: Vec<f64> = vec![window.lo];
            grid.extend(xs.iter().copied().filter(|x| window.contains(*x)));
            grid.push(window.hi);
            grid.dedup_by(|a, b| (*a - *b).abs() <= 1e-15 * (1.0 + a.abs()));
            for w in grid.windows(2) {
                let (u, v) = (w[0], w[1]);
                // clamp into the open domain of bounded maps
                let dom = phi2.domain();
                let eps = 1e-12 * (1.0 + u.abs().max(v.abs()));
                let (cu, cv) = ((u).max(dom.lo + eps), (v).min(dom.hi - eps));
                if cu >= cv {
                    continue;
                }
                pieces.push((cu, cv, phi2.eval(cu)?, phi2.eval(cv)?));
            }
        }
    }

    let mut identity_spans: Vec<Interval> = Vec::new();
    for (u, v, yu, yv) in pieces {
        let slope = (yv - yu) / (v - u);
        if close(slope, 1.0) && close(yu, u) && close(yv, v) {
            identity_spans.push(Interval { lo: u, hi: v });
            continue;
        }
        // solve yu + slope (x - u) = x
        if (1.0 - slope).abs() <= 1e-15 {
            continue; // parallel to the diagonal, no isolated root
        }
        let root = (yu - slope * u) / (1.0 - slope);
        let eps = tol * (1.0 + root.abs());
        if root >= u - eps && root <= v + eps && window.contains(root) {
            out.points.push(root);
        }
    }

    out.points.sort_by(|a, b| a.partial_cmp(b).unwrap());
    out.points.dedup_by(|a, b| (*a - *b).abs() <= tol * (1.0 + a.abs()));
    // merge touching identity spans
    identity_spans.sort_by(|a, b| a.lo.partial_cmp(&b.lo).unwrap());
    for span in identity_spans {
        match out.identity_intervals.last_mut() {
            Some(last) if close(last.hi, span.lo) || span.lo <= last.hi => {
                last.hi = last.hi.max(span.hi);
            }
            _ => out.identity_intervals.push(span),
        }
    }
    // points inside identity intervals are not isolated
    let spans = out.identity_intervals.clone();
    out.points.retain(|p| !spans.iter().any(|s| s.lo <= *p && *p <= s.hi));
    Ok(out)
}

/// Widest open interval inside `window` on which `Φ² = id`, if any.
pub fn detect_identity_interval(
    phi: &MonotoneBijection,
    window: &Interval,
) -> Result<Option<Interval>> {
    let fps = fixed_points_of_square(phi, window, 1e-12)?;
    Ok(fps
        .identity_intervals
        .into_iter()
        .max_by(|a, b| a.width().partial_cmp(&b.width()).unwrap()))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum OrbitLimit {
    Converged(f64),
    DivergesToPositive,
    DivergesToNegative,
    Inconclusive,
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct OrbitLimitReport {
    pub limit: OrbitLimit,
    pub iterations: u32,
}

/// Follow `Φ²ⁿ(ξ)` until it settles (Cauchy within `tol`), escapes the bound,
/// or the iteration budget runs out.
pub fn orbit_limit(
    phi: &MonotoneBijection,
    xi: f64,
    max_iter: u32,
    tol: f64,
) -> Result<OrbitLimitReport> {
    let escape = 1e9 * (1.0 + xi.abs());
    let phi2 = squared(phi)?;
    // once the orbit sits in an affine tail of slope >= 1 moving outward it
    // provably diverges; this catches translations long before any escape bound
    let outward_in_expanding_tail = |next: f64, step: f64| -> bool {
        match &phi2 {
            MB::Affine { slope, .. } => *slope >= 1.0 - 1e-15,
            MB::Pwl(p) => match p.tail_slopes() {
                None => false,
                Some((l, r)) => {
                    let (xs, _) = p.breakpoints();
                    (step < 0.0 && next <= xs[0] && l >= 1.0 - 1e-15)
                        || (step > 0.0 && next >= *xs.last().unwrap() && r >= 1.0 - 1e-15)
                }
            },
        }
    };
    let mut x = xi;
    for n in 1..=max_iter {
        let next = phi2.eval(x)?;
        let step = next - x;
        if step.abs() < tol {
            return Ok(OrbitLimitReport { limit: OrbitLimit::Converged(next), iterations: n });
        }
        if next.abs() > escape || outward_in_expanding_tail(next, step) {
            let limit = if step > 0.0 {
                OrbitLimit::DivergesToPositive
            } else {
                OrbitLimit::DivergesToNegative
            };
            return Ok(OrbitLimitReport { limit, iterations: n });
        }
        x = next;
    }
    Ok(OrbitLimitReport { limit: OrbitLimit::Inconclusive, iterations: max_iter })
}

// --- wandering classification ---------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum GapTag {
    E1,
    E2,
}

/// Which gap set the witness leaves from and lands in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum NonWanderingCase {
    /// source E1, target E1
    Case1,
    /// source E1, target E2
    Case2,
    /// source E2, target E1
    Case3,
    /// source E2, target E2
    Case4,
}

impl NonWanderingCase {
    pub fn from_tags(src: GapTag, tgt: GapTag) -> Self {
        match (src, tgt) {
            (GapTag::E1, GapTag::E1) => Self::Case1,
            (GapTag::E1, GapTag::E2) => Self::Case2,
            (GapTag::E2, GapTag::E1) => Self::Case3,
            (GapTag::E2, GapTag::E2) => Self::Case4,
        }
    }

    pub fn label(self) -> u8 {
        match self {
            Self::Case1 => 1,
            Self::Case2 => 2,
            Self::Case3 => 3,
            Self::Case4 => 4,
        }
    }

    pub fn from_label(label: u8) -> Result<Self> {
        Ok(match label {
            1 => Self::Case1,
            2 => Self::Case2,
            3 => Self::Case3,
            4 => Self::Case4,
            other => return Err(Error::InvalidCase(other)),
        })
    }

    pub fn tags(self) -> (GapTag, GapTag) {
        match self {
            Self::Case1 => (GapTag::E1, GapTag::E1),
            Self::Case2 => (GapTag::E1, GapTag::E2),
            Self::Case3 => (GapTag::E2, GapTag::E1),
            Self::Case4 => (GapTag::E2, GapTag::E2),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Parity {
    Odd,
    Even,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum TravelSide {
    Left,
    Right,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub enum EscapeRule {
    /// The chain has passed the hull of `S` in its direction of travel.
    BeyondHull,
    /// The chain is confined between its latest image and a fixed point of
    /// `Φ²` (or the domain edge of a bounded map), with no component between.
    TrappedBeforeFixedPoint { sentinel: f64 },
}

#[derive(Debug, Clone, Serialize)]
pub struct EscapeCertificate {
    pub component: Interval,
    pub parity: Parity,
    pub escaped_at: u32,
    pub side: TravelSide,
    pub rule: EscapeRule,
}

/// Which closed-form ordering holds for one family gap image.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum TailOrdering {
    /// image sits in the closed gap between family gaps `left` and `left+1`
    BetweenGaps { left: i64 },
    /// image sits strictly between the origin and the innermost endpoint
    InsideCore,
}

#[derive(Debug, Clone, Serialize)]
pub struct OrbitTraceEntry {
    pub seed: f64,
    pub j: u32,
    /// exponent in the contraction direction of the family
    pub k: i32,
    pub ordering: TailOrdering,
    pub image: Interval,
    pub endpoint_error: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct FamilyTailCertificate {
    pub lambda: f64,
    pub seeds: Vec<f64>,
    pub checked_cases: usize,
    pub max_endpoint_error: f64,
    #[serde(skip)]
    pub traces: Vec<OrbitTraceEntry>,
}

#[derive(Debug, Clone, Serialize)]
pub enum WanderingVerdict {
    Wandering {
        escapes: Vec<EscapeCertificate>,
        family_tail: Option<FamilyTailCertificate>,
        warnings: Vec<String>,
    },
    NonWandering {
        /// refined interval `I` with `Φᵐ(I)` inside the target component
        witness: Interval,
        /// component of `S` the witness came from
        component: Interval,
        /// component of `S` the image lands in
        target: Interval,
        m: u32,
        case: NonWanderingCase,
    },
    Inconclusive {
        reason: String,
        warnings: Vec<String>,
    },
}

impl WanderingVerdict {
    pub fn kind(&self) -> &'static str {
        match self {
            Self::Wandering { .. } => "wandering",
            Self::NonWandering { .. } => "non_wandering",
            Self::Inconclusive { .. } => "inconclusive",
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct WanderingConfig {
    pub depth: u32,
    pub tol: f64,
}

impl Default for WanderingConfig {
    fn default() -> Self {
        Self { depth: 64, tol: 1e-9 }
    }
}

/// Families must be materialized at least this deep before the closed-form
/// tail argument is trusted for the un-materialized indices.
pub const TAIL_CERT_MIN_DEPTH: u32 = 2;

#[derive(Debug, Clone)]
struct TaggedComponent {
    iv: Interval,
    tag: GapTag,
    /// (shared family-base id, gap index) for family gaps
    family: Option<(usize, u32)>,
}

/// Why the closed-form tail certificate is unavailable, if it is.
struct TailPlan {
    /// distinct family bases, positive seed first
    bases: Vec<GeometricGapFamily>,
    traces: Vec<OrbitTraceEntry>,
}

/// Classify `S = E₁ ∪ E₂` as wandering / non-wandering for `Φ`, checking
/// exponents `m = 1..=depth` directly and certifying the rest.
pub fn wandering_check(
    phi: &MonotoneBijection,
    e1: &GapSet,
    e2: &GapSet,
    cfg: &WanderingConfig,
) -> Result<WanderingVerdict> {
    e1.validate()?;
    e2.validate()?;
    if e1.is_empty() && e2.is_empty() {
        return Ok(WanderingVerdict::Wandering {
            escapes: Vec::new(),
            family_tail: None,
            warnings: Vec::new(),
        });
    }
    let domain = phi.domain();

    // canonical component list: sorted by position, tagged by origin
    let mut comps: Vec<TaggedComponent> = Vec::new();
    let mut bases: Vec<GeometricGapFamily> = Vec::new();
    let base_id = |f: &GeometricGapFamily, bases: &mut Vec<GeometricGapFamily>| -> usize {
        if let Some(i) = bases.iter().position(|b| b.same_base(f)) {
            i
        } else {
            bases.push(GeometricGapFamily { part: FamilyPart::Full, ..f.clone() });
            bases.len() - 1
        }
    };
    for (set, tag) in [(e1, GapTag::E1), (e2, GapTag::E2)] {
        for iv in &set.intervals {
            comps.push(TaggedComponent { iv: *iv, tag, family: None });
        }
        for f in &set.families {
            let id = base_id(f, &mut bases);
            for j in 0..f.depth {
                comps.push(TaggedComponent { iv: f.interval(j), tag, family: Some((id, j)) });
            }
        }
    }
    for c in &comps {
        if !domain.contains_interval(&c.iv) {
            return Err(Error::InvalidInstance(format!(
                "gap component {} lies outside the domain of the map",
                c.iv
            )));
        }
    }
    comps.sort_by(|a, b| {
        a.iv.lo
            .partial_cmp(&b.iv.lo)
            .unwrap()
            .then(a.iv.hi.partial_cmp(&b.iv.hi).unwrap())
    });

    let has_families = !bases.is_empty();
    let has_finite = comps.iter().any(|c| c.family.is_none());
    let mut warnings: Vec<String> = Vec::new();

    // closed-form tail plan for self-similar families
    let tail_plan = if has_families {
        match plan_family_tail(phi, &bases, &comps, cfg, has_finite) {
            Ok(plan) => Some(plan),
            Err(reason) => {
                warnings.push(format!(
                    "truncation: families cut at their depth and the tail is not certified ({reason})"
                ));
                None
            }
        }
    } else {
        None
    };

    // exponent loop: S ∩ Φᵐ(S) for m = 1..=depth
    let hull = comps
        .iter()
        .map(|c| c.iv)
        .reduce(|a, b| a.hull(&b))
        .expect("components nonempty");
    let mut images: Vec<Vec<Interval>> = comps.iter().map(|c| vec![c.iv]).collect();
    let mut tangency: Option<String> = None;
    for m in 1..=cfg.depth {
        for ci in 0..comps.len() {
            if images[ci].len() < m as usize {
                continue; // chain collapsed below float resolution earlier
            }
            let prev = images[ci][(m - 1) as usize];
            let img = match phi.map_interval(&prev) {
                Ok(img) => img,
                // the image endpoints rounded to the same float: the chain
                // has converged onto a periodic point and stays there
                Err(Error::InvalidInterval { .. }) => continue,
                Err(e) => return Err(e),
            };
            images[ci].push(img);
            for (cj, tgt) in comps.iter().enumerate() {
                if tail_plan.is_some() && exact_family_pair(&comps[ci], tgt) {
                    // disjointness proved by the index argument in the plan
                    continue;
                }
                let w = img.overlap_width(&tgt.iv);
                if w > cfg.tol {
                    let overlap = img.intersect(&tgt.iv).expect("positive overlap");
                    let pre = iterate(phi, &overlap, -(m as i32))?;
                    let witness = pre.intersect(&comps[ci].iv).unwrap_or(pre);
                    return Ok(WanderingVerdict::NonWandering {
                        witness,
                        component: comps[ci].iv,
                        target: tgt.iv,
                        m,
                        case: NonWanderingCase::from_tags(comps[ci].tag, tgt.tag),
                    });
                } else if w > 0.0 && tangency.is_none() {
                    tangency = Some(format!(
                        "image of {} at exponent {m} touches {} within tolerance",
                        comps[ci].iv, tgt.iv,
                    ));
                    let _ = cj;
                }
            }
        }
    }

    if let Some(t) = tangency {
        return Ok(WanderingVerdict::Inconclusive {
            reason: format!("boundary tangency is not classified: {t}"),
            warnings,
        });
    }

    // escape certification for components not covered by the tail plan
    let mut escapes: Vec<EscapeCertificate> = Vec::new();
    if has_families && tail_plan.is_none() {
        return Ok(WanderingVerdict::Inconclusive {
            reason: format!("no overlap up to depth {}, but family tails remain unchecked", cfg.depth),
            warnings,
        });
    }
    let sentinels = escape_sentinels(phi, &hull, &domain)?;
    for (ci, c) in comps.iter().enumerate() {
        if c.family.is_some() {
            continue; // covered by the tail certificate
        }
        for parity in [Parity::Odd, Parity::Even] {
            match certify_escape(&images[ci], parity, &hull, &comps, &sentinels, cfg) {
                Some(cert) => escapes.push(EscapeCertificate { component: c.iv, ..cert }),
                None => {
                    return Ok(WanderingVerdict::Inconclusive {
                        reason: format!(
                            "depth {} exhausted before the {:?} orbit chain of {} escaped",
                            cfg.depth, parity, c.iv
                        ),
                        warnings,
                    });
                }
            }
        }
    }

    Ok(WanderingVerdict::Wandering {
        escapes,
        family_tail: tail_plan.map(|p| {
            let max_err = p.traces.iter().map(|t| t.endpoint_error).fold(0.0, f64::max);
            FamilyTailCertificate {
                lambda: p.bases[0].lambda,
                seeds: p.bases.iter().map(|b| b.seed).collect(),
                checked_cases: p.traces.len(),
                max_endpoint_error: max_err,
                traces: p.traces,
            }
        }),
        warnings,
    })
}

/// Convenience wrapper tagging the whole set as `E₁`.
pub fn wandering_check_single(
    phi: &MonotoneBijection,
    s: &GapSet,
    cfg: &WanderingConfig,
) -> Result<WanderingVerdict> {
    wandering_check(phi, s, &GapSet::empty(), cfg)
}

fn exact_family_pair(a: &TaggedComponent, b: &TaggedComponent) -> bool {
    // with a valid tail plan every family-family pair is resolved exactly:
    // same base by the index ordering, opposite seeds by sign separation
    a.family.is_some() && b.family.is_some()
}

/// Fixed points of `Φ²` (plus bounded-domain edges) usable as confinement
/// sentinels, sorted ascending.
fn escape_sentinels(
    phi: &MonotoneBijection,
    hull: &Interval,
    domain: &Interval,
) -> Result<Vec<f64>> {
    let window = if domain.is_bounded() {
        *domain
    } else {
        let r = 1.0 + 2.0 * hull.lo.abs().max(hull.hi.abs()).max(1.0);
        Interval { lo: -1e6 * r, hi: 1e6 * r }
    };
    let fps = fixed_points_of_square(phi, &window, 1e-12)?;
    let mut s = fps.points;
    for iv in fps.identity_intervals {
        s.push(iv.lo);
        s.push(iv.hi);
    }
    if domain.is_bounded() {
        s.push(domain.lo);
        s.push(domain.hi);
    }
    s.sort_by(|a, b| a.partial_cmp(b).unwrap());
    Ok(s)
}

fn certify_escape(
    images: &[Interval],
    parity: Parity,
    hull: &Interval,
    comps: &[TaggedComponent],
    sentinels: &[f64],
    cfg: &WanderingConfig,
) -> Option<EscapeCertificate> {
    let start: usize = match parity {
        Parity::Odd => 1,
        Parity::Even => 2,
    };
    if images.len() <= start + 2 {
        return None;
    }
    // chain direction: the squared map is increasing, so the order of the
    // first two same-parity images persists along the whole chain
    let side = match interval_order(&images[start], &images[start + 2]) {
        IntervalOrder::Before => TravelSide::Right,
        IntervalOrder::After => TravelSide::Left,
        IntervalOrder::Overlap => return None,
    };
    let mut m = start;
    while m < images.len() {
        let img = &images[m];
        // rule 1: past the hull of S in the direction of travel
        let beyond = match side {
            TravelSide::Right => hull.hi <= img.lo,
            TravelSide::Left => img.hi <= hull.lo,
        };
        if beyond {
            return Some(EscapeCertificate {
                component: *img, // replaced by the caller
                parity,
                escaped_at: m as u32,
                side,
                rule: EscapeRule::BeyondHull,
            });
        }
        // rule 2: confined between this image and the next sentinel, with no
        // component of S inside the confinement zone
        let sentinel = match side {
            TravelSide::Right => sentinels.iter().copied().find(|s| *s >= img.hi),
            TravelSide::Left => sentinels.iter().rev().copied().find(|s| *s <= img.lo),
        };
        if let Some(sent) = sentinel {
            let zone = match side {
                TravelSide::Right => (img.lo, sent),
                TravelSide::Left => (sent, img.hi),
            };
            let clean = comps
                .iter()
                .all(|c| !(c.iv.lo < zone.1 && zone.0 < c.iv.hi));
            if clean {
                return Some(EscapeCertificate {
                    component: *img,
                    parity,
                    escaped_at: m as u32,
                    side,
                    rule: EscapeRule::TrappedBeforeFixedPoint { sentinel: sent },
                });
            }
        }
        m += 2;
    }
    let _ = cfg;
    None
}

/// Validate that the closed-form tail argument applies and pre-verify the
/// materialized prefix of every family orbit against it.
fn plan_family_tail(
    phi: &MonotoneBijection,
    bases: &[GeometricGapFamily],
    comps: &[TaggedComponent],
    cfg: &WanderingConfig,
    has_finite: bool,
) -> std::result::Result<TailPlan, String> {
    if has_finite {
        return Err("finite gap intervals coexist with families".into());
    }
    let MB::Affine { slope, intercept } = phi else {
        return Err("the map is not affine".into());
    };
    if intercept.abs() > 1e-12 {
        return Err(format!("the map has a nonzero intercept {intercept}"));
    }
    let lambda = bases[0].lambda;
    let rel = |a: f64, b: f64| (a - b).abs() <= 1e-12 * (1.0 + a.abs().max(b.abs()));
    if !bases.iter().all(|b| rel(b.lambda, lambda)) {
        return Err("families carry different ratios".into());
    }
    // the map must scale by an integer power of the family ratio; each
    // application then jumps the gap index by that power
    if *slope <= 0.0 {
        return Err(format!("slope {slope} is not a positive power of {lambda}"));
    }
    let p_est = slope.ln() / lambda.ln();
    let p = p_est.round();
    if p == 0.0 || p.abs() > 64.0 || !rel(*slope, lambda.powf(p)) {
        return Err(format!("slope {slope} is not an integer power of {lambda}"));
    }
    // Φᵐ multiplies by λ^(p·m), moving gap j to index j + p·m = j − κ
    let kappa_per_step = -(p as i32);
    let mut pos = 0usize;
    let mut neg = 0usize;
    for b in bases {
        if b.seed > 0.0 {
            pos += 1;
        } else {
            neg += 1;
        }
        if b.depth < TAIL_CERT_MIN_DEPTH {
            return Err(format!(
                "family depth {} is below the minimum {} for tail certification",
                b.depth, TAIL_CERT_MIN_DEPTH
            ));
        }
    }
    if pos > 1 || neg > 1 {
        return Err("multiple distinct family bases on the same side of the origin".into());
    }

    // verify the materialized prefix of every orbit against the closed form,
    // in both iteration directions; cap the exponent so the closed-form
    // scale stays inside the float range
    let mut traces = Vec::new();
    for c in comps {
        let Some((bid, j)) = c.family else { continue };
        let base = &bases[bid];
        let safe = ((600.0 / lambda.ln() - f64::from(base.depth)) / p.abs()).floor();
        let cap = cfg.depth.min(2 * base.depth).min(safe.max(2.0) as u32);
        for m in 1..=cap {
            for exponent in [m as i32, -(m as i32)] {
                let k = kappa_per_step * exponent;
                let entry = verify_tail_entry(phi, base, c, j, exponent, k)?;
                traces.push(entry);
            }
        }
    }
    Ok(TailPlan { bases: bases.to_vec(), traces })
}

/// Check one (gap, exponent) pair of a family orbit: the iterated image must
/// match the closed-form endpoints and land in the certified region.
///
/// `exponent` is the iteration count of the actual map (negative iterates
/// the inverse); `k` is the same exponent expressed in the contraction
/// direction of the family.
fn verify_tail_entry(
    phi: &MonotoneBijection,
    base: &GeometricGapFamily,
    comp: &TaggedComponent,
    j: u32,
    exponent: i32,
    k: i32,
) -> std::result::Result<OrbitTraceEntry, String> {
    let img = iterate(phi, &comp.iv, exponent).map_err(|e| e.to_string())?;
    // closed-form image of the FULL gap j under the contraction exponent k
    let scale = base.lambda.powi(j as i32 - k);
    if !scale.is_finite() {
        return Err(format!("scale overflow at gap {j}, exponent {k}"));
    }
    let (e0, e1) = (scale * base.endpoint(j), scale * base.endpoint(j + 1));
    let full_img = if base.seed > 0.0 {
        Interval { lo: e0, hi: e1 }
    } else {
        Interval { lo: e1, hi: e0 }
    };
    // the component may be a half gap; its image must sit inside the full image
    let slack = 1e-12 * (1.0 + full_img.lo.abs().max(full_img.hi.abs()));
    if !(img.lo >= full_img.lo - slack && img.hi <= full_img.hi + slack) {
        return Err(format!(
            "iterated image {img} of gap {j} escapes the closed-form envelope {full_img}"
        ));
    }
    // endpoint identity for full gaps: iterated endpoints equal the closed form
    let endpoint_error = if base.part_is_full_for(comp) {
        ((img.lo - full_img.lo).abs() / (1.0 + full_img.lo.abs()))
            .max((img.hi - full_img.hi).abs() / (1.0 + full_img.hi.abs()))
    } else {
        0.0
    };
    if endpoint_error > 1e-12 {
        return Err(format!(
            "endpoint drift {endpoint_error} at gap {j}, exponent {k} exceeds 1e-12"
        ));
    }

    // bracket the full image between consecutive family gaps (or the core)
    let ji = j as i64;
    let ordering = if i64::from(k) > ji {
        // inside the core: between the origin and the seed endpoint
        let edge = base.endpoint(0); // = seed
        let ok = if base.seed > 0.0 {
            full_img.lo > -slack && full_img.hi <= edge + slack
        } else {
            full_img.hi < slack && full_img.lo >= edge - slack
        };
        if !ok {
            return Err(format!(
                "image {full_img} of gap {j} at exponent {k} not inside the core bounded by {edge}"
            ));
        }
        TailOrdering::InsideCore
    } else {
        // between gaps (left, left+1) where left = j - k when moving outward
        // (k < 0) and left = j - k when 0 < k <= j with the image adjacent on
        // the other side; both reduce to: the closed gap between family gaps
        let left: i64 = if k < 0 { ji - k as i64 - 1 } else { ji - k as i64 };
        if left < 0 {
            return Err(format!("bracket index underflow at gap {j}, exponent {k}"));
        }
        let lower = base.base_interval(left as u32);
        let upper = base.base_interval(left as u32 + 1);
        let (gap_lo, gap_hi) = if base.seed > 0.0 {
            (lower.hi, upper.lo)
        } else {
            (upper.hi, lower.lo)
        };
        let (gap_lo, gap_hi) = (gap_lo.min(gap_hi), gap_lo.max(gap_hi));
        if !(full_img.lo >= gap_lo - slack && full_img.hi <= gap_hi + slack) {
            return Err(format!(
                "image {full_img} of gap {j} at exponent {k} not inside the gap [{gap_lo}, {gap_hi}] between family gaps {left} and {}",
                left + 1
            ));
        }
        TailOrdering::BetweenGaps { left }
    };

    Ok(OrbitTraceEntry {
        seed: base.seed,
        j,
        k,
        ordering,
        image: img,
        endpoint_error,
    })
}

impl GeometricGapFamily {
    fn part_is_full_for(&self, comp: &TaggedComponent) -> bool {
        // comp came from a family whose base matches self; whether its
        // interval is the full gap decides if endpoint identities apply
        comp.family.is_some() && {
            let j = comp.family.unwrap().1;
            let full = self.base_interval(j);
            (comp.iv.lo - full.lo).abs() <= 1e-12 * (1.0 + full.lo.abs())
                && (comp.iv.hi - full.hi).abs() <= 1e-12 * (1.0 + full.hi.abs())
        }
    }
}
