//! Decision logic for the coordinate cross: map a problem instance to a
//! verdict plus the evidence behind it.
//!
//! The zero set is carried by one or two curves.  Axis-parallel cases decide
//! by projection density alone; two-graph cases run the full pipeline —
//! identity-interval obstruction first, then density of the joint
//! projection, then the wandering classification of the union of gap sets
//! under `Φ = T₂⁻¹∘T₁`.  Every `NOT_HUP` verdict constructs and verifies an
//! explicit annihilating Fourier pair before it is returned.

use crate::certificate::{
    build_identity_cex, build_orbit_cex, build_support_gap_cex, build_thm1_cex, shrink_seed,
    verify_vanishing, FourierPair, Side, VerificationReport,
};
use crate::curve::MonotoneBijection;
use crate::dynamics::{
    detect_identity_interval, wandering_check, EscapeCertificate, FamilyTailCertificate,
    WanderingConfig, WanderingVerdict,
};
use crate::error::{Error, Result};
use crate::gapset::{gap_intersection, GapIntersection, GapSet};
use crate::interval::Interval;
use serde::{Deserialize, Serialize};

/// A zero-set instance over the coordinate cross.
///
/// Gap sets always describe where the first-coordinate projection of the
/// respective zero-set part is missing, except in the two-axis case where
/// each gap set lives on its own axis.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum CrossInstance {
    /// `Λ₁ ⊂ ℝ×{a}`, `Λ₂ ⊂ {b}×ℝ`; `gaps1` on the first axis, `gaps2` on the
    /// second.
    AxisAxis {
        #[serde(default)]
        a: f64,
        #[serde(default)]
        b: f64,
        gaps1: GapSet,
        gaps2: GapSet,
    },
    /// `Λ₁ ⊂ ℝ×{a}`, `Λ₂` on the graph of `T`.
    AxisGraph {
        #[serde(default)]
        a: f64,
        #[serde(rename = "T")]
        t: MonotoneBijection,
        gaps1: GapSet,
        gaps2: GapSet,
    },
    /// `Λᵢ` on the graph of `Tᵢ`, both bijections of the line.
    GraphGraph {
        #[serde(rename = "T1")]
        t1: MonotoneBijection,
        #[serde(rename = "T2")]
        t2: MonotoneBijection,
        gaps1: GapSet,
        gaps2: GapSet,
    },
    /// `Tᵢ: (-a,a) -> (-b,b)` with the four boundary rays attached.
    BoundedGraphGraph {
        #[serde(rename = "T1")]
        t1: MonotoneBijection,
        #[serde(rename = "T2")]
        t2: MonotoneBijection,
        gaps1: GapSet,
        gaps2: GapSet,
    },
}

impl CrossInstance {
    pub fn kind_str(&self) -> &'static str {
        match self {
            Self::AxisAxis { .. } => "axis_axis",
            Self::AxisGraph { .. } => "axis_graph",
            Self::GraphGraph { .. } => "graph_graph",
            Self::BoundedGraphGraph { .. } => "bounded_graph_graph",
        }
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            Self::AxisAxis { gaps1, gaps2, .. } => {
                gaps1.validate()?;
                gaps2.validate()
            }
            Self::AxisGraph { t, gaps1, gaps2, .. } => {
                if t.is_bounded() {
                    return Err(Error::InvalidInstance(
                        "the axis-graph case needs a bijection of the whole line".into(),
                    ));
                }
                gaps1.validate()?;
                gaps2.validate()
            }
            Self::GraphGraph { t1, t2, gaps1, gaps2 } => {
                if t1.is_bounded() || t2.is_bounded() {
                    return Err(Error::InvalidInstance(
                        "graph_graph needs bijections of the whole line; use bounded_graph_graph \
                         for bounded curves (mixed instances are not covered)"
                            .into(),
                    ));
                }
                gaps1.validate()?;
                gaps2.validate()
            }
            Self::BoundedGraphGraph { t1, t2, gaps1, gaps2 } => {
                if !t1.is_bounded() || !t2.is_bounded() {
                    return Err(Error::InvalidInstance(
                        "bounded_graph_graph needs two bounded bijections (mixed instances are \
                         not covered)"
                            .into(),
                    ));
                }
                let close = |x: Interval, y: Interval| {
                    (x.lo - y.lo).abs() <= 1e-9 * (1.0 + x.lo.abs())
                        && (x.hi - y.hi).abs() <= 1e-9 * (1.0 + x.hi.abs())
                };
                if !close(t1.domain(), t2.domain()) || !close(t1.codomain(), t2.codomain()) {
                    return Err(Error::InvalidInstance(
                        "both bounded curves must share the domain (-a, a) and codomain (-b, b)"
                            .into(),
                    ));
                }
                gaps1.validate()?;
                gaps2.validate()?;
                let dom = t1.domain();
                for iv in gaps1.materialize().iter().chain(gaps2.materialize().iter()) {
                    if !dom.contains_interval(iv) {
                        return Err(Error::InvalidInstance(format!(
                            "gap {iv} lies outside the curve domain {dom}"
                        )));
                    }
                }
                Ok(())
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    #[serde(rename = "HUP")]
    Hup,
    #[serde(rename = "NOT_HUP")]
    NotHup,
    #[serde(rename = "UNKNOWN")]
    Unknown,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::Hup => "HUP",
            Self::NotHup => "NOT_HUP",
            Self::Unknown => "UNKNOWN",
        }
    }

    /// Shell contract: 0 uniqueness, 1 counterexample, 2 undecided.
    pub fn exit_code(self) -> i32 {
        match self {
            Self::Hup => 0,
            Self::NotHup => 1,
            Self::Unknown => 2,
        }
    }
}

/// What backs the verdict up.
#[derive(Debug, Clone, Serialize)]
pub enum Evidence {
    /// Explicit nonzero Fourier pair annihilating the zero set.
    Annihilator { pair: FourierPair, report: VerificationReport },
    /// Both projections dense: no gap to hide a counterexample in.
    ProjectionsDense,
    /// The union of gap sets wanders under the return map.
    WanderingSet {
        escapes: Vec<EscapeCertificate>,
        family_tail: Option<FamilyTailCertificate>,
    },
    None,
}

#[derive(Debug, Clone, Serialize)]
pub struct Decision {
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    pub evidence: Evidence,
    pub trace: Vec<String>,
}

impl Decision {
    fn unknown(reason: String, trace: Vec<String>) -> Self {
        Self { verdict: Verdict::Unknown, reason: Some(reason), evidence: Evidence::None, trace }
    }

    /// A counterexample claim is only as good as its verification.
    fn certified_not_hup(
        pair: FourierPair,
        report: VerificationReport,
        mut trace: Vec<String>,
    ) -> Self {
        trace.push(format!(
            "verification: max violation {:.3e}, nontriviality {:.3}",
            report.max_violation, report.nontriviality
        ));
        if report.pass {
            Self {
                verdict: Verdict::NotHup,
                reason: None,
                evidence: Evidence::Annihilator { pair, report },
                trace,
            }
        } else {
            trace.push("constructed certificate failed verification".into());
            Self {
                verdict: Verdict::Unknown,
                reason: Some("constructed certificate failed verification".into()),
                evidence: Evidence::Annihilator { pair, report },
                trace,
            }
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct DecideConfig {
    /// exponent budget for the wandering check
    pub depth: u32,
    /// dynamics tolerance
    pub tol: f64,
    /// samples per verification equation
    pub samples: u32,
    /// acceptance threshold for certificate verification
    pub verify_tol: f64,
}

impl Default for DecideConfig {
    fn default() -> Self {
        Self { depth: 64, tol: 1e-9, samples: 10_000, verify_tol: 1e-8 }
    }
}

/// Is the complement of this gap set dense in the line?  With gaps encoded as
/// open intervals that is exactly emptiness of the gap set.
pub fn density_check(e: &GapSet) -> bool {
    e.is_empty()
}

/// Decide any instance, dispatching on its kind.
pub fn decide(inst: &CrossInstance, cfg: &DecideConfig) -> Result<Decision> {
    inst.validate()?;
    match inst {
        CrossInstance::AxisAxis { .. } | CrossInstance::AxisGraph { .. } => decide_axis(inst, cfg),
        CrossInstance::GraphGraph { .. } => decide_general(inst, cfg),
        CrossInstance::BoundedGraphGraph { .. } => decide_bounded(inst, cfg),
    }
}

/// Axis cases: uniqueness holds exactly when both projections are dense.
pub fn decide_axis(inst: &CrossInstance, cfg: &DecideConfig) -> Result<Decision> {
    let (gaps1, gaps2) = match inst {
        CrossInstance::AxisAxis { gaps1, gaps2, .. }
        | CrossInstance::AxisGraph { gaps1, gaps2, .. } => (gaps1, gaps2),
        _ => {
            return Err(Error::InvalidInstance(format!(
                "decide_axis cannot handle kind {}",
                inst.kind_str()
            )))
        }
    };
    let mut trace = vec![format!("instance kind: {}", inst.kind_str())];
    let d1 = density_check(gaps1);
    let d2 = density_check(gaps2);
    trace.push(format!(
        "projection density: first {}, second {}",
        if d1 { "dense" } else { "gapped" },
        if d2 { "dense" } else { "gapped" }
    ));
    if d1 && d2 {
        trace.push("both projections dense: uniqueness holds".into());
        return Ok(Decision {
            verdict: Verdict::Hup,
            reason: None,
            evidence: Evidence::ProjectionsDense,
            trace,
        });
    }
    let (side, set) = if !d1 { (Side::F, gaps1) } else { (Side::G, gaps2) };
    let gap = leftmost_component(set);
    trace.push(format!("building a one-sided bump annihilator in the gap {gap} (side {side:?})"));
    let pair = build_thm1_cex(inst, &gap, side)?;
    let report = verify_vanishing(&pair, inst, cfg.samples, cfg.verify_tol)?;
    Ok(Decision::certified_not_hup(pair, report, trace))
}

/// Two total graphs: identity obstruction, joint density, then the wandering
/// classification.
pub fn decide_general(inst: &CrossInstance, cfg: &DecideConfig) -> Result<Decision> {
    let CrossInstance::GraphGraph { t1, t2, gaps1, gaps2 } = inst else {
        return Err(Error::InvalidInstance(format!(
            "decide_general cannot handle kind {}",
            inst.kind_str()
        )));
    };
    run_graph_pipeline(inst, t1, t2, gaps1, gaps2, cfg)
}

/// Bounded curves `(-a,a) -> (-b,b)` with the boundary rays attached: the
/// same pipeline restricted to the window, with the domain edges playing the
/// role of the infinities.
pub fn decide_bounded(inst: &CrossInstance, cfg: &DecideConfig) -> Result<Decision> {
    let CrossInstance::BoundedGraphGraph { t1, t2, gaps1, gaps2 } = inst else {
        return Err(Error::InvalidInstance(format!(
            "decide_bounded cannot handle kind {}",
            inst.kind_str()
        )));
    };
    run_graph_pipeline(inst, t1, t2, gaps1, gaps2, cfg)
}

fn run_graph_pipeline(
    inst: &CrossInstance,
    t1: &MonotoneBijection,
    t2: &MonotoneBijection,
    gaps1: &GapSet,
    gaps2: &GapSet,
    cfg: &DecideConfig,
) -> Result<Decision> {
    let phi = MonotoneBijection::compose(&t2.invert(), t1)?;
    let mut trace = vec![format!("instance kind: {}", inst.kind_str())];
    trace.push(format!("return map direction: {:?}", phi.direction()));

    // 1. an interval on which the squared return map is the identity kills
    //    uniqueness regardless of the gap structure
    let window = identity_window(&phi, gaps1, gaps2);
    if let Some(ivl) = detect_identity_interval(&phi, &window)? {
        let cert_iv = clamp_width(&ivl, 2.0);
        trace.push(format!("squared return map is the identity on {ivl}"));
        let pair = build_identity_cex(t1, t2, &cert_iv)?;
        let report = verify_vanishing(&pair, inst, cfg.samples, cfg.verify_tol)?;
        return Ok(Decision::certified_not_hup(pair, report, trace));
    }
    trace.push("no interval where the squared return map is the identity".into());

    // 2. joint projection density: the two gap sets must not share an interval
    match gap_intersection(gaps1, gaps2) {
        GapIntersection::Nonempty(shared) => {
            trace.push(format!("projection of the zero set misses {shared}"));
            let pair = build_support_gap_cex(&shared, inst.kind_str())?;
            let report = verify_vanishing(&pair, inst, cfg.samples, cfg.verify_tol)?;
            return Ok(Decision::certified_not_hup(pair, report, trace));
        }
        GapIntersection::Undecided(why) => {
            trace.push(format!("joint projection density undecided: {why}"));
            return Ok(Decision::unknown(
                format!("projection density undecided at family truncation: {why}"),
                trace,
            ));
        }
        GapIntersection::Empty => {
            trace.push("joint projection is dense (gap sets do not intersect)".into());
        }
    }

    // 3. wandering classification of the union of the gap sets
    let wcfg = WanderingConfig { depth: cfg.depth, tol: cfg.tol };
    match wandering_check(&phi, gaps1, gaps2, &wcfg)? {
        WanderingVerdict::Wandering { escapes, family_tail, warnings } => {
            trace.push(format!(
                "gap set wanders: {} escape certificates{}",
                escapes.len(),
                if family_tail.is_some() { ", family tail certified in closed form" } else { "" }
            ));
            for w in &warnings {
                trace.push(format!("warning: {w}"));
            }
            Ok(Decision {
                verdict: Verdict::Hup,
                reason: None,
                evidence: Evidence::WanderingSet { escapes, family_tail },
                trace,
            })
        }
        WanderingVerdict::NonWandering { witness, component, target, m, case } => {
            trace.push(format!(
                "gap set returns: component {component} meets its image at exponent {m} \
                 (case {}), refined witness {witness} -> {target}",
                case.label()
            ));
            let seed = shrink_seed(&phi, &witness)?;
            trace.push(format!("orbit seed after shrinking: {seed}"));
            let pair = build_orbit_cex(t1, t2, &seed, m, case.label())?;
            let report = verify_vanishing(&pair, inst, cfg.samples, cfg.verify_tol)?;
            Ok(Decision::certified_not_hup(pair, report, trace))
        }
        WanderingVerdict::Inconclusive { reason, warnings } => {
            for w in &warnings {
                trace.push(format!("warning: {w}"));
            }
            trace.push(format!("wandering check inconclusive: {reason}"));
            Ok(Decision::unknown(reason, trace))
        }
    }
}

fn leftmost_component(set: &GapSet) -> Interval {
    set.materialize()
        .into_iter()
        .min_by(|a, b| a.lo.partial_cmp(&b.lo).unwrap())
        .expect("called on a nonempty gap set")
}

fn identity_window(phi: &MonotoneBijection, gaps1: &GapSet, gaps2: &GapSet) -> Interval {
    let dom = phi.domain();
    if dom.is_bounded() {
        return dom;
    }
    let mut reach = 1e6f64;
    for h in [gaps1.materialized_hull(), gaps2.materialized_hull()].into_iter().flatten() {
        reach = reach.max(4.0 * h.lo.abs().max(h.hi.abs()));
    }
    Interval { lo: -reach, hi: reach }
}

fn clamp_width(iv: &Interval, max_width: f64) -> Interval {
    if iv.width() <= max_width {
        *iv
    } else {
        let c = iv.midpoint();
        Interval { lo: c - 0.5 * max_width, hi: c + 0.5 * max_width }
    }
}
