//! Construction and verification of annihilating Fourier pairs.
//!
//! A counterexample to uniqueness on the coordinate cross is a nonzero pair
//! of compactly supported continuous functions `(f̂, ĝ)` with
//! `f̂(ξ) + ĝ(Tᵢξ) = 0` wherever the zero set reaches.  Everything lives on
//! the frequency side: the measure itself is never materialized, so the
//! verification is exact in the natural variables.  All constructions reuse
//! one generator bump; each side is a list of support pieces that pull the
//! evaluation point back through an explicit monotone map before hitting the
//! generator.

use crate::bump::{bump, BumpSum};
use crate::curve::{Direction, MonotoneBijection};
use crate::decide::CrossInstance;
use crate::dynamics::NonWanderingCase;
use crate::error::{Error, Result};
use crate::interval::{interval_order, Interval, IntervalOrder};
use serde::{Deserialize, Serialize};

/// Which side of the pair carries the construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    F,
    G,
}

/// One support piece of a side: on `support` the side evaluates to
/// `sign · base(map(ξ))`; elsewhere the piece contributes nothing.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SupportPiece {
    pub support: Interval,
    pub transform: String,
    pub map: MonotoneBijection,
    pub sign: f64,
}

/// Construction family, with the parameters needed to audit it.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum PairKind {
    /// one-sided bump in a projection gap (axis cases)
    #[serde(rename = "thm1")]
    AxisGap { side: Side, gap: Interval },
    /// supported on an interval where the squared return map is the identity
    #[serde(rename = "thm2A")]
    IdentityInterval { interval: Interval },
    /// bump in an interval missed by the joint projection
    #[serde(rename = "support_gap")]
    SupportGap { gap: Interval },
    /// supported on a finite orbit chain of a returning gap interval
    #[serde(rename = "orbit")]
    OrbitChain { seed: Interval, m: u32, case: u8 },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FourierPair {
    #[serde(flatten)]
    pub kind: PairKind,
    /// instance kind this pair annihilates
    pub for_kind: String,
    /// shared generator bump
    pub base: BumpSum,
    pub f_pieces: Vec<SupportPiece>,
    pub g_pieces: Vec<SupportPiece>,
}

impl FourierPair {
    pub fn f_hat(&self, xi: f64) -> f64 {
        eval_side(&self.f_pieces, &self.base, xi)
    }

    pub fn g_hat(&self, eta: f64) -> f64 {
        eval_side(&self.g_pieces, &self.base, eta)
    }

    /// Declared supports of both sides.
    pub fn supports(&self) -> Vec<Interval> {
        self.f_pieces
            .iter()
            .chain(self.g_pieces.iter())
            .map(|p| p.support)
            .collect()
    }
}

fn eval_side(pieces: &[SupportPiece], base: &BumpSum, x: f64) -> f64 {
    let mut acc = 0.0;
    for p in pieces {
        if p.support.contains(x) {
            if let Ok(pulled) = p.map.eval(x) {
                acc += p.sign * base.eval(pulled);
            }
        }
    }
    acc
}

fn piece(support: Interval, transform: &str, map: MonotoneBijection, sign: f64) -> SupportPiece {
    SupportPiece { support, transform: transform.to_string(), map, sign }
}

/// A subinterval of `iv` that stays clear of `point` (the middle half of the
/// wider side).
fn subinterval_avoiding(iv: &Interval, point: f64) -> Result<Interval> {
    if !iv.contains(point) {
        return Ok(*iv);
    }
    let left = point - iv.lo;
    let right = iv.hi - point;
    let (lo, w) = if right >= left { (point, right) } else { (iv.lo, left) };
    let sub = Interval::new(lo + 0.25 * w, lo + 0.75 * w)?;
    if sub.width() < crate::bump::MIN_SUPPORT {
        return Err(Error::FixedPointInsideInterval { lo: iv.lo, hi: iv.hi, fixed_point: point });
    }
    Ok(sub)
}

/// The unique fixed point of a strictly decreasing bijection.
fn fixed_point_of_decreasing(phi: &MonotoneBijection) -> Result<f64> {
    debug_assert_eq!(phi.direction(), Direction::Decreasing);
    match phi {
        MonotoneBijection::Affine { slope, intercept } => Ok(intercept / (1.0 - slope)),
        MonotoneBijection::Pwl(p) => {
            let (xs, ys) = p.breakpoints();
            // Φ(ξ) − ξ is strictly decreasing with a single sign change
            let g = |i: usize| ys[i] - xs[i];
            if g(0) < 0.0 {
                // root in the left tail (total maps only)
                let (l, _) = p
                    .tail_slopes()
                    .ok_or_else(|| Error::InvalidInstance("no fixed point in the domain".into()))?;
                return Ok((ys[0] - l * xs[0]) / (1.0 - l));
            }
            for i in 0..xs.len() - 1 {
                if g(i) >= 0.0 && g(i + 1) <= 0.0 {
                    let slope = (ys[i + 1] - ys[i]) / (xs[i + 1] - xs[i]);
                    return Ok((ys[i] - slope * xs[i]) / (1.0 - slope));
                }
            }
            let (_, r) = p
                .tail_slopes()
                .ok_or_else(|| Error::InvalidInstance("no fixed point in the domain".into()))?;
            let n = xs.len() - 1;
            Ok((ys[n] - r * xs[n]) / (1.0 - r))
        }
    }
}

/// Axis-case counterexample: a bump hidden in a projection gap.
///
/// `side` names the failing projection.  On the pure axis cross the other
/// side is identically zero and the bump is forced to vanish at the partner
/// offset; against a graph the gap either pushes through the curve (side G)
/// or is paired with its pulled-back negation (side F).
pub fn build_thm1_cex(inst: &CrossInstance, gap: &Interval, side: Side) -> Result<FourierPair> {
    let kind = PairKind::AxisGap { side, gap: *gap };
    match (inst, side) {
        (CrossInstance::AxisAxis { b, .. }, Side::F) => {
            let base = bump(gap, Some(*b))?;
            Ok(FourierPair {
                kind,
                for_kind: inst.kind_str().into(),
                base,
                f_pieces: vec![piece(*gap, "id", MonotoneBijection::identity(), 1.0)],
                g_pieces: vec![],
            })
        }
        (CrossInstance::AxisAxis { a, .. }, Side::G) => {
            let base = bump(gap, Some(*a))?;
            Ok(FourierPair {
                kind,
                for_kind: inst.kind_str().into(),
                base,
                f_pieces: vec![],
                g_pieces: vec![piece(*gap, "id", MonotoneBijection::identity(), 1.0)],
            })
        }
        (CrossInstance::AxisGraph { a, t, .. }, Side::F) => {
            // keep the generator clear of T⁻¹(a) so the partner side vanishes
            // at the axis offset
            let avoid = t.invert().eval(*a)?;
            let core = subinterval_avoiding(gap, avoid)?;
            let base = bump(&core, None)?;
            let g_support = t.map_interval(&core)?;
            Ok(FourierPair {
                kind,
                for_kind: inst.kind_str().into(),
                base,
                f_pieces: vec![piece(core, "id", MonotoneBijection::identity(), 1.0)],
                g_pieces: vec![piece(g_support, "T^-1", t.invert(), -1.0)],
            })
        }
        (CrossInstance::AxisGraph { a, t, .. }, Side::G) => {
            let image = t.map_interval(gap)?;
            let base = bump(&image, Some(*a))?;
            Ok(FourierPair {
                kind,
                for_kind: inst.kind_str().into(),
                base,
                f_pieces: vec![],
                g_pieces: vec![piece(image, "id", MonotoneBijection::identity(), 1.0)],
            })
        }
        _ => Err(Error::CertificateMismatch(format!(
            "axis-gap construction does not apply to kind {}",
            inst.kind_str()
        ))),
    }
}

/// Counterexample from an interval `I` on which `Φ² = id`.
///
/// Increasing `Φ` is the identity on `I` and one pulled-back negation
/// suffices; decreasing `Φ` swaps a subinterval `Ĩ ⊂ I` with its image, and
/// the generator is spread over `Ĩ ∪ Φ(Ĩ)`.
pub fn build_identity_cex(
    t1: &MonotoneBijection,
    t2: &MonotoneBijection,
    identity_iv: &Interval,
) -> Result<FourierPair> {
    let phi = MonotoneBijection::compose(&t2.invert(), t1)?;
    let kind = PairKind::IdentityInterval { interval: *identity_iv };
    let for_kind = if t1.is_bounded() { "bounded_graph_graph" } else { "graph_graph" };
    match phi.direction() {
        Direction::Increasing => {
            let base = bump(identity_iv, None)?;
            let g_support = t2.map_interval(identity_iv)?;
            Ok(FourierPair {
                kind,
                for_kind: for_kind.into(),
                base,
                f_pieces: vec![piece(*identity_iv, "id", MonotoneBijection::identity(), 1.0)],
                g_pieces: vec![piece(g_support, "T2^-1", t2.invert(), -1.0)],
            })
        }
        Direction::Decreasing => {
            let xi0 = fixed_point_of_decreasing(&phi)?;
            let tilde = subinterval_avoiding(identity_iv, xi0)?;
            let phi_tilde = phi.map_interval(&tilde)?;
            if tilde.overlap_width(&phi_tilde) > 0.0 {
                return Err(Error::FixedPointInsideInterval {
                    lo: tilde.lo,
                    hi: tilde.hi,
                    fixed_point: xi0,
                });
            }
            let base = bump(&tilde, None)?;
            let phi_inv = phi.invert();
            let t1_inv = t1.invert();
            let pulled_twice = MonotoneBijection::compose(&phi_inv, &t1_inv)?;
            Ok(FourierPair {
                kind,
                for_kind: for_kind.into(),
                base,
                f_pieces: vec![
                    piece(tilde, "id", MonotoneBijection::identity(), 1.0),
                    piece(phi_tilde, "Phi^-1", phi_inv, 1.0),
                ],
                g_pieces: vec![
                    piece(t1.map_interval(&tilde)?, "T1^-1", t1_inv, -1.0),
                    piece(t1.map_interval(&phi_tilde)?, "Phi^-1 T1^-1", pulled_twice, -1.0),
                ],
            })
        }
    }
}

/// Counterexample for a gap of the joint projection: a bump in the shared
/// gap with the partner side identically zero.
pub fn build_support_gap_cex(gap: &Interval, for_kind: &str) -> Result<FourierPair> {
    let base = bump(gap, None)?;
    Ok(FourierPair {
        kind: PairKind::SupportGap { gap: *gap },
        for_kind: for_kind.into(),
        base,
        f_pieces: vec![piece(*gap, "id", MonotoneBijection::identity(), 1.0)],
        g_pieces: vec![],
    })
}

/// Shrink `I` to a seed `I₀` with `I₀ ∩ Φ(I₀) = ∅` and `I₀ ∩ Φ²(I₀) = ∅`,
/// bisecting toward either endpoint.
pub fn shrink_seed(phi: &MonotoneBijection, iv: &Interval) -> Result<Interval> {
    let ok = |cand: &Interval| -> Result<bool> {
        let i1 = phi.map_interval(cand)?;
        let i2 = phi.map_interval(&i1)?;
        Ok(cand.overlap_width(&i1) <= 0.0 && cand.overlap_width(&i2) <= 0.0)
    };
    if ok(iv)? {
        return Ok(*iv);
    }
    let w = iv.width();
    for k in 1..=64u32 {
        let frac = 0.5f64.powi(k as i32);
        if w * frac < crate::bump::MIN_SUPPORT {
            break;
        }
        for cand in [
            Interval { lo: iv.lo, hi: iv.lo + w * frac },
            Interval { lo: iv.hi - w * frac, hi: iv.hi },
        ] {
            if ok(&cand)? {
                return Ok(cand);
            }
        }
    }
    Err(Error::ShrinkFailed { attempts: 64 })
}

/// Counterexample supported on the orbit chain `I₀, Φ(I₀), …, Φᵐ(I₀)` of a
/// returning gap interval.
///
/// The generator sits on `T₁(I₀)`; the partner side copies it along the
/// chain with the index windows chosen per `case` so that every residual
/// lands inside a gap of the matching zero-set component.
pub fn build_orbit_cex(
    t1: &MonotoneBijection,
    t2: &MonotoneBijection,
    seed: &Interval,
    m: u32,
    case: u8,
) -> Result<FourierPair> {
    let case = NonWanderingCase::from_label(case)?;
    if m == 0 {
        return Err(Error::InvalidInstance("orbit exponent m must be at least 1".into()));
    }
    let phi = MonotoneBijection::compose(&t2.invert(), t1)?;
    let phi_inv = phi.invert();
    let pullthrough = MonotoneBijection::compose(t2, &t1.invert())?; // T₂∘T₁⁻¹

    let mut chain = vec![*seed];
    for k in 1..=m {
        chain.push(phi.map_interval(&chain[(k - 1) as usize])?);
    }
    for j in 0..chain.len() {
        for k in (j + 1)..chain.len() {
            if interval_order(&chain[j], &chain[k]) == IntervalOrder::Overlap {
                return Err(Error::OrbitOverlap { j: j as u32, k: k as u32 });
            }
        }
    }

    let base = bump(&t1.map_interval(seed)?, None)?;

    // generator copies along T₁Φᵏ(I₀) for k = 0..m−1
    let mut g_pieces = Vec::new();
    let mut w_pow = MonotoneBijection::identity();
    for (k, link) in chain.iter().enumerate().take(m as usize) {
        let support = t1.map_interval(link)?;
        g_pieces.push(piece(
            support,
            &format!("(T2 T1^-1)^{k}"),
            w_pow.clone(),
            1.0,
        ));
        w_pow = MonotoneBijection::compose(&pullthrough, &w_pow)?;
    }
    for j in 0..g_pieces.len() {
        for k in (j + 1)..g_pieces.len() {
            if interval_order(&g_pieces[j].support, &g_pieces[k].support) == IntervalOrder::Overlap
            {
                return Err(Error::OrbitOverlap { j: j as u32, k: k as u32 });
            }
        }
    }

    // negated copies along Φᵏ(I₀), with the index window depending on the
    // case (which gap sets hold the seed and its final image)
    let ks: Vec<u32> = match case {
        NonWanderingCase::Case1 => (1..=m).collect(),
        NonWanderingCase::Case2 => (1..m).collect(),
        NonWanderingCase::Case3 => (0..=m).collect(),
        NonWanderingCase::Case4 => (0..m).collect(),
    };
    let mut f_pieces = Vec::new();
    let mut phi_inv_pow = MonotoneBijection::identity();
    let mut have = 0u32;
    for k in ks {
        while have < k {
            phi_inv_pow = MonotoneBijection::compose(&phi_inv_pow, &phi_inv)?;
            have += 1;
        }
        let map = MonotoneBijection::compose(t1, &phi_inv_pow)?;
        f_pieces.push(piece(chain[k as usize], &format!("T1 Phi^-{k}"), map, -1.0));
    }

    Ok(FourierPair {
        kind: PairKind::OrbitChain { seed: *seed, m, case: case.label() },
        for_kind: if t1.is_bounded() { "bounded_graph_graph" } else { "graph_graph" }.into(),
        base,
        f_pieces,
        g_pieces,
    })
}

/// Numerical replay of the annihilation identities.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerificationReport {
    /// max over sampled zero-set points of `|f̂ + ĝ∘T|`
    pub max_violation: f64,
    /// sup-norm estimate of the larger side
    pub nontriviality: f64,
    pub samples: u64,
    pub tol: f64,
    pub pass: bool,
}

struct Equation<'a> {
    /// gaps excluded from this identity (sample points inside are skipped)
    excluded: Option<&'a GapSetRef<'a>>,
    /// restrict samples to this window (bounded instances)
    clip: Option<Interval>,
    /// left-hand side of the identity at a sample point
    form: EqForm<'a>,
}

enum EqForm<'a> {
    /// |f̂(ξ) + ĝ(T ξ)|
    Composed { t: &'a MonotoneBijection },
    /// |f̂(ξ) + c| with c = ĝ(offset)
    FreeF { c: f64 },
    /// |c + ĝ(η)| with c = f̂(offset)
    FreeG { c: f64 },
}

struct GapSetRef<'a>(&'a crate::gapset::GapSet);

/// Sample the annihilation identities of `pair` against `inst` and report the
/// worst violation together with a nontriviality estimate.
///
/// Sampling is deterministic: a uniform grid over a window extending 10%
/// beyond every declared support, with all support endpoints, generator
/// peaks and gap endpoints added as mandatory points.
pub fn verify_vanishing(
    pair: &FourierPair,
    inst: &CrossInstance,
    samples: u32,
    tol: f64,
) -> Result<VerificationReport> {
    let samples = samples.max(100);
    let mut max_violation: f64 = 0.0;
    let mut nontriviality: f64 = 0.0;
    let mut used: u64 = 0;

    // nontriviality: evaluate each side at the pulled-back generator peaks
    for (pieces, side_eval) in [
        (&pair.f_pieces, true),
        (&pair.g_pieces, false),
    ] {
        for p in pieces {
            for peak in pair.base.peaks() {
                if let Ok(x) = p.map.invert().eval(peak) {
                    if p.support.contains(x) {
                        let v = if side_eval { pair.f_hat(x) } else { pair.g_hat(x) };
                        nontriviality = nontriviality.max(v.abs());
                    }
                }
            }
        }
    }

    let g1;
    let g2;
    let mut equations: Vec<Equation> = Vec::new();
    match inst {
        CrossInstance::AxisAxis { a, b, gaps1, gaps2 } => {
            g1 = GapSetRef(gaps1);
            g2 = GapSetRef(gaps2);
            equations.push(Equation {
                excluded: Some(&g1),
                clip: None,
                form: EqForm::FreeF { c: pair.g_hat(*a) },
            });
            equations.push(Equation {
                excluded: Some(&g2),
                clip: None,
                form: EqForm::FreeG { c: pair.f_hat(*b) },
            });
        }
        CrossInstance::AxisGraph { a, t, gaps1, gaps2 } => {
            g1 = GapSetRef(gaps1);
            g2 = GapSetRef(gaps2);
            equations.push(Equation {
                excluded: Some(&g1),
                clip: None,
                form: EqForm::FreeF { c: pair.g_hat(*a) },
            });
            equations.push(Equation {
                excluded: Some(&g2),
                clip: None,
                form: EqForm::Composed { t },
            });
        }
        CrossInstance::GraphGraph { t1, t2, gaps1, gaps2 } => {
            g1 = GapSetRef(gaps1);
            g2 = GapSetRef(gaps2);
            equations.push(Equation {
                excluded: Some(&g1),
                clip: None,
                form: EqForm::Composed { t: t1 },
            });
            equations.push(Equation {
                excluded: Some(&g2),
                clip: None,
                form: EqForm::Composed { t: t2 },
            });
        }
        CrossInstance::BoundedGraphGraph { t1, t2, gaps1, gaps2 } => {
            g1 = GapSetRef(gaps1);
            g2 = GapSetRef(gaps2);
            let dom = t1.domain();
            let cod = t1.codomain();
            equations.push(Equation {
                excluded: Some(&g1),
                clip: Some(dom),
                form: EqForm::Composed { t: t1 },
            });
            equations.push(Equation {
                excluded: Some(&g2),
                clip: Some(dom),
                form: EqForm::Composed { t: t2 },
            });
            // boundary rays: f̂ constant against ĝ(±b) beyond ±a, ĝ constant
            // against f̂(∓a) beyond ±b
            equations.push(Equation {
                excluded: None,
                clip: Some(Interval { lo: dom.hi, hi: dom.hi + 1.0 + dom.width() }),
                form: EqForm::FreeF { c: pair.g_hat(cod.hi) },
            });
            equations.push(Equation {
                excluded: None,
                clip: Some(Interval { lo: dom.lo - 1.0 - dom.width(), hi: dom.lo }),
                form: EqForm::FreeF { c: pair.g_hat(cod.lo) },
            });
            equations.push(Equation {
                excluded: None,
                clip: Some(Interval { lo: cod.hi, hi: cod.hi + 1.0 + cod.width() }),
                form: EqForm::FreeG { c: pair.f_hat(dom.lo) },
            });
            equations.push(Equation {
                excluded: None,
                clip: Some(Interval { lo: cod.lo - 1.0 - cod.width(), hi: cod.lo }),
                form: EqForm::FreeG { c: pair.f_hat(dom.hi) },
            });
        }
    }

    for eq in &equations {
        let mut points: Vec<f64> = Vec::new();
        // window: everything that can make the identity nonzero
        let mut hull: Option<Interval> = None;
        let mut push_hull = |iv: Interval| {
            hull = Some(match hull {
                Some(h) => h.hull(&iv),
                None => iv,
            });
        };
        match &eq.form {
            EqForm::Composed { t } => {
                for p in &pair.f_pieces {
                    push_hull(p.support);
                    points.push(p.support.lo);
                    points.push(p.support.hi);
                    points.push(p.support.midpoint());
                }
                let t_inv = t.invert();
                for p in &pair.g_pieces {
                    if let Ok(pre) = t_inv.map_interval(&p.support) {
                        push_hull(pre);
                        points.push(pre.lo);
                        points.push(pre.hi);
                        points.push(pre.midpoint());
                    }
                }
            }
            EqForm::FreeF { .. } => {
                for p in &pair.f_pieces {
                    push_hull(p.support);
                    points.push(p.support.lo);
                    points.push(p.support.hi);
                    points.push(p.support.midpoint());
                }
            }
            EqForm::FreeG { .. } => {
                for p in &pair.g_pieces {
                    push_hull(p.support);
                    points.push(p.support.lo);
                    points.push(p.support.hi);
                    points.push(p.support.midpoint());
                }
            }
        }
        if let Some(set) = eq.excluded {
            for iv in set.0.materialize() {
                points.push(iv.lo);
                points.push(iv.hi);
                push_hull(iv);
            }
        }
        let mut window = hull.unwrap_or(Interval { lo: -1.0, hi: 1.0 });
        let pad = 0.1 * window.width().max(1.0);
        window = Interval { lo: window.lo - pad, hi: window.hi + pad };
        if let Some(clip) = eq.clip {
            window = match window.intersect(&clip) {
                Some(w) => w,
                None => clip,
            };
        }
        let n = samples as usize;
        for i in 0..n {
            points.push(window.lo + window.width() * (i as f64) / ((n - 1) as f64));
        }

        for &x in &points {
            if let Some(clip) = eq.clip {
                if x < clip.lo || x > clip.hi {
                    continue;
                }
            }
            if let Some(set) = eq.excluded {
                if set.0.contains(x) {
                    continue;
                }
            }
            used += 1;
            let v = match &eq.form {
                EqForm::Composed { t } => match t.eval(x) {
                    Ok(tx) => pair.f_hat(x) + pair.g_hat(tx),
                    Err(_) => continue,
                },
                EqForm::FreeF { c } => pair.f_hat(x) + c,
                EqForm::FreeG { c } => c + pair.g_hat(x),
            };
            max_violation = max_violation.max(v.abs());
            let fx = pair.f_hat(x).abs();
            let gx = pair.g_hat(x).abs();
            nontriviality = nontriviality.max(fx).max(gx);
        }
    }

    Ok(VerificationReport {
        max_violation,
        nontriviality,
        samples: used,
        tol,
        pass: max_violation <= tol && nontriviality >= 0.5,
    })
}
