//! Uniqueness for the light cone in `ℝⁿ` against the union of two
//! hyperplanes `H_{u₁} ∪ H_{u₂}`.
//!
//! The cone is `Q(x) = x₁² + … + x_{n−1}² − x_n² = 0`.  Slicing it by a
//! translate of `span(u₁, v₂)` gives a conic whose form coefficients are
//! `A = Q(u₁)`, `B = B(u₁, v₂)`, `C = Q(v₂)`; the sign of `AC − B²` selects
//! the criterion branch.  Parabolic slices always give uniqueness; hyperbolic
//! slices decide by `B(v₁, v₂) ≠ 0`; elliptic slices reduce to whether a sum
//! of scaled arctangents is a rational multiple of `π`, tested through
//! continued-fraction convergents with a stated denominator bound.

use crate::decide::Verdict;
use crate::error::{Error, Result};
use rand::Rng;
use serde::{Deserialize, Serialize};

/// Minkowski bilinear form of signature `(n−1, 1)`, the last coordinate
/// carrying the minus sign.
pub fn bilinear(x: &[f64], y: &[f64]) -> f64 {
    let n = x.len();
    let mut s = 0.0;
    for i in 0..n - 1 {
        s += x[i] * y[i];
    }
    s - x[n - 1] * y[n - 1]
}

/// `Q(x) = B(x, x)`.
pub fn quadratic_form(x: &[f64]) -> f64 {
    bilinear(x, x)
}

fn dot(x: &[f64], y: &[f64]) -> f64 {
    x.iter().zip(y).map(|(a, b)| a * b).sum()
}

fn norm(x: &[f64]) -> f64 {
    dot(x, x).sqrt()
}

/// A two-hyperplane instance against the light cone.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConeInstance {
    pub n: usize,
    pub u1: Vec<f64>,
    pub u2: Vec<f64>,
    /// exact angle `θ₀ = (p/q)·π` when known, enabling the exact-angle path
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub theta_pi_rational: Option<(i64, u64)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q_max: Option<u64>,
}

impl ConeInstance {
    pub fn validate(&self) -> Result<()> {
        if self.n < 3 {
            return Err(Error::InvalidInstance(
                "the two-hyperplane criterion needs dimension at least 3".into(),
            ));
        }
        if self.u1.len() != self.n || self.u2.len() != self.n {
            return Err(Error::InvalidInstance("direction length does not match n".into()));
        }
        for (name, u) in [("u1", &self.u1), ("u2", &self.u2)] {
            if (norm(u) - 1.0).abs() > 1e-12 {
                return Err(Error::InvalidInstance(format!("{name} is not a unit vector")));
            }
        }
        let c = dot(&self.u1, &self.u2);
        if c.abs() >= 1.0 - 1e-12 {
            return Err(Error::DegenerateDirections);
        }
        if let Some((p, q)) = self.theta_pi_rational {
            if q == 0 || p <= 0 || p as u64 >= q {
                return Err(Error::InvalidInstance(
                    "theta_pi_rational must be p/q with 0 < p < q".into(),
                ));
            }
            let theta = std::f64::consts::PI * p as f64 / q as f64;
            if (theta.cos() - c).abs() > 1e-9 {
                return Err(Error::InvalidInstance(format!(
                    "theta_pi_rational {p}/{q} disagrees with the angle between u1 and u2"
                )));
            }
        }
        Ok(())
    }
}

/// Oriented frame spanned by the two directions.
#[derive(Debug, Clone, Serialize)]
pub struct Frame {
    pub theta0: f64,
    pub v1: Vec<f64>,
    pub v2: Vec<f64>,
}

/// `θ₀ = arccos⟨u₁,u₂⟩`, `v₂ ⟂ u₁` completing `u₂`, `v₁ ⟂ u₂` completing the
/// rotated pair.
pub fn build_frame(u1: &[f64], u2: &[f64]) -> Result<Frame> {
    let c = dot(u1, u2);
    if c.abs() >= 1.0 - 1e-12 {
        return Err(Error::DegenerateDirections);
    }
    let theta0 = c.clamp(-1.0, 1.0).acos();
    let s = theta0.sin();
    let v2: Vec<f64> = u1.iter().zip(u2).map(|(a, b)| (b - c * a) / s).collect();
    let v1: Vec<f64> = u1.iter().zip(&v2).map(|(a, b)| c * b - s * a).collect();
    Ok(Frame { theta0, v1, v2 })
}

/// Conic coefficients of the slice through `x + span(u₁, v₂)`:
/// `A s² + 2B st + C t² + 2D s + 2E t = 0`.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct SliceCoefficients {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
    pub e: f64,
}

pub fn slice_coefficients(frame: &Frame, u1: &[f64], x: &[f64]) -> SliceCoefficients {
    SliceCoefficients {
        a: quadratic_form(u1),
        b: bilinear(u1, &frame.v2),
        c: quadratic_form(&frame.v2),
        d: bilinear(x, u1),
        e: bilinear(x, &frame.v2),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ConicClass {
    Parabola,
    Hyperbola,
    Ellipse,
}

/// Sign of `AC − B²` with a `1e-12` band collapsing to the parabola.
pub fn classify(a: f64, b: f64, c: f64) -> ConicClass {
    let disc = a * c - b * b;
    if disc.abs() <= 1e-12 {
        ConicClass::Parabola
    } else if disc > 0.0 {
        ConicClass::Ellipse
    } else {
        ConicClass::Hyperbola
    }
}

/// Rotation angle diagonalizing the form plus the axis ratio of the
/// normalized conic.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct RotationParams {
    pub phi: f64,
    /// ellipse: `b/a ∈ (0, 1]`; hyperbola: `a₀/b₀`
    pub axis_ratio: f64,
}

/// Value of the rotated `s'²`-coefficient at angle `psi`.
fn rotated_leading(a: f64, b: f64, c: f64, psi: f64) -> f64 {
    let (s, co) = psi.sin_cos();
    a * co * co + 2.0 * b * co * s + c * s * s
}

/// Diagonalize `As² + 2Bst + Ct²` by the rotation `tan 2φ = 2B/(A−C)`,
/// orienting `φ` so that the class convention holds: ellipses carry the major
/// axis on the rotated `t'`-axis (`b/a ≤ 1`), hyperbolas carry the positive
/// coefficient on `s'`.
///
/// The base-point terms only gate degeneracy: the slice through `x` is a
/// proper conic iff `D²(B²−AC) − (AE−BD)² ≠ 0`.
pub fn rotation_params(coeffs: &SliceCoefficients, class: ConicClass) -> Result<RotationParams> {
    let SliceCoefficients { a, b, c, d, e } = *coeffs;
    let degeneracy = d * d * (b * b - a * c) - (a * e - b * d) * (a * e - b * d);
    if degeneracy.abs() <= 1e-12 {
        return Err(Error::DegenerateConic);
    }
    if b.abs() <= 1e-12 && (a - c).abs() <= 1e-12 && class == ConicClass::Ellipse {
        // circle: any rotation diagonalizes; pin the representative
        return Ok(RotationParams { phi: 0.0, axis_ratio: 1.0 });
    }
    let mut phi = 0.5 * (2.0 * b).atan2(a - c);
    let half_pi = std::f64::consts::FRAC_PI_2;
    match class {
        ConicClass::Parabola => Err(Error::InvalidInstance(
            "rotation parameters are not defined for parabolic slices".into(),
        )),
        ConicClass::Ellipse => {
            // ratio (b/a)² = N(φ)/N(φ+π/2) must land in (0, 1]
            if rotated_leading(a, b, c, phi) > rotated_leading(a, b, c, phi + half_pi) {
                phi += half_pi;
            }
            let ratio2 = rotated_leading(a, b, c, phi) / rotated_leading(a, b, c, phi + half_pi);
            Ok(RotationParams { phi, axis_ratio: ratio2.sqrt() })
        }
        ConicClass::Hyperbola => {
            if rotated_leading(a, b, c, phi) < 0.0 {
                phi += half_pi;
            }
            let pos = rotated_leading(a, b, c, phi);
            let neg = rotated_leading(a, b, c, phi + half_pi);
            debug_assert!(pos > 0.0 && neg < 0.0);
            Ok(RotationParams { phi, axis_ratio: (-neg / pos).sqrt() })
        }
    }
}

/// Outcome of the `πℚ`-membership test.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum RationalityResult {
    Rational { p: i64, q: u64 },
    ExactRational { p: i64, q: u64 },
    NoRationalUpTo { q_max: u64 },
}

/// Best rational approximations of `x` through continued-fraction
/// convergents with denominators up to `q_max`; `Rational` when one lands
/// within `tol`.
pub fn rationality_test(x: f64, q_max: u64, tol: f64) -> RationalityResult {
    let (mut p_prev, mut q_prev) = (1i128, 0i128);
    let (mut p_cur, mut q_cur) = (x.floor() as i128, 1i128);
    let mut frac = x - x.floor();
    for _ in 0..64 {
        if q_cur as u64 <= q_max && q_cur > 0 {
            let approx = p_cur as f64 / q_cur as f64;
            if (x - approx).abs() <= tol {
                return RationalityResult::Rational { p: p_cur as i64, q: q_cur as u64 };
            }
        }
        if frac.abs() < 1e-18 {
            break;
        }
        let inv = 1.0 / frac;
        let digit = inv.floor();
        if !digit.is_finite() || digit >= 1e18 {
            break;
        }
        let d = digit as i128;
        let (p_next, q_next) = (d * p_cur + p_prev, d * q_cur + q_prev);
        p_prev = p_cur;
        q_prev = q_cur;
        p_cur = p_next;
        q_cur = q_next;
        if q_cur as u64 > q_max && q_prev as u64 > q_max {
            break;
        }
        frac = inv - digit;
    }
    RationalityResult::NoRationalUpTo { q_max }
}

/// `arctan(r·tan ψ)` extended continuously across odd multiples of `π/2`.
fn scaled_arctan(r: f64, psi: f64) -> f64 {
    use std::f64::consts::{FRAC_PI_2, PI};
    // reduce to (−π/2, π/2]
    let mut t = psi % PI;
    if t > FRAC_PI_2 {
        t -= PI;
    } else if t <= -FRAC_PI_2 {
        t += PI;
    }
    if (t - FRAC_PI_2).abs() <= 1e-15 {
        return FRAC_PI_2;
    }
    (r * t.tan()).atan()
}

/// Decision document for a cone instance.
#[derive(Debug, Clone, Serialize)]
pub struct ConeDecision {
    pub verdict: Verdict,
    pub classification: ConicClass,
    pub theta0: f64,
    pub coefficients: SliceCoefficients,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rotation: Option<RotationParams>,
    /// ellipse branch: the arctangent sum divided by `π`
    #[serde(skip_serializing_if = "Option::is_none")]
    pub x_over_pi: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rationality: Option<RationalityResult>,
    /// a `NoRationalUpTo` uniqueness verdict is conditional on the bound
    pub conditional: bool,
    pub trace: Vec<String>,
}

/// Single hyperplane against the cone: uniqueness iff the direction is
/// light-like.
pub fn decide_single_hyperplane(u: &[f64], tol: f64) -> Result<Verdict> {
    if u.len() < 3 {
        return Err(Error::InvalidInstance("need dimension at least 3".into()));
    }
    if (norm(u) - 1.0).abs() > 1e-12 {
        return Err(Error::InvalidInstance("u is not a unit vector".into()));
    }
    Ok(if quadratic_form(u).abs() <= tol { Verdict::Hup } else { Verdict::NotHup })
}

/// A deterministic base point on the cone giving a non-degenerate slice.
fn generic_base_point(frame: &Frame, u1: &[f64]) -> Result<Vec<f64>> {
    let n = u1.len();
    let mut candidates: Vec<Vec<f64>> = Vec::new();
    for i in 0..n - 1 {
        let mut x = vec![0.0; n];
        x[i] = 1.0;
        x[n - 1] = 1.0;
        candidates.push(x);
        let mut y = vec![0.0; n];
        y[i] = -1.0;
        y[n - 1] = 1.0;
        candidates.push(y);
    }
    // a skewed light-like direction in case the axis-aligned ones all
    // degenerate against the frame
    let mut skew = vec![0.0; n];
    for (i, v) in skew.iter_mut().enumerate().take(n - 1) {
        *v = 1.0 / (i + 1) as f64;
    }
    let r = skew[..n - 1].iter().map(|v| v * v).sum::<f64>().sqrt();
    for v in skew.iter_mut().take(n - 1) {
        *v /= r;
    }
    skew[n - 1] = 1.0;
    candidates.push(skew);

    for x in candidates {
        let coeffs = slice_coefficients(frame, u1, &x);
        let SliceCoefficients { a, b, c, d, e } = coeffs;
        let degeneracy = d * d * (b * b - a * c) - (a * e - b * d) * (a * e - b * d);
        if degeneracy.abs() > 1e-9 {
            return Ok(x);
        }
    }
    Err(Error::DegenerateConic)
}

/// The hyperbolic-slice criterion value `B(v₁, v₂)`, cross-checked against
/// the closed form `cos θ₀ (C − B tan θ₀)` away from right angles.
fn hyperbola_criterion(frame: &Frame, coeffs: &SliceCoefficients) -> Result<f64> {
    let bv = bilinear(&frame.v1, &frame.v2);
    let c0 = frame.theta0.cos();
    if c0.abs() > 1e-6 {
        let closed = c0 * (coeffs.c - coeffs.b * frame.theta0.tan());
        if (bv - closed).abs() > 1e-10 * (1.0 + bv.abs()) {
            return Err(Error::InvalidInstance(format!(
                "internal inconsistency: B(v1,v2) = {bv} but the closed form gives {closed}"
            )));
        }
    }
    Ok(bv)
}

/// Decide `(cone, H_{u₁} ∪ H_{u₂})` for directions with `Q(uᵢ) ≠ 0`.
///
/// Light-like directions are rejected: a single light-like hyperplane is
/// already a uniqueness pair with the cone, so the two-hyperplane criteria
/// do not apply.  Use [`decide_two_hyperplanes`] for the total decision.
pub fn decide_cone(inst: &ConeInstance, q_max: u64, tol: f64) -> Result<ConeDecision> {
    inst.validate()?;
    for u in [&inst.u1, &inst.u2] {
        if quadratic_form(u).abs() <= tol {
            return Err(Error::LightLikeDirection);
        }
    }
    let frame = build_frame(&inst.u1, &inst.u2)?;
    let x = generic_base_point(&frame, &inst.u1)?;
    let coeffs = slice_coefficients(&frame, &inst.u1, &x);
    let class = classify(coeffs.a, coeffs.b, coeffs.c);
    let mut trace = vec![
        format!("theta0 = {:.17}", frame.theta0),
        format!("slice form: A = {:.17}, B = {:.17}, C = {:.17}", coeffs.a, coeffs.b, coeffs.c),
        format!("discriminant AC - B^2 = {:.17}", coeffs.a * coeffs.c - coeffs.b * coeffs.b),
        format!("classification: {class:?}"),
    ];

    match class {
        ConicClass::Parabola => {
            trace.push("parabolic slices always force uniqueness".into());
            Ok(ConeDecision {
                verdict: Verdict::Hup,
                classification: class,
                theta0: frame.theta0,
                coefficients: coeffs,
                rotation: None,
                x_over_pi: None,
                rationality: None,
                conditional: false,
                trace,
            })
        }
        ConicClass::Hyperbola => {
            let bv = hyperbola_criterion(&frame, &coeffs)?;
            trace.push(format!("B(v1, v2) = {bv:.17}"));
            let verdict = if bv.abs() > tol { Verdict::Hup } else { Verdict::NotHup };
            let rotation = rotation_params(&coeffs, class).ok();
            Ok(ConeDecision {
                verdict,
                classification: class,
                theta0: frame.theta0,
                coefficients: coeffs,
                rotation,
                x_over_pi: None,
                rationality: None,
                conditional: false,
                trace,
            })
        }
        ConicClass::Ellipse => {
            let rot = rotation_params(&coeffs, class)?;
            let r = rot.axis_ratio;
            trace.push(format!("rotation phi = {:.17}, axis ratio b/a = {:.17}", rot.phi, r));
            // the angle sum and the equivalent line-angle difference must
            // agree; computing both guards the sign conventions
            let sum = scaled_arctan(r, frame.theta0 - rot.phi) + scaled_arctan(r, rot.phi);
            let theta1 = std::f64::consts::PI - rot.phi;
            let theta2 = frame.theta0 - rot.phi;
            let diff = scaled_arctan(r, theta2) - scaled_arctan(r, theta1);
            // the two forms may differ by a multiple of pi when a line sits
            // on the tangent pole; the criterion lives modulo pi
            let delta = (sum - diff) / std::f64::consts::PI;
            if (delta - delta.round()).abs() > 1e-9 {
                return Err(Error::InvalidInstance(format!(
                    "internal inconsistency: angle-sum form {sum} vs line-difference form {diff}"
                )));
            }
            let x_over_pi = sum / std::f64::consts::PI;
            trace.push(format!("arctangent sum / pi = {x_over_pi:.17}"));

            let is_circle = coeffs.b.abs() <= 1e-12 && (coeffs.a - coeffs.c).abs() <= 1e-12;
            if is_circle {
                // the criterion must not depend on the diagonalizing angle
                let probe = 0.3;
                let alt = scaled_arctan(1.0, frame.theta0 - probe) + scaled_arctan(1.0, probe);
                let delta = (sum - alt).abs() / std::f64::consts::PI;
                let delta_mod = (delta - delta.round()).abs();
                if delta_mod > 1e-9 {
                    return Err(Error::InvalidInstance(format!(
                        "internal inconsistency: circle criterion moved by {delta_mod} under a \
                         rotation change"
                    )));
                }
                trace.push("circle slice: criterion verified rotation-independent".into());

                // exact path: a circle slice with an exact angle decides
                // unconditionally
                if let Some((p, q)) = inst.theta_pi_rational {
                    let g = gcd(p.unsigned_abs(), q);
                    let (p, q) = (p / g as i64, q / g);
                    trace.push(format!(
                        "exact angle {p}/{q} pi on a circle slice: rational without search"
                    ));
                    return Ok(ConeDecision {
                        verdict: Verdict::NotHup,
                        classification: class,
                        theta0: frame.theta0,
                        coefficients: coeffs,
                        rotation: Some(rot),
                        x_over_pi: Some(x_over_pi),
                        rationality: Some(RationalityResult::ExactRational { p, q }),
                        conditional: false,
                        trace,
                    });
                }
            }

            let rat = rationality_test(x_over_pi, q_max, tol);
            let (verdict, conditional) = match rat {
                RationalityResult::Rational { p, q } => {
                    trace.push(format!("found rational {p}/{q} within tolerance"));
                    (Verdict::NotHup, false)
                }
                RationalityResult::ExactRational { .. } => unreachable!(),
                RationalityResult::NoRationalUpTo { q_max } => {
                    trace.push(format!(
                        "no rational with denominator <= {q_max}: uniqueness conditional on the bound"
                    ));
                    (Verdict::Hup, true)
                }
            };
            Ok(ConeDecision {
                verdict,
                classification: class,
                theta0: frame.theta0,
                coefficients: coeffs,
                rotation: Some(rot),
                x_over_pi: Some(x_over_pi),
                rationality: Some(rat),
                conditional,
                trace,
            })
        }
    }
}

/// Total decision for the pair of hyperplanes: when a direction is
/// light-like the union inherits uniqueness from that hyperplane alone, and
/// the criterion branches never run.
pub fn decide_two_hyperplanes(inst: &ConeInstance, q_max: u64, tol: f64) -> Result<ConeDecision> {
    match decide_cone(inst, q_max, tol) {
        Err(Error::LightLikeDirection) => {
            inst.validate()?;
            let frame = build_frame(&inst.u1, &inst.u2)?;
            let coeffs = slice_coefficients(&frame, &inst.u1, &vec![0.0; inst.n]);
            let class = classify(coeffs.a, coeffs.b, coeffs.c);
            let which = if quadratic_form(&inst.u1).abs() <= tol { "u1" } else { "u2" };
            Ok(ConeDecision {
                verdict: Verdict::Hup,
                classification: class,
                theta0: frame.theta0,
                coefficients: coeffs,
                rotation: None,
                x_over_pi: None,
                rationality: None,
                conditional: false,
                trace: vec![
                    format!("{which} is light-like: the single hyperplane already forces uniqueness"),
                    format!("slice classification for reference: {class:?}"),
                ],
            })
        }
        other => other,
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a.max(1)
}

/// One disagreement between the two hyperbola criteria.
#[derive(Debug, Clone, Serialize)]
pub struct CriterionDisagreement {
    pub u1: Vec<f64>,
    pub u2: Vec<f64>,
    pub bilinear_says_hup: bool,
    pub tangent_says_hup: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct CrossValidationReport {
    pub trials: u32,
    pub hyperbolas: u32,
    pub skipped: u32,
    pub disagreements: Vec<CriterionDisagreement>,
}

/// The line-angle criterion for a hyperbolic slice: the two hyperplane
/// traces are the lines at `−φ` and `θ₀ − φ` in the rotated coordinates, and
/// uniqueness holds iff their tangent product misses `(a₀/b₀)²`, with the
/// axis-parallel subcases handled separately.
fn tangent_criterion(theta0: f64, rot: &RotationParams, tol: f64) -> bool {
    use std::f64::consts::{FRAC_PI_2, PI};
    let normalize = |t: f64| {
        let mut v = t % PI;
        if v < 0.0 {
            v += PI;
        }
        if v >= PI - 1e-12 {
            v = 0.0;
        }
        v
    };
    let th1 = normalize(-rot.phi);
    let th2 = normalize(theta0 - rot.phi);
    let ratio2 = rot.axis_ratio * rot.axis_ratio;
    let horizontal = |t: f64| t <= 1e-12;
    let vertical = |t: f64| (t - FRAC_PI_2).abs() <= 1e-12;
    if horizontal(th1) {
        return !vertical(th2);
    }
    if horizontal(th2) {
        return !vertical(th1);
    }
    if vertical(th1) || vertical(th2) {
        // one tangent infinite, the other finite nonzero: the product escapes
        return true;
    }
    (th1.tan() * th2.tan() - ratio2).abs() > tol
}

/// Sample random hyperbolic instances and compare the bilinear-form
/// criterion with the tangent criterion; the report lists disagreements.
pub fn cross_validate_hyperbola(
    n: usize,
    trials: u32,
    tol: f64,
    rng: &mut impl Rng,
) -> Result<CrossValidationReport> {
    let mut report =
        CrossValidationReport { trials, hyperbolas: 0, skipped: 0, disagreements: Vec::new() };
    let mut done = 0u32;
    while done < trials {
        let u1 = random_unit(n, rng);
        let u2 = random_unit(n, rng);
        done += 1;
        if quadratic_form(&u1).abs() <= 1e-3 || quadratic_form(&u2).abs() <= 1e-3 {
            report.skipped += 1;
            continue;
        }
        if dot(&u1, &u2).abs() >= 1.0 - 1e-9 {
            report.skipped += 1;
            continue;
        }
        let frame = build_frame(&u1, &u2)?;
        let Ok(x) = generic_base_point(&frame, &u1) else {
            report.skipped += 1;
            continue;
        };
        let coeffs = slice_coefficients(&frame, &u1, &x);
        if classify(coeffs.a, coeffs.b, coeffs.c) != ConicClass::Hyperbola {
            report.skipped += 1;
            continue;
        }
        // stay clear of the decision boundary where both criteria are
        // tolerance-sensitive
        let bv = hyperbola_criterion(&frame, &coeffs)?;
        if bv.abs() <= 1e-6 && bv.abs() > 1e-12 {
            report.skipped += 1;
            continue;
        }
        report.hyperbolas += 1;
        let rot = rotation_params(&coeffs, ConicClass::Hyperbola)?;
        let bilinear_says = bv.abs() > tol;
        let tangent_says = tangent_criterion(frame.theta0, &rot, tol);
        if bilinear_says != tangent_says {
            report.disagreements.push(CriterionDisagreement {
                u1,
                u2,
                bilinear_says_hup: bilinear_says,
                tangent_says_hup: tangent_says,
            });
        }
    }
    Ok(report)
}

pub fn random_unit(n: usize, rng: &mut impl Rng) -> Vec<f64> {
    loop {
        let v: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let r = norm(&v);
        if r > 1e-3 {
            return v.into_iter().map(|x| x / r).collect();
        }
    }
}
