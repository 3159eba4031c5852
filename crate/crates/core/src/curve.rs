//! Continuous strictly monotone bijections of the line and of bounded open
//! intervals: exact evaluation, inversion, composition and interval images.
//!
//! Three shapes cover every construction the decision pipeline needs:
//! affine maps, piecewise-linear maps with affine tails (total on `ℝ`), and
//! bounded piecewise-linear bijections `(-a, a) -> (-b, b)`.  The family is
//! closed under inversion and composition, and orbit arithmetic stays exact
//! at breakpoints.

use crate::error::{Error, Result};
use crate::interval::Interval;
use serde::{Deserialize, Serialize};

/// Relative tolerance for breakpoint dedup when merging piecewise grids.
const MERGE_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Direction {
    Increasing,
    Decreasing,
}

impl Direction {
    pub fn sign(self) -> f64 {
        match self {
            Direction::Increasing => 1.0,
            Direction::Decreasing => -1.0,
        }
    }
}

/// A piecewise-linear strictly monotone map.
///
/// `ext = Some((left, right))` extends the first/last breakpoint affinely with
/// the given tail slopes, making the map a bijection of `ℝ`.  `ext = None`
/// restricts the map to the open domain `(xs[0], xs[last])`, a bijection onto
/// the open interval spanned by `ys`.
#[derive(Debug, Clone, PartialEq)]
pub struct Pwl {
    xs: Vec<f64>,
    ys: Vec<f64>,
    ext: Option<(f64, f64)>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum MonotoneBijection {
    Affine { slope: f64, intercept: f64 },
    Pwl(Pwl),
}

use MonotoneBijection as MB;

fn ensure_strictly_monotone(v: &[f64], what: &str) -> Result<Direction> {
    if v.len() < 2 {
        return Err(Error::InvalidCurve(format!("{what}: need at least 2 breakpoints")));
    }
    if v.iter().any(|x| !x.is_finite()) {
        return Err(Error::InvalidCurve(format!("{what}: non-finite entry")));
    }
    let increasing = v[1] > v[0];
    for w in v.windows(2) {
        let ok = if increasing { w[1] > w[0] } else { w[1] < w[0] };
        if !ok {
            return Err(Error::InvalidCurve(format!("{what}: not strictly monotone")));
        }
    }
    Ok(if increasing { Direction::Increasing } else { Direction::Decreasing })
}

impl MonotoneBijection {
    pub fn affine(slope: f64, intercept: f64) -> Result<Self> {
        if slope == 0.0 || !slope.is_finite() || !intercept.is_finite() {
            return Err(Error::InvalidCurve(format!(
                "affine map needs finite nonzero slope, got slope={slope} intercept={intercept}"
            )));
        }
        Ok(MB::Affine { slope, intercept })
    }

    pub fn identity() -> Self {
        MB::Affine { slope: 1.0, intercept: 0.0 }
    }

    /// Total piecewise-linear bijection of `ℝ`; the tails continue the first
    /// and last segments.
    pub fn pwl(xs: Vec<f64>, ys: Vec<f64>) -> Result<Self> {
        let n = xs.len();
        if n != ys.len() {
            return Err(Error::InvalidCurve("pwl: x/y length mismatch".into()));
        }
        ensure_strictly_monotone(&xs, "pwl x")?;
        ensure_strictly_monotone(&ys, "pwl y")?;
        let left = (ys[1] - ys[0]) / (xs[1] - xs[0]);
        let right = (ys[n - 1] - ys[n - 2]) / (xs[n - 1] - xs[n - 2]);
        Self::pwl_with_tails(xs, ys, left, right)
    }

    /// Total piecewise-linear bijection with explicit tail slopes.
    pub fn pwl_with_tails(xs: Vec<f64>, ys: Vec<f64>, left: f64, right: f64) -> Result<Self> {
        if xs.len() != ys.len() {
            return Err(Error::InvalidCurve("pwl: x/y length mismatch".into()));
        }
        ensure_strictly_monotone(&xs, "pwl x")?;
        let dir = ensure_strictly_monotone(&ys, "pwl y")?;
        for (name, s) in [("left", left), ("right", right)] {
            if !s.is_finite() || s == 0.0 || (s > 0.0) != (dir == Direction::Increasing) {
                return Err(Error::InvalidCurve(format!(
                    "pwl: {name} tail slope {s} inconsistent with direction"
                )));
            }
        }
        Ok(MB::Pwl(Pwl { xs, ys, ext: Some((left, right)) }))
    }

    /// Bounded piecewise-linear bijection `(-a, a) -> (-b, b)`.
    ///
    /// The breakpoint lists include the closed endpoints `±a` mapping to `±b`
    /// (limit values; the open map is never evaluated there).
    pub fn bounded_pwl(a: f64, b: f64, xs: Vec<f64>, ys: Vec<f64>) -> Result<Self> {
        if !(a > 0.0 && b > 0.0) {
            return Err(Error::InvalidCurve("bounded_pwl: need a > 0 and b > 0".into()));
        }
        let m = Self::bounded_pwl_general(xs, ys)?;
        let (dom, cod) = (m.domain(), m.codomain());
        let sym = |i: Interval, half: f64| (i.lo + half).abs() <= MERGE_TOL * (1.0 + half) && (i.hi - half).abs() <= MERGE_TOL * (1.0 + half);
        if !sym(dom, a) || !sym(cod, b) {
            return Err(Error::InvalidCurve(format!(
                "bounded_pwl: breakpoints span {dom} -> {cod}, expected (-{a}, {a}) -> (-{b}, {b})"
            )));
        }
        Ok(m)
    }

    /// Bounded piecewise-linear bijection between arbitrary open intervals.
    pub fn bounded_pwl_general(xs: Vec<f64>, ys: Vec<f64>) -> Result<Self> {
        if xs.len() != ys.len() {
            return Err(Error::InvalidCurve("bounded_pwl: x/y length mismatch".into()));
        }
        ensure_strictly_monotone(&xs, "bounded_pwl x")?;
        ensure_strictly_monotone(&ys, "bounded_pwl y")?;
        Ok(MB::Pwl(Pwl { xs, ys, ext: None }))
    }

    pub fn direction(&self) -> Direction {
        match self {
            MB::Affine { slope, .. } => {
                if *slope > 0.0 {
                    Direction::Increasing
                } else {
                    Direction::Decreasing
                }
            }
            MB::Pwl(p) => {
                if p.ys[1] > p.ys[0] {
                    Direction::Increasing
                } else {
                    Direction::Decreasing
                }
            }
        }
    }

    pub fn is_bounded(&self) -> bool {
        matches!(self, MB::Pwl(Pwl { ext: None, .. }))
    }

    pub fn domain(&self) -> Interval {
        match self {
            MB::Affine { .. } => Interval::all(),
            MB::Pwl(p) => match p.ext {
                Some(_) => Interval::all(),
                None => Interval { lo: p.xs[0], hi: *p.xs.last().unwrap() },
            },
        }
    }

    pub fn codomain(&self) -> Interval {
        match self {
            MB::Affine { .. } => Interval::all(),
            MB::Pwl(p) => match p.ext {
                Some(_) => Interval::all(),
                None => {
                    let (first, last) = (p.ys[0], *p.ys.last().unwrap());
                    Interval { lo: first.min(last), hi: first.max(last) }
                }
            },
        }
    }

    /// Evaluate at a point of the open domain.
    pub fn eval(&self, x: f64) -> Result<f64> {
        match self {
            MB::Affine { slope, intercept } => Ok(slope * x + intercept),
            MB::Pwl(p) => p.eval(x),
        }
    }

    /// Evaluate allowing the closed endpoints of bounded maps (limit values)
    /// and `±inf` for total maps.
    fn eval_closure(&self, x: f64) -> Result<f64> {
        if x.is_infinite() {
            return match self {
                MB::Pwl(Pwl { ext: None, .. }) => Err(self.domain_error(x)),
                _ => Ok(x * self.direction().sign()),
            };
        }
        match self {
            MB::Affine { slope, intercept } => Ok(slope * x + intercept),
            MB::Pwl(p) => p.eval_closure(x).ok_or_else(|| self.domain_error(x)),
        }
    }

    fn domain_error(&self, point: f64) -> Error {
        let d = self.domain();
        Error::DomainError { point, lo: d.lo, hi: d.hi }
    }

    /// The inverse bijection; `invert(invert(T))` is structurally `T` up to
    /// float rounding of reciprocal slopes.
    pub fn invert(&self) -> Self {
        match self {
            MB::Affine { slope, intercept } => MB::Affine {
                slope: 1.0 / slope,
                intercept: -intercept / slope,
            },
            MB::Pwl(p) => {
                let inc = p.ys[1] > p.ys[0];
                let (xs, ys) = if inc {
                    (p.ys.clone(), p.xs.clone())
                } else {
                    let mut xs = p.ys.clone();
                    let mut ys = p.xs.clone();
                    xs.reverse();
                    ys.reverse();
                    (xs, ys)
                };
                let ext = p.ext.map(|(l, r)| if inc { (1.0 / l, 1.0 / r) } else { (1.0 / r, 1.0 / l) });
                MB::Pwl(Pwl { xs, ys, ext })
            }
        }
    }

    /// Composition `outer ∘ inner`.  Affine pairs stay affine in closed form;
    /// piecewise grids are merged at exact breakpoints.
    pub fn compose(outer: &Self, inner: &Self) -> Result<Self> {
        if let (MB::Affine { slope: sa, intercept: ca }, MB::Affine { slope: sb, intercept: cb }) =
            (outer, inner)
        {
            return MB::affine(sa * sb, sa * cb + ca);
        }

        let cod_b = inner.codomain();
        let dom_a = outer.domain();
        if !outer.is_bounded() {
            // total outer accepts anything
        } else {
            let tol = MERGE_TOL * (1.0 + dom_a.lo.abs().max(dom_a.hi.abs()));
            if !(cod_b.lo >= dom_a.lo - tol && cod_b.hi <= dom_a.hi + tol) {
                return Err(Error::DomainMismatch);
            }
        }

        let dom = inner.domain();
        let mut xs: Vec<f64> = Vec::new();
        if !dom.lo.is_infinite() {
            xs.push(dom.lo);
            xs.push(dom.hi);
        }
        if let MB::Pwl(p) = inner {
            xs.extend_from_slice(&p.xs);
        }
        if let MB::Pwl(p) = outer {
            let inner_inv = inner.invert();
            for &bp in &p.xs {
                if cod_b.lo <= bp && bp <= cod_b.hi {
                    if let Ok(pre) = inner_inv.eval_closure(bp) {
                        if dom.lo <= pre && pre <= dom.hi {
                            xs.push(pre);
                        }
                    }
                }
            }
        }
        xs.sort_by(|a, b| a.partial_cmp(b).unwrap());
        xs.dedup_by(|a, b| (*a - *b).abs() <= MERGE_TOL * (1.0 + a.abs()));
        if xs.len() < 2 {
            return Err(Error::InvalidCurve("composition collapsed to fewer than 2 breakpoints".into()));
        }

        let clamp = |v: f64| {
            if outer.is_bounded() {
                v.clamp(dom_a.lo, dom_a.hi)
            } else {
                v
            }
        };
        let ys = xs
            .iter()
            .map(|&x| outer.eval_closure(clamp(inner.eval_closure(x)?)))
            .collect::<Result<Vec<f64>>>()?;
        ensure_strictly_monotone(&ys, "composed y")?;

        let ext = if dom.lo.is_infinite() && !outer.is_bounded() {
            let (bl, br) = inner.tail_slopes();
            let (al, ar) = outer.tail_slopes();
            let left = if inner.direction() == Direction::Increasing { al * bl } else { ar * bl };
            let right = if inner.direction() == Direction::Increasing { ar * br } else { al * br };
            Some((left, right))
        } else {
            None
        };
        Ok(MB::Pwl(Pwl { xs, ys, ext }))
    }

    /// Tail slopes (left, right) of a total map.
    fn tail_slopes(&self) -> (f64, f64) {
        match self {
            MB::Affine { slope, .. } => (*slope, *slope),
            MB::Pwl(p) => p.ext.unwrap_or((1.0, 1.0)),
        }
    }

    /// Image of an open interval; endpoints swap when the map decreases.
    pub fn map_interval(&self, iv: &Interval) -> Result<Interval> {
        let dom = self.domain();
        if self.is_bounded() {
            let tol = MERGE_TOL * (1.0 + dom.lo.abs().max(dom.hi.abs()));
            if !(iv.lo >= dom.lo - tol && iv.hi <= dom.hi + tol) {
                return Err(self.domain_error(if iv.lo < dom.lo { iv.lo } else { iv.hi }));
            }
        }
        let a = self.eval_closure(iv.lo.max(dom.lo))?;
        let b = self.eval_closure(iv.hi.min(dom.hi))?;
        match self.direction() {
            Direction::Increasing => Interval::new(a, b),
            Direction::Decreasing => Interval::new(b, a),
        }
    }

    /// Componentwise closeness, for tests on float-perturbed structures.
    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        let close = |a: f64, b: f64| (a - b).abs() <= tol * (1.0 + a.abs().max(b.abs()));
        match (self, other) {
            (MB::Affine { slope: s1, intercept: c1 }, MB::Affine { slope: s2, intercept: c2 }) => {
                close(*s1, *s2) && close(*c1, *c2)
            }
            (MB::Pwl(p), MB::Pwl(q)) => {
                p.xs.len() == q.xs.len()
                    && p.xs.iter().zip(&q.xs).all(|(a, b)| close(*a, *b))
                    && p.ys.iter().zip(&q.ys).all(|(a, b)| close(*a, *b))
                    && match (p.ext, q.ext) {
                        (None, None) => true,
                        (Some((l1, r1)), Some((l2, r2))) => close(l1, l2) && close(r1, r2),
                        _ => false,
                    }
            }
            _ => false,
        }
    }
}

impl Pwl {
    fn eval(&self, x: f64) -> Result<f64> {
        let n = self.xs.len();
        if self.ext.is_none() && (x <= self.xs[0] || x >= self.xs[n - 1]) {
            return Err(Error::DomainError { point: x, lo: self.xs[0], hi: self.xs[n - 1] });
        }
        Ok(self.eval_raw(x))
    }

    fn eval_closure(&self, x: f64) -> Option<f64> {
        let n = self.xs.len();
        if self.ext.is_none() && (x < self.xs[0] || x > self.xs[n - 1]) {
            return None;
        }
        Some(self.eval_raw(x))
    }

    fn eval_raw(&self, x: f64) -> f64 {
        let n = self.xs.len();
        if let Some((left, right)) = self.ext {
            if x < self.xs[0] {
                return self.ys[0] + left * (x - self.xs[0]);
            }
            if x > self.xs[n - 1] {
                return self.ys[n - 1] + right * (x - self.xs[n - 1]);
            }
        }
        match self.xs.binary_search_by(|v| v.partial_cmp(&x).unwrap()) {
            Ok(i) => self.ys[i],
            Err(i) => {
                // xs[i-1] < x < xs[i]
                let (x0, x1) = (self.xs[i - 1], self.xs[i]);
                let (y0, y1) = (self.ys[i - 1], self.ys[i]);
                y0 + (x - x0) * (y1 - y0) / (x1 - x0)
            }
        }
    }

    pub fn breakpoints(&self) -> (&[f64], &[f64]) {
        (&self.xs, &self.ys)
    }

    pub fn tail_slopes(&self) -> Option<(f64, f64)> {
        self.ext
    }
}

// --- JSON encoding -------------------------------------------------------
//
// {"type":"affine","slope":s,"intercept":c}
// {"type":"pwl","x":[...],"y":[...]}
// {"type":"bounded_pwl","a":a,"b":b,"x":[...],"y":[...]}   (a, b optional on
// input when derivable from the breakpoints; asymmetric bounded maps omit them)

#[derive(Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
enum CurveRepr {
    Affine {
        slope: f64,
        intercept: f64,
    },
    Pwl {
        x: Vec<f64>,
        y: Vec<f64>,
    },
    BoundedPwl {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        a: Option<f64>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        b: Option<f64>,
        x: Vec<f64>,
        y: Vec<f64>,
    },
}

impl Serialize for MonotoneBijection {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let repr = match self {
            MB::Affine { slope, intercept } => CurveRepr::Affine { slope: *slope, intercept: *intercept },
            MB::Pwl(p) => match p.ext {
                Some(_) => CurveRepr::Pwl { x: p.xs.clone(), y: p.ys.clone() },
                None => {
                    let dom = Interval { lo: p.xs[0], hi: *p.xs.last().unwrap() };
                    let sym = (dom.lo + dom.hi).abs() <= MERGE_TOL * (1.0 + dom.hi.abs());
                    let cod_hi = p.ys.iter().fold(f64::NEG_INFINITY, |m, &v| m.max(v));
                    let cod_lo = p.ys.iter().fold(f64::INFINITY, |m, &v| m.min(v));
                    let csym = (cod_lo + cod_hi).abs() <= MERGE_TOL * (1.0 + cod_hi.abs());
                    CurveRepr::BoundedPwl {
                        a: if sym { Some(dom.hi) } else { None },
                        b: if csym { Some(cod_hi) } else { None },
                        x: p.xs.clone(),
                        y: p.ys.clone(),
                    }
                }
            },
        };
        repr.serialize(s)
    }
}

impl<'de> Deserialize<'de> for MonotoneBijection {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as DeError;
        let repr = CurveRepr::deserialize(d)?;
        let built = match repr {
            CurveRepr::Affine { slope, intercept } => MB::affine(slope, intercept),
            CurveRepr::Pwl { x, y } => MB::pwl(x, y),
            CurveRepr::BoundedPwl { a: Some(a), b: Some(b), x, y } => MB::bounded_pwl(a, b, x, y),
            CurveRepr::BoundedPwl { x, y, .. } => MB::bounded_pwl_general(x, y),
        };
        built.map_err(DeError::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn iv(a: f64, b: f64) -> Interval {
        Interval::new(a, b).unwrap()
    }

    #[test]
    fn affine_eval() {
        let t = MB::affine(0.5, 0.0).unwrap();
        assert_eq!(t.eval(2.0).unwrap(), 1.0);
        let t = MB::affine(-2.0, 0.0).unwrap();
        assert_eq!(t.eval(3.0).unwrap(), -6.0);
    }

    #[test]
    fn pwl_eval_midpoint() {
        let t = MB::pwl(vec![0.0, 1.0], vec![0.0, 2.0]).unwrap();
        assert_eq!(t.eval(0.5).unwrap(), 1.0);
        assert_eq!(t.eval(0.0).unwrap(), 0.0);
        assert_eq!(t.eval(1.0).unwrap(), 2.0);
        // tails continue the terminal slope
        assert_eq!(t.eval(2.0).unwrap(), 4.0);
        assert_eq!(t.eval(-1.0).unwrap(), -2.0);
    }

    #[test]
    fn affine_invert() {
        let t = MB::affine(2.0, 1.0).unwrap();
        assert_eq!(t.invert(), MB::affine(0.5, -0.5).unwrap());
        let r = MB::affine(-1.0, 0.0).unwrap();
        assert_eq!(r.invert(), r);
    }

    #[test]
    fn pwl_invert_swaps_axes() {
        let t = MB::pwl(vec![0.0, 1.0], vec![0.0, 3.0]).unwrap();
        let inv = t.invert();
        assert_eq!(inv, MB::pwl(vec![0.0, 3.0], vec![0.0, 1.0]).unwrap());
        assert_eq!(t.invert().invert(), t);
    }

    #[test]
    fn compose_affine_closed_form() {
        let t2 = MB::affine(2.0, 0.0).unwrap();
        let t1 = MB::affine(0.5, 0.0).unwrap();
        let phi = MB::compose(&t2.invert(), &t1).unwrap();
        assert_eq!(phi, MB::affine(0.25, 0.0).unwrap());

        let refl = MB::affine(-1.0, 0.0).unwrap();
        assert_eq!(MB::compose(&refl, &refl).unwrap(), MB::affine(1.0, 0.0).unwrap());
    }

    #[test]
    fn compose_identity_keeps_structure() {
        let id = MB::identity();
        let t = MB::pwl(vec![-1.0, 0.5, 2.0], vec![-3.0, 0.0, 1.0]).unwrap();
        assert_eq!(MB::compose(&id, &t).unwrap(), t);
        let bounded = MB::bounded_pwl(1.0, 2.0, vec![-1.0, 1.0], vec![-2.0, 2.0]).unwrap();
        assert_eq!(MB::compose(&id, &bounded).unwrap(), bounded);
    }

    #[test]
    fn map_interval_examples() {
        let t = MB::affine(0.25, 0.0).unwrap();
        assert_eq!(t.map_interval(&iv(4.0, 20.0)).unwrap(), iv(1.0, 5.0));
        let r = MB::affine(-2.0, 0.0).unwrap();
        assert_eq!(r.map_interval(&iv(1.0, 2.0)).unwrap(), iv(-4.0, -2.0));
        assert!(Interval::new(3.0, 3.0).is_err());
    }

    #[test]
    fn bounded_domain_enforced() {
        let t = MB::bounded_pwl(1.0, 1.0, vec![-1.0, 1.0], vec![-1.0, 1.0]).unwrap();
        assert!(t.eval(0.5).is_ok());
        assert!(matches!(t.eval(1.0), Err(Error::DomainError { .. })));
        assert!(matches!(t.eval(2.0), Err(Error::DomainError { .. })));
    }

    #[test]
    fn total_composed_with_bounded_is_rejected() {
        let total = MB::affine(2.0, 0.0).unwrap();
        let bounded = MB::bounded_pwl(1.0, 1.0, vec![-1.0, 1.0], vec![-1.0, 1.0]).unwrap();
        // inner total has codomain ℝ, outer bounded cannot receive it
        assert!(matches!(MB::compose(&bounded, &total), Err(Error::DomainMismatch)));
    }

    #[test]
    fn json_round_trip() {
        let t = MB::pwl(vec![0.0, 1.0], vec![0.0, 3.0]).unwrap();
        let s = serde_json::to_string(&t).unwrap();
        let back: MonotoneBijection = serde_json::from_str(&s).unwrap();
        assert_eq!(back, t);

        let b: MonotoneBijection =
            serde_json::from_str(r#"{"type":"bounded_pwl","a":1.0,"b":2.0,"x":[-1.0,1.0],"y":[-2.0,2.0]}"#)
                .unwrap();
        assert!(b.is_bounded());
        let a: MonotoneBijection =
            serde_json::from_str(r#"{"type":"affine","slope":0.5,"intercept":0.0}"#).unwrap();
        assert_eq!(a, MB::affine(0.5, 0.0).unwrap());
    }

    fn arb_affine() -> impl Strategy<Value = MonotoneBijection> {
        (
            prop_oneof![0.05f64..0.9, 1.1f64..8.0],
            prop::bool::ANY,
            -5.0f64..5.0,
        )
            .prop_map(|(mag, neg, c)| {
                MB::affine(if neg { -mag } else { mag }, c).unwrap()
            })
    }

    fn arb_pwl() -> impl Strategy<Value = MonotoneBijection> {
        (
            prop::collection::vec(0.05f64..3.0, 2..6),
            prop::collection::vec(0.05f64..3.0, 2..6),
            -10.0f64..10.0,
            -10.0f64..10.0,
            prop::bool::ANY,
        )
            .prop_map(|(dxs, dys, x0, y0, flip)| {
                let n = dxs.len().min(dys.len());
                let mut xs = vec![x0];
                let mut ys = vec![y0];
                for i in 0..n {
                    xs.push(xs[i] + dxs[i]);
                    ys.push(ys[i] + dys[i]);
                }
                if flip {
                    ys = ys.iter().map(|v| -v).collect();
                }
                MB::pwl(xs, ys).unwrap()
            })
    }

    fn arb_curve() -> impl Strategy<Value = MonotoneBijection> {
        prop_oneof![arb_affine(), arb_pwl()]
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        // invert(T)(T(ξ)) = ξ to relative tolerance
        #[test]
        fn round_trip(t in arb_curve(), x in -50.0f64..50.0) {
            let y = t.eval(x).unwrap();
            let back = t.invert().eval(y).unwrap();
            prop_assert!((back - x).abs() <= 1e-12 * (1.0 + x.abs()));
        }

        // monotonicity witness: sign(T(η)−T(ξ)) matches the cached direction
        #[test]
        fn monotone_witness(t in arb_curve(), a in -50.0f64..50.0, d in 1e-6f64..10.0) {
            let (x, y) = (a, a + d);
            let diff = t.eval(y).unwrap() - t.eval(x).unwrap();
            prop_assert!(diff * t.direction().sign() > 0.0);
        }

        // map_interval commutes with compose
        #[test]
        fn image_commutes_with_compose(
            a in arb_curve(),
            b in arb_curve(),
            lo in -20.0f64..20.0,
            w in 0.1f64..5.0,
        ) {
            let i = iv(lo, lo + w);
            let ab = MB::compose(&a, &b).unwrap();
            let direct = ab.map_interval(&i).unwrap();
            let staged = a.map_interval(&b.map_interval(&i).unwrap()).unwrap();
            let tol = 1e-12 * (1.0 + direct.lo.abs().max(direct.hi.abs()));
            prop_assert!((direct.lo - staged.lo).abs() <= tol);
            prop_assert!((direct.hi - staged.hi).abs() <= tol);
        }

        // composed map agrees pointwise with staged evaluation
        #[test]
        fn compose_pointwise(a in arb_curve(), b in arb_curve(), x in -30.0f64..30.0) {
            let ab = MB::compose(&a, &b).unwrap();
            let direct = ab.eval(x).unwrap();
            let staged = a.eval(b.eval(x).unwrap()).unwrap();
            prop_assert!((direct - staged).abs() <= 1e-9 * (1.0 + staged.abs()));
        }
    }
}
