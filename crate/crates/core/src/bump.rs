//! The standard compactly supported smooth profile and signed sums of its
//! rescalings.  Every certificate in the toolkit is built from this one
//! profile so that identical parameters reproduce identical numbers.

use crate::error::{Error, Result};
use crate::interval::Interval;
use serde::{Deserialize, Serialize};

/// Width below which an interval cannot carry a bump.
pub const MIN_SUPPORT: f64 = 1e-9;

/// `amplitude · exp(1 − 1/(1−t²))` rescaled from `(−1, 1)` to `support`;
/// identically zero outside, sup norm `amplitude` at the support midpoint.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SmoothBump {
    pub support: Interval,
    pub amplitude: f64,
}

impl SmoothBump {
    pub fn new(support: Interval, amplitude: f64) -> Result<Self> {
        if !support.is_bounded() || support.width() < MIN_SUPPORT {
            return Err(Error::DegenerateInterval { lo: support.lo, hi: support.hi });
        }
        Ok(Self { support, amplitude })
    }

    pub fn eval(&self, xi: f64) -> f64 {
        let t = (2.0 * xi - self.support.lo - self.support.hi) / self.support.width();
        let t2 = t * t;
        if t2 >= 1.0 {
            return 0.0;
        }
        self.amplitude * (1.0 - 1.0 / (1.0 - t2)).exp()
    }
}

/// A signed sum of bumps.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct BumpSum {
    pub terms: Vec<SmoothBump>,
}

impl BumpSum {
    pub fn eval(&self, xi: f64) -> f64 {
        self.terms.iter().map(|b| b.eval(xi)).sum()
    }

    /// Hull of the term supports, `None` for the zero sum.
    pub fn support_hull(&self) -> Option<Interval> {
        let mut it = self.terms.iter();
        let first = it.next()?.support;
        Some(it.fold(first, |h, b| h.hull(&b.support)))
    }

    /// Peak locations, the mandatory sample points for nontriviality checks.
    pub fn peaks(&self) -> Vec<f64> {
        self.terms.iter().map(|b| b.support.midpoint()).collect()
    }
}

/// A nonzero smooth function supported in `iv`.
///
/// With `zero_at = Some(c)` and `c` inside `iv`, the sum is built from two
/// mirrored bumps of opposite sign placed symmetrically about `c`, so its
/// value at `c` is exactly zero while the support stays inside `iv`.  When
/// `c` lies outside `iv` a single bump already vanishes there.
pub fn bump(iv: &Interval, zero_at: Option<f64>) -> Result<BumpSum> {
    if !iv.is_bounded() || iv.width() < MIN_SUPPORT {
        return Err(Error::DegenerateInterval { lo: iv.lo, hi: iv.hi });
    }
    match zero_at {
        Some(c) if iv.contains(c) => {
            let r = (c - iv.lo).min(iv.hi - c);
            let near = c + 0.25 * r;
            let far = c + 0.75 * r;
            let plus = SmoothBump::new(Interval::new(near, far)?, 1.0)?;
            let minus = SmoothBump::new(Interval::new(2.0 * c - far, 2.0 * c - near)?, -1.0)?;
            Ok(BumpSum { terms: vec![plus, minus] })
        }
        _ => Ok(BumpSum {
            terms: vec![SmoothBump::new(*iv, 1.0)?],
        }),
    }
}

/// Convenience form matching the axis-cross construction, where the forced
/// zero sits at the origin.
pub fn bump_zero_at_origin(iv: &Interval, zero_at_origin: bool) -> Result<BumpSum> {
    bump(iv, zero_at_origin.then_some(0.0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(a: f64, b: f64) -> Interval {
        Interval::new(a, b).unwrap()
    }

    #[test]
    fn plain_bump_shape() {
        let b = bump(&iv(1.0, 2.0), None).unwrap();
        assert_eq!(b.eval(1.5), 1.0);
        assert_eq!(b.eval(1.0), 0.0);
        assert_eq!(b.eval(2.0), 0.0);
        assert!(b.eval(1.2) > 0.0 && b.eval(1.2) < 1.0);
        // symmetric about the midpoint
        assert!((b.eval(1.3) - b.eval(1.7)).abs() <= 1e-15);
    }

    #[test]
    fn forced_zero_at_origin() {
        let b = bump(&iv(-1.0, 1.0), Some(0.0)).unwrap();
        assert_eq!(b.eval(0.0), 0.0);
        let sup = (0..2000)
            .map(|i| b.eval(-1.0 + i as f64 / 1000.0).abs())
            .fold(0.0f64, f64::max);
        assert!(sup >= 0.5, "sup norm {sup}");
        // antisymmetric placement
        assert!((b.eval(0.5) + b.eval(-0.5)).abs() <= 1e-15);
        // support stays inside the gap
        assert_eq!(b.eval(-0.99), 0.0);
        assert_eq!(b.eval(0.99), 0.0);
    }

    #[test]
    fn zero_point_outside_support_means_single_bump() {
        let b = bump(&iv(1.0, 2.0), Some(0.0)).unwrap();
        assert_eq!(b.terms.len(), 1);
        assert_eq!(b.eval(0.0), 0.0);
    }

    #[test]
    fn degenerate_interval_rejected() {
        let tiny = Interval::new(3.0, 3.0 + 1e-12).unwrap();
        assert!(matches!(bump(&tiny, None), Err(Error::DegenerateInterval { .. })));
    }

    #[test]
    fn smooth_at_support_endpoints() {
        // one-sided difference quotients of every sampled order stay tiny at
        // the endpoint: all derivatives vanish there
        let b = bump(&iv(0.0, 1.0), None).unwrap();
        let h = 1e-3;
        let mut vals: Vec<f64> = (0..8).map(|i| b.eval(i as f64 * h)).collect();
        for order in 1..=4 {
            for i in 0..(vals.len() - 1) {
                vals[i] = (vals[i + 1] - vals[i]) / h;
            }
            vals.pop();
            assert!(
                vals[0].abs() <= 1e-6,
                "order-{order} one-sided quotient at the endpoint: {}",
                vals[0]
            );
        }
    }

    #[test]
    fn exterior_samples_are_exactly_zero() {
        let b = bump(&iv(2.0, 3.0), None).unwrap();
        for i in 0..1000 {
            let x = -10.0 + 0.011 * i as f64;
            if !(2.0 < x && x < 3.0) {
                assert_eq!(b.eval(x), 0.0);
            }
        }
    }
}
