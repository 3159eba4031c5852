use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// An open interval `(lo, hi)` on the real line, possibly unbounded on either
/// side (`lo = -inf` / `hi = +inf`).  Serializes as the pair `[lo, hi]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
}

impl Serialize for Interval {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        (self.lo, self.hi).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Interval {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let (lo, hi) = <(f64, f64)>::deserialize(d)?;
        Interval::new(lo, hi).map_err(serde::de::Error::custom)
    }
}

/// Three-way order of two open intervals: `Before` when the first lies
/// entirely to the left of the second, `After` when entirely to the right,
/// `Overlap` otherwise.  Shared endpoints count as disjoint since the
/// intervals are open.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum IntervalOrder {
    Before,
    After,
    Overlap,
}

impl Interval {
    pub fn new(lo: f64, hi: f64) -> Result<Self> {
        if lo.is_nan() || hi.is_nan() || lo >= hi {
            return Err(Error::InvalidInterval { lo, hi });
        }
        Ok(Self { lo, hi })
    }

    /// The whole real line.
    pub fn all() -> Self {
        Self {
            lo: f64::NEG_INFINITY,
            hi: f64::INFINITY,
        }
    }

    pub fn is_bounded(&self) -> bool {
        self.lo.is_finite() && self.hi.is_finite()
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn midpoint(&self) -> f64 {
        0.5 * (self.lo + self.hi)
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lo < x && x < self.hi
    }

    pub fn contains_interval(&self, other: &Interval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    /// Open intersection, `None` when the interiors are disjoint.
    pub fn intersect(&self, other: &Interval) -> Option<Interval> {
        let lo = self.lo.max(other.lo);
        let hi = self.hi.min(other.hi);
        if lo < hi {
            Some(Interval { lo, hi })
        } else {
            None
        }
    }

    pub fn is_disjoint(&self, other: &Interval) -> bool {
        self.intersect(other).is_none()
    }

    /// Smallest interval containing both.
    pub fn hull(&self, other: &Interval) -> Interval {
        Interval {
            lo: self.lo.min(other.lo),
            hi: self.hi.max(other.hi),
        }
    }

    /// Amount by which the interiors overlap; `<= 0` means disjoint.
    pub fn overlap_width(&self, other: &Interval) -> f64 {
        self.hi.min(other.hi) - self.lo.max(other.lo)
    }
}

/// Exact three-way comparison of open intervals.
pub fn interval_order(a: &Interval, b: &Interval) -> IntervalOrder {
    if a.hi <= b.lo {
        IntervalOrder::Before
    } else if b.hi <= a.lo {
        IntervalOrder::After
    } else {
        IntervalOrder::Overlap
    }
}

impl std::fmt::Display for Interval {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {})", self.lo, self.hi)
    }
}
