//! Decision-and-certificate toolkit for Heisenberg uniqueness pairs.
//!
//! A pair `(Γ, Λ)` of a curve `Γ` and a zero set `Λ` in the plane is a
//! *Heisenberg uniqueness pair* (HUP) when the only finite measure on `Γ`,
//! absolutely continuous with respect to arc length, whose Fourier transform
//! vanishes on `Λ`, is the zero measure.  This crate decides the question for
//! the coordinate cross `Γ₀ = {x₁x₂ = 0}` against zero sets carried by one or
//! two monotone curve graphs, and for the light cone in `ℝⁿ` against the union
//! of two hyperplanes.
//!
//! Every `NOT_HUP` verdict comes with a machine-checkable certificate: an
//! explicit nonzero Fourier pair `(f̂, ĝ)` with `f̂(ξ₁) + ĝ(ξ₂)` vanishing on
//! the zero set, which [`certificate::verify_vanishing`] replays numerically.
//! `HUP` verdicts carry the dynamical evidence (projection density plus a
//! wandering-set certificate for the return map `Φ = T₂⁻¹∘T₁`).

pub mod bump;
pub mod certificate;
pub mod cone;
pub mod curve;
pub mod decide;
pub mod dynamics;
pub mod error;
pub mod gapset;
pub mod interval;
pub mod jsonio;
pub mod wave;

pub use curve::{Direction, MonotoneBijection};
pub use decide::{CrossInstance, Decision, Verdict};
pub use error::Error;
pub use interval::{interval_order, Interval, IntervalOrder};

/// Version tag stamped into every emitted JSON document.
pub const SCHEMA_VERSION: u32 = 1;
